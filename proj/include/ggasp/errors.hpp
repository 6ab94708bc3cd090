#pragma once

#include <stdexcept>
#include <string>

namespace ggasp {

// Malformed instance or assignment document.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed document with inconsistent contents (dangling ids, bad sizes).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A solver was invoked on an instance outside its precondition.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration hit its visit budget before finishing.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ggasp
