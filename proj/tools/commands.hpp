#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ggasp/dispatch.hpp"

namespace ggasp::cli {

enum ExitCode { kFound = 0, kNone = 1, kRefused = 2, kInvalid = 3 };

struct SolveOptions {
    Concept concept_ = Concept::NashStable;
    Algorithm algorithm = Algorithm::Auto;
    Guards guards;
    bool cross_check = false;
    std::uint64_t seed = 0;
};

struct SolveOutcome {
    int exit_code = kRefused;
    std::string report;  // JSON, empty unless exit_code is kFound or kNone
    std::string error;
};

SolveOutcome solve(const Instance& inst, const SolveOptions& opt);

// Entire command line: solve | verify | gen | bench.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ggasp::cli
