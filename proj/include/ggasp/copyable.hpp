#pragma once

#include <optional>

#include "ggasp/instance.hpp"

namespace ggasp {

// All three require every activity class to hold at least n copies and the
// graph to be a forest; otherwise they throw PreconditionError.
void require_copyable_forest(const Instance& inst);

// Always succeed: a core stable (resp. individually stable) assignment
// exists under the precondition.
Assignment core_copyable(const Instance& inst);
Assignment is_copyable(const Instance& inst);

// Absent means no Nash stable assignment exists.
std::optional<Assignment> ns_copyable(const Instance& inst);

}  // namespace ggasp
