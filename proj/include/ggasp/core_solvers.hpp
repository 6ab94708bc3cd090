#pragma once

#include <cstdint>
#include <optional>

#include "ggasp/guards.hpp"
#include "ggasp/instance.hpp"

namespace ggasp {

// Any graph, exactly one activity. Always succeeds.
Assignment core_single_activity(const Instance& inst);

// Tries every way of giving each activity a connected coalition (or nobody)
// whose members all accept it. Throws BudgetExceeded when the candidate
// count exceeds guards.subset_budget.
std::optional<Assignment> core_connected_subsets(const Instance& inst, const Guards& guards = {});

// Product over activities of (number of acceptable coalitions + 1),
// saturating at `cap + 1`.
std::int64_t core_subset_candidates(const Instance& inst, std::int64_t cap);

}  // namespace ggasp
