#pragma once

#include <cstdint>

#include "ggasp/oracle.hpp"

namespace ggasp {

// Parameter limits for the exponential solvers. A solver asked to run past
// one of these throws PreconditionError naming the limit.
struct Guards {
    int max_component = 6;       // component size for the small-components DP
    int max_p_components = 14;   // activities for the small-components DP
    int max_p_tree = 10;         // activities for the tree DPs
    int max_p_clique = 6;        // activities for the clique flow solvers
    std::int64_t subset_budget = 10'000'000;  // candidates for core_connected_subsets
    std::int64_t oracle_budget = kDefaultOracleBudget;
};

}  // namespace ggasp
