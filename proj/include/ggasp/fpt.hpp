#pragma once

#include <optional>

#include "ggasp/guards.hpp"
#include "ggasp/instance.hpp"
#include "ggasp/verify.hpp"

namespace ggasp {

// Exact for NashStable and IndividuallyStable on graphs whose components
// are at most guards.max_component players. Absent means none exists.
std::optional<Assignment> solve_small_components(const Instance& inst, Concept c, const Guards& guards = {});
std::optional<Assignment> core_small_components(const Instance& inst, const Guards& guards = {});

// Exact on forests with at most guards.max_p_tree activities.
std::optional<Assignment> ns_tree(const Instance& inst, const Guards& guards = {});
std::optional<Assignment> is_tree(const Instance& inst, const Guards& guards = {});

}  // namespace ggasp
