#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggasp/guards.hpp"
#include "ggasp/instance.hpp"
#include "ggasp/verify.hpp"

namespace ggasp {

enum class Algorithm {
    Auto,
    Brute,
    CopyableCore,
    CopyableIs,
    CopyableNs,
    SmallComp,
    TreeNs,
    TreeIs,
    CliqueFlow,
    CoreSingle,
    CoreSubsets,
};

std::string algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& s);
std::vector<Algorithm> all_algorithms();  // without Auto

// Empty when `a` may run on this instance for concept `c`; otherwise the
// reason it may not. Brute is always allowed here; its budget is enforced
// while it runs.
std::optional<std::string> why_not(const Instance& inst, Concept c, Algorithm a, const Guards& guards);

// First specialized algorithm in priority order, else Brute. The component
// search is only picked when the graph has at least two components.
Algorithm choose_algorithm(const Instance& inst, Concept c, const Guards& guards);

// Why no specialized algorithm applied, one clause per guard.
std::string refusal_reasons(const Instance& inst, Concept c, const Guards& guards);

// Every algorithm allowed for (inst, c), in priority order, Brute last.
std::vector<Algorithm> applicable_algorithms(const Instance& inst, Concept c, const Guards& guards);

// Runs `a` (Auto resolves first). Throws PreconditionError when `a` does
// not apply and BudgetExceeded on overflow.
std::optional<Assignment> run_algorithm(const Instance& inst, Concept c, Algorithm a, const Guards& guards);

}  // namespace ggasp
