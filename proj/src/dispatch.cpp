#include "ggasp/dispatch.hpp"

#include "ggasp/copyable.hpp"
#include "ggasp/core_solvers.hpp"
#include "ggasp/flow.hpp"
#include "ggasp/fpt.hpp"
#include "ggasp/oracle.hpp"

namespace ggasp {

namespace {

const std::vector<std::pair<Algorithm, std::string>>& names() {
    static const std::vector<std::pair<Algorithm, std::string>> table = {
        {Algorithm::Auto, "auto"},
        {Algorithm::Brute, "brute"},
        {Algorithm::CopyableCore, "copyable-core"},
        {Algorithm::CopyableIs, "copyable-is"},
        {Algorithm::CopyableNs, "copyable-ns"},
        {Algorithm::SmallComp, "small-comp"},
        {Algorithm::TreeNs, "tree-ns"},
        {Algorithm::TreeIs, "tree-is"},
        {Algorithm::CliqueFlow, "clique-flow"},
        {Algorithm::CoreSingle, "core-single"},
        {Algorithm::CoreSubsets, "core-subsets"},
    };
    return table;
}

// Dispatch priority.
const std::vector<Algorithm>& priority() {
    static const std::vector<Algorithm> order = {
        Algorithm::CopyableCore, Algorithm::CopyableIs, Algorithm::CopyableNs, Algorithm::TreeNs,
        Algorithm::TreeIs,       Algorithm::SmallComp,  Algorithm::CliqueFlow, Algorithm::CoreSingle,
        Algorithm::CoreSubsets,
    };
    return order;
}

std::string over(const std::string& what, long long have, const std::string& flag, long long limit) {
    return what + " " + std::to_string(have) + " exceeds " + flag + "=" + std::to_string(limit);
}

}  // namespace

std::string algorithm_name(Algorithm a) {
    for (const auto& [alg, name] : names())
        if (alg == a) return name;
    return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& s) {
    for (const auto& [alg, name] : names())
        if (name == s) return alg;
    return std::nullopt;
}

std::vector<Algorithm> all_algorithms() {
    std::vector<Algorithm> out;
    for (const auto& [alg, name] : names())
        if (alg != Algorithm::Auto) out.push_back(alg);
    return out;
}

std::optional<std::string> why_not(const Instance& inst, Concept c, Algorithm a, const Guards& guards) {
    const GraphClass gc = classify(inst.graph());
    const int p = inst.num_activities();
    auto needs = [&](Concept want) -> std::optional<std::string> {
        if (c != want) return "only solves " + concept_name(want);
        return std::nullopt;
    };
    auto needs_copyable_forest = [&]() -> std::optional<std::string> {
        if (!gc.forest) return "graph is not a forest";
        if (!copyable_classes(inst).all_copyable) return "activities are not copyable";
        return std::nullopt;
    };
    std::optional<std::string> r;
    switch (a) {
        case Algorithm::Auto:
        case Algorithm::Brute:
            return std::nullopt;
        case Algorithm::CopyableCore:
            if ((r = needs(Concept::CoreStable))) return r;
            return needs_copyable_forest();
        case Algorithm::CopyableIs:
            if ((r = needs(Concept::IndividuallyStable))) return r;
            return needs_copyable_forest();
        case Algorithm::CopyableNs:
            if ((r = needs(Concept::NashStable))) return r;
            return needs_copyable_forest();
        case Algorithm::TreeNs:
        case Algorithm::TreeIs:
            if ((r = needs(a == Algorithm::TreeNs ? Concept::NashStable : Concept::IndividuallyStable))) return r;
            if (!gc.forest) return "graph is not a forest";
            if (p > guards.max_p_tree) return over("activity count", p, "--max-p", guards.max_p_tree);
            return std::nullopt;
        case Algorithm::SmallComp:
            if (gc.max_component > guards.max_component)
                return over("largest component", gc.max_component, "--max-component", guards.max_component);
            if (p > guards.max_p_components) return over("activity count", p, "--max-p", guards.max_p_components);
            return std::nullopt;
        case Algorithm::CliqueFlow:
            if (c == Concept::CoreStable) return "only solves ns and is";
            if (!gc.clique) return "graph is not a clique";
            if (p > guards.max_p_clique) return over("activity count", p, "--max-p", guards.max_p_clique);
            return std::nullopt;
        case Algorithm::CoreSingle:
            if ((r = needs(Concept::CoreStable))) return r;
            if (p != 1) return "needs exactly one activity";
            return std::nullopt;
        case Algorithm::CoreSubsets: {
            if ((r = needs(Concept::CoreStable))) return r;
            const auto count = core_subset_candidates(inst, guards.subset_budget);
            if (count > guards.subset_budget)
                return "candidate assignments exceed --budget=" + std::to_string(guards.subset_budget);
            return std::nullopt;
        }
    }
    return "unknown algorithm";
}

namespace {

// On a connected graph the component search is a whole-graph search, so
// automatic dispatch keeps it for graphs that actually split.
bool auto_skips(const Instance& inst, Algorithm a) {
    return a == Algorithm::SmallComp && connected_components(inst.graph()).size() < 2;
}

}  // namespace

Algorithm choose_algorithm(const Instance& inst, Concept c, const Guards& guards) {
    for (Algorithm a : priority())
        if (!auto_skips(inst, a) && !why_not(inst, c, a, guards)) return a;
    return Algorithm::Brute;
}

std::string refusal_reasons(const Instance& inst, Concept c, const Guards& guards) {
    std::string out;
    for (Algorithm a : priority()) {
        auto r = why_not(inst, c, a, guards);
        if (!r && auto_skips(inst, a)) r = "graph is connected";
        if (!r) continue;
        if (!out.empty()) out += "; ";
        out += algorithm_name(a) + ": " + *r;
    }
    return out;
}

std::vector<Algorithm> applicable_algorithms(const Instance& inst, Concept c, const Guards& guards) {
    std::vector<Algorithm> out;
    for (Algorithm a : priority())
        if (!why_not(inst, c, a, guards)) out.push_back(a);
    out.push_back(Algorithm::Brute);
    return out;
}

std::optional<Assignment> run_algorithm(const Instance& inst, Concept c, Algorithm a, const Guards& guards) {
    if (a == Algorithm::Auto) a = choose_algorithm(inst, c, guards);
    if (auto r = why_not(inst, c, a, guards)) throw PreconditionError(algorithm_name(a) + ": " + *r);
    switch (a) {
        case Algorithm::Auto:
        case Algorithm::Brute:
            return brute_solve(inst, c, guards.oracle_budget);
        case Algorithm::CopyableCore:
            return core_copyable(inst);
        case Algorithm::CopyableIs:
            return is_copyable(inst);
        case Algorithm::CopyableNs:
            return ns_copyable(inst);
        case Algorithm::SmallComp:
            return solve_small_components(inst, c, guards);
        case Algorithm::TreeNs:
            return ns_tree(inst, guards);
        case Algorithm::TreeIs:
            return is_tree(inst, guards);
        case Algorithm::CliqueFlow:
            return c == Concept::NashStable ? ns_clique(inst, guards) : is_clique(inst, guards);
        case Algorithm::CoreSingle:
            return core_single_activity(inst);
        case Algorithm::CoreSubsets:
            return core_connected_subsets(inst, guards);
    }
    return std::nullopt;
}

}  // namespace ggasp
