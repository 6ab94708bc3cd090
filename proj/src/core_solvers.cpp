#include "ggasp/core_solvers.hpp"

#include <string>

#include "ggasp/verify.hpp"

namespace ggasp {

Assignment core_single_activity(const Instance& inst) {
    if (inst.num_activities() != 1)
        throw PreconditionError("needs exactly one activity, found " + std::to_string(inst.num_activities()));
    const int n = inst.num_players();
    Assignment pi(n, kVoid);
    for (int s = n; s >= 1; --s) {
        NodeSet willing;
        for (int i = 0; i < n; ++i)
            if (inst.weakly_prefers(i, {0, s}, void_alt())) willing.push_back(i);
        auto comp = largest_connected_superset(inst.graph(), willing, {});
        if (!comp || static_cast<int>(comp->size()) < s) continue;
        for (int i : trim_connected(inst.graph(), *comp, {}, s)) pi[i] = 0;
        break;
    }
    return pi;
}

namespace {

// Connected coalitions, in enumeration order, whose members all weakly
// prefer the activity at that size to staying alone.
std::vector<std::vector<NodeSet>> acceptable_coalitions(const Instance& inst, std::int64_t cap) {
    ConnectedSubsets subsets(inst.graph(), std::nullopt, cap);
    std::vector<std::vector<NodeSet>> out(inst.num_activities());
    while (auto s = subsets.next()) {
        const int size = static_cast<int>(s->size());
        for (int a = 0; a < inst.num_activities(); ++a) {
            bool ok = true;
            for (int i : *s) ok = ok && inst.weakly_prefers(i, {a, size}, void_alt());
            if (ok) out[a].push_back(*s);
        }
    }
    return out;
}

std::int64_t candidate_count(const std::vector<std::vector<NodeSet>>& lists, std::int64_t cap) {
    std::int64_t total = 1;
    for (const auto& l : lists) {
        const auto factor = static_cast<std::int64_t>(l.size()) + 1;
        if (total > (cap + 1) / factor) return cap + 1;
        total *= factor;
    }
    return std::min(total, cap + 1);
}

}  // namespace

std::int64_t core_subset_candidates(const Instance& inst, std::int64_t cap) {
    try {
        return candidate_count(acceptable_coalitions(inst, cap), cap);
    } catch (const BudgetExceeded&) {
        return cap + 1;
    }
}

std::optional<Assignment> core_connected_subsets(const Instance& inst, const Guards& guards) {
    const auto lists = acceptable_coalitions(inst, guards.subset_budget);
    if (candidate_count(lists, guards.subset_budget) > guards.subset_budget)
        throw BudgetExceeded("more than " + std::to_string(guards.subset_budget) + " candidate assignments");
    const int p = inst.num_activities();
    Assignment pi(inst.num_players(), kVoid);
    // choice[a] = 0 leaves a empty, otherwise picks lists[a][choice[a]-1]
    auto search = [&](auto&& self, int a) -> bool {
        if (a == p) return !find_core_block(inst, pi);
        if (self(self, a + 1)) return true;
        for (const auto& s : lists[a]) {
            bool free = true;
            for (int i : s) free = free && pi[i] == kVoid;
            if (!free) continue;
            for (int i : s) pi[i] = a;
            if (self(self, a + 1)) return true;
            for (int i : s) pi[i] = kVoid;
        }
        return false;
    };
    if (search(search, 0)) return pi;
    return std::nullopt;
}

}  // namespace ggasp
