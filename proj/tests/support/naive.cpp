#include "naive.hpp"

#include <algorithm>
#include <string>

#include "ggasp/generators.hpp"

namespace naive {

using ggasp::Alternative;
using ggasp::kVoid;

namespace {

int group_size(const Assignment& pi, int a) {
    return static_cast<int>(std::count(pi.begin(), pi.end(), a));
}

Alternative holds(const Assignment& pi, int i) {
    return pi[i] == kVoid ? Alternative{kVoid, 1} : Alternative{pi[i], group_size(pi, pi[i])};
}

bool adjacent(const Instance& inst, int u, int v) {
    for (auto [x, y] : inst.edges())
        if ((x == u && y == v) || (x == v && y == u)) return true;
    return false;
}

// Joining a group, or opening an unused activity alone.
bool move_allowed(const Instance& inst, const Assignment& pi, int i, int b) {
    std::vector<int> group;
    for (int j = 0; j < inst.num_players(); ++j)
        if (pi[j] == b) group.push_back(j);
    if (group.empty()) return true;
    for (int j : group)
        if (adjacent(inst, i, j)) return true;
    return false;
}

bool deviations(const Instance& inst, const Assignment& pi, bool need_consent) {
    const int n = inst.num_players();
    for (int i = 0; i < n; ++i) {
        const Alternative now = holds(pi, i);
        if (pi[i] != kVoid && inst.prefers(i, {kVoid, 1}, now)) return true;
        for (int b = 0; b < inst.num_activities(); ++b) {
            if (b == pi[i] || !move_allowed(inst, pi, i, b)) continue;
            const int size = group_size(pi, b);
            if (!inst.prefers(i, {b, size + 1}, now)) continue;
            bool consent = true;
            if (need_consent)
                for (int j = 0; j < n; ++j)
                    if (pi[j] == b && inst.prefers(j, {b, size}, {b, size + 1})) consent = false;
            if (consent) return true;
        }
    }
    return false;
}

}  // namespace

bool connected(const Instance& inst, const std::vector<int>& set) {
    if (set.empty()) return true;
    std::vector<int> reached{set.front()};
    for (std::size_t x = 0; x < reached.size(); ++x)
        for (int v : set)
            if (std::find(reached.begin(), reached.end(), v) == reached.end() && adjacent(inst, reached[x], v))
                reached.push_back(v);
    return reached.size() == set.size();
}

bool feasible(const Instance& inst, const Assignment& pi) {
    for (int a = 0; a < inst.num_activities(); ++a) {
        std::vector<int> group;
        for (int j = 0; j < inst.num_players(); ++j)
            if (pi[j] == a) group.push_back(j);
        if (!connected(inst, group)) return false;
    }
    return true;
}

bool rational(const Instance& inst, const Assignment& pi) {
    for (int i = 0; i < inst.num_players(); ++i)
        if (inst.prefers(i, {kVoid, 1}, holds(pi, i))) return false;
    return true;
}

bool nash(const Instance& inst, const Assignment& pi) {
    return feasible(inst, pi) && rational(inst, pi) && !deviations(inst, pi, false);
}

bool individual(const Instance& inst, const Assignment& pi) {
    return feasible(inst, pi) && rational(inst, pi) && !deviations(inst, pi, true);
}

bool core(const Instance& inst, const Assignment& pi) {
    if (!feasible(inst, pi) || !rational(inst, pi)) return false;
    const int n = inst.num_players();
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) s.push_back(i);
        if (!connected(inst, s)) continue;
        const int size = static_cast<int>(s.size());
        for (int a = 0; a < inst.num_activities(); ++a) {
            bool covers = true;
            for (int j = 0; j < n; ++j)
                if (pi[j] == a && !((mask >> j) & 1u)) covers = false;
            if (!covers) continue;
            bool all_gain = true;
            for (int i : s) all_gain = all_gain && inst.prefers(i, {a, size}, holds(pi, i));
            if (all_gain) return false;
        }
    }
    return true;
}

bool stable(const Instance& inst, const Assignment& pi, Concept c) {
    switch (c) {
        case Concept::NashStable: return nash(inst, pi);
        case Concept::IndividuallyStable: return individual(inst, pi);
        case Concept::CoreStable: return core(inst, pi);
    }
    return false;
}

bool exists(const Instance& inst, Concept c) {
    return for_each_map(inst, [&](const Assignment& pi) { return stable(inst, pi, c); });
}

std::int64_t count_feasible(const Instance& inst) {
    std::int64_t count = 0;
    for_each_map(inst, [&](const Assignment& pi) {
        count += feasible(inst, pi);
        return false;
    });
    return count;
}

namespace {

using ggasp::InstanceBuilder;
using Pref = InstanceBuilder::Pref;
using Tier = InstanceBuilder::Tier;

std::string label(int i) { return "v" + std::to_string(i); }

void add_edges(std::mt19937_64& rng, InstanceBuilder& b, const std::vector<int>& order, int topology) {
    const int n = static_cast<int>(order.size());
    if (topology == 1) {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) b.add_edge(label(order[x]), label(order[y]));
    } else if (topology == 2) {
        for (int x = 1; x < n; ++x) b.add_edge(label(order[x - 1]), label(order[x]));
    } else {
        for (int x = 1; x < n; ++x) b.add_edge(label(order[x]), label(order[rng() % x]));
    }
}

}  // namespace

Instance random_tree_like(std::mt19937_64& rng, int n, int p, int topology) {
    InstanceBuilder b;
    for (int i = 0; i < n; ++i) b.add_player(label(i));
    for (int a = 0; a < p; ++a) b.add_activity(std::string(1, static_cast<char>('a' + a)));
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    add_edges(rng, b, order, topology);
    for (int i = 0; i < n; ++i) {
        std::vector<Pref> alts;
        for (int a = 0; a < p; ++a)
            for (int s = 1; s <= n; ++s)
                if (rng() % 3 == 0) alts.push_back({std::string(1, static_cast<char>('a' + a)), s});
        alts.push_back(ggasp::void_pref());
        const bool void_last = rng() % 2;
        std::shuffle(alts.begin(), alts.end() - (void_last ? 1 : 0), rng);
        std::vector<Tier> tiers;
        for (const auto& x : alts) {
            if (tiers.empty() || rng() % 4) tiers.push_back({x});
            else tiers.back().push_back(x);
        }
        b.set_preferences(label(i), tiers);
    }
    return b.build().instance;
}

Instance perturbed_gadget(std::mt19937_64& rng, int gadget, int topology, int extra) {
    const int n = 3 + static_cast<int>(rng() % (extra + 1));
    const int p = (gadget == 0 ? 3 : 2) + static_cast<int>(rng() % 2);
    std::vector<std::string> acts = {"a", "b", "c", "d"};
    acts.resize(p);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    InstanceBuilder b;
    for (int i = 0; i < n; ++i) b.add_player(label(i));
    for (const auto& a : acts) b.add_activity(a);
    if (topology == 0) {
        b.add_edge(label(order[0]), label(order[1]));
        b.add_edge(label(order[1]), label(order[2]));
        for (int x = 3; x < n; ++x) b.add_edge(label(order[x]), label(order[rng() % x]));
    } else {
        add_edges(rng, b, order, topology);
    }
    const std::vector<std::vector<Tier>> base =
        gadget == 0 ? std::vector<std::vector<Tier>>{{{{"b", 2}}, {{"a", 1}}, {{"c", 3}}, {{"c", 2}}, {{"c", 1}}},
                                                     {{{"c", 3}}, {{"c", 2}}, {{"a", 2}}, {{"b", 2}}, {{"b", 1}}},
                                                     {{{"c", 3}}, {{"a", 2}}, {{"a", 1}}}}
                    : std::vector<std::vector<Tier>>{{{{"b", 2}}, {{"a", 3}}},
                                                     {{{"a", 2}}, {{"b", 2}}, {{"a", 3}}},
                                                     {{{"a", 3}}, {{"b", 1}}, {{"a", 2}}}};
    for (int x = 0; x < n; ++x) {
        std::vector<Tier> tiers = x < 3 ? base[x] : std::vector<Tier>{};
        const int adds = x < 3 ? static_cast<int>(rng() % 3) : 1 + static_cast<int>(rng() % 4);
        for (int z = 0; z < adds; ++z) {
            Pref alt{acts[rng() % p], 1 + static_cast<int>(rng() % n)};
            tiers.insert(tiers.begin() + static_cast<long>(rng() % (tiers.size() + 1)), Tier{alt});
        }
        b.set_preferences(label(order[x]), tiers);
    }
    return b.build().instance;
}

}  // namespace naive
