#include "ggasp/copyable.hpp"

#include <algorithm>

namespace ggasp {

void require_copyable_forest(const Instance& inst) {
    if (!copyable_classes(inst).all_copyable)
        throw PreconditionError("some activity class has fewer than n interchangeable copies");
    if (!classify(inst.graph()).forest) throw PreconditionError("the graph is not a forest");
}

namespace {

// Guaranteed activity (class representative or kVoid) and coalition per node.
struct Guarantee {
    std::vector<int> act;
    std::vector<NodeSet> group;

    explicit Guarantee(int n) : act(n, kVoid), group(n) {
        for (int i = 0; i < n; ++i) group[i] = {i};
    }
    Alternative alt(int i) const { return {act[i], static_cast<int>(group[i].size())}; }
};

// Hands out unused copies of each class in ascending id order.
class CopyPool {
public:
    explicit CopyPool(const CopyableClasses& cc) : cc_(&cc), next_(cc.classes.size(), 0) {}
    int take(int representative) {
        if (representative == kVoid) return kVoid;
        int c = cc_->class_of[representative];
        return cc_->classes[c][next_[c]++];
    }

private:
    const CopyableClasses* cc_;
    std::vector<std::size_t> next_;
};

// Top-down phase: every remaining subroot hands its guaranteed coalition a
// fresh copy of its guaranteed activity.
Assignment relabel(const Instance& inst, const std::vector<RootedTree>& forest, const Guarantee& g,
                   const CopyableClasses& cc) {
    Assignment pi(inst.num_players(), kVoid);
    std::vector<char> done(inst.num_players(), 0);
    CopyPool pool(cc);
    for (const auto& tree : forest)
        for (int r : tree.preorder) {
            if (done[r]) continue;
            int a = pool.take(g.act[r]);
            for (int v : g.group[r]) {
                pi[v] = a;
                done[v] = 1;
            }
        }
    return pi;
}

std::vector<int> representatives(const CopyableClasses& cc) {
    std::vector<int> reps;
    for (const auto& c : cc.classes) reps.push_back(c.front());
    return reps;
}

}  // namespace

Assignment core_copyable(const Instance& inst) {
    require_copyable_forest(inst);
    const int n = inst.num_players();
    const auto cc = copyable_classes(inst);
    const auto reps = representatives(cc);
    const auto forest = root_forest(inst.graph());
    Guarantee g(n);
    for (const auto& tree : forest)
        for (int i : tree.by_height()) {
            const NodeSet below = tree.desc(i);
            for (int a : reps)
                for (int k = 1; k <= static_cast<int>(below.size()); ++k) {
                    const Alternative x{a, k};
                    if (!inst.prefers(i, x, g.alt(i))) continue;
                    NodeSet agree;
                    for (int j : below)
                        if (j == i || inst.weakly_prefers(j, x, g.alt(j))) agree.push_back(j);
                    auto comp = largest_connected_superset(inst.graph(), agree, {i});
                    if (!comp || static_cast<int>(comp->size()) < k) continue;
                    g.group[i] = trim_connected(inst.graph(), *comp, {i}, k);
                    g.act[i] = a;
                }
        }
    return relabel(inst, forest, g, cc);
}

Assignment is_copyable(const Instance& inst) {
    require_copyable_forest(inst);
    const int n = inst.num_players();
    const auto cc = copyable_classes(inst);
    const auto reps = representatives(cc);
    const auto forest = root_forest(inst.graph());
    Guarantee g(n);
    auto accepts_growth = [&](const NodeSet& s, int a) {
        const int size = static_cast<int>(s.size());
        for (int m : s)
            if (!inst.weakly_prefers(m, {a, size + 1}, {a, size})) return false;
        return true;
    };
    for (const auto& tree : forest)
        for (int i : tree.by_height()) {
            std::vector<int> open;  // children whose coalition would accept i
            for (int j : tree.children[i])
                if (g.act[j] != kVoid && accepts_growth(g.group[j], g.act[j])) open.push_back(j);
            auto joined = [&](int j) { return Alternative{g.act[j], static_cast<int>(g.group[j].size()) + 1}; };

            int solo = kVoid;
            for (int b : reps)
                if (inst.prefers(i, {b, 1}, {solo, 1})) solo = b;
            bool alone = true;
            for (int j : open)
                if (!inst.prefers(i, {solo, 1}, joined(j))) alone = false;
            if (alone) {
                g.act[i] = solo;
                g.group[i] = {i};
            } else {
                int best = open.front();
                for (int j : open)
                    if (inst.prefers(i, joined(j), joined(best))) best = j;
                g.act[i] = g.act[best];
                g.group[i] = g.group[best];
                g.group[i].insert(std::lower_bound(g.group[i].begin(), g.group[i].end(), i), i);
            }

            while (g.act[i] != kVoid && accepts_growth(g.group[i], g.act[i])) {
                const int a = g.act[i], size = static_cast<int>(g.group[i].size());
                int pick = -1;
                for (int m : g.group[i])
                    for (int j : tree.children[m])
                        if (!std::binary_search(g.group[i].begin(), g.group[i].end(), j) &&
                            inst.prefers(j, {a, size + 1}, g.alt(j)) && (pick < 0 || j < pick))
                            pick = j;
                if (pick < 0) break;
                g.group[i].insert(std::lower_bound(g.group[i].begin(), g.group[i].end(), pick), pick);
            }
        }
    return relabel(inst, forest, g, cc);
}

std::optional<Assignment> ns_copyable(const Instance& inst) {
    require_copyable_forest(inst);
    const int n = inst.num_players();
    const auto cc = copyable_classes(inst);
    const auto reps = representatives(cc);
    const int nalt = 1 + static_cast<int>(reps.size()) * n;
    auto alt_of = [&](int x) { return x == 0 ? void_alt() : Alternative{reps[(x - 1) / n], (x - 1) % n + 1}; };
    const auto forest = root_forest(inst.graph());

    // table[i][c][x][t], t in [1, n]; choice records how an entry became true:
    // 0 base, >0 merged child share, <0 separated child alternative -(x+1).
    auto idx = [&](int c, int x, int t) { return (static_cast<std::size_t>(c) * nalt + x) * (n + 1) + t; };
    std::vector<std::vector<char>> table(n);
    std::vector<std::vector<int>> choice(n);
    std::vector<std::vector<int>> complete(n);  // x with table[j][last][x][size] true

    for (const auto& tree : forest)
        for (int i : tree.by_height()) {
            const auto& ch = tree.children[i];
            const int nc = static_cast<int>(ch.size());
            table[i].assign(idx(nc + 1, 0, 0), 0);
            choice[i].assign(idx(nc + 1, 0, 0), 0);
            for (int x = 0; x < nalt; ++x) {
                const Alternative ak = alt_of(x);
                bool ok = inst.weakly_prefers(i, ak, void_alt());
                for (int b : reps) ok = ok && inst.weakly_prefers(i, ak, {b, 1});
                table[i][idx(0, x, 1)] = ok;
            }
            for (int c = 1; c <= nc; ++c) {
                const int j = ch[c - 1];
                const int jc = static_cast<int>(tree.children[j].size());
                for (int x = 0; x < nalt; ++x) {
                    const Alternative ak = alt_of(x);
                    for (int t = 1; t <= ak.size; ++t) {
                        bool hit = false;
                        int why = 0;
                        for (int s = 1; s < t && !hit; ++s)
                            if (table[i][idx(c - 1, x, t - s)] && table[j][idx(jc, x, s)]) {
                                hit = true;
                                why = s;
                            }
                        if (!hit && table[i][idx(c - 1, x, t)])
                            for (int y : complete[j]) {
                                const Alternative bl = alt_of(y);
                                bool i_stays = bl.activity == kVoid ||
                                               inst.weakly_prefers(i, ak, {bl.activity, bl.size + 1});
                                bool j_stays = ak.activity == kVoid ||
                                               inst.weakly_prefers(j, bl, {ak.activity, ak.size + 1});
                                if (i_stays && j_stays) {
                                    hit = true;
                                    why = -(y + 1);
                                    break;
                                }
                            }
                        if (hit) {
                            table[i][idx(c, x, t)] = 1;
                            choice[i][idx(c, x, t)] = why;
                        }
                    }
                }
            }
            for (int x = 0; x < nalt; ++x)
                if (table[i][idx(nc, x, alt_of(x).size)]) complete[i].push_back(x);
        }

    // Rebuild groups top-down, then give each group its own copy.
    std::vector<int> group_of(n, -1), group_alt;
    std::vector<const RootedTree*> owner(n, nullptr);
    for (const auto& tree : forest)
        for (int v : tree.preorder) owner[v] = &tree;
    auto build = [&](auto&& self, int i, int x, int t, int gid) -> void {
        group_of[i] = gid;
        const auto& ch = owner[i]->children[i];
        for (int c = static_cast<int>(ch.size()); c >= 1; --c) {
            const int j = ch[c - 1];
            const int why = choice[i][idx(c, x, t)];
            if (why > 0) {
                self(self, j, x, why, gid);
                t -= why;
            } else {
                const int y = -why - 1;
                group_alt.push_back(y);
                self(self, j, y, alt_of(y).size, static_cast<int>(group_alt.size()) - 1);
            }
        }
    };
    for (const auto& tree : forest) {
        if (complete[tree.root].empty()) return std::nullopt;
        const int x = complete[tree.root].front();
        group_alt.push_back(x);
        build(build, tree.root, x, alt_of(x).size, static_cast<int>(group_alt.size()) - 1);
    }
    CopyPool pool(cc);
    std::vector<int> copy(group_alt.size());
    for (std::size_t gidx = 0; gidx < group_alt.size(); ++gidx) copy[gidx] = pool.take(alt_of(group_alt[gidx]).activity);
    Assignment pi(n, kVoid);
    for (int v = 0; v < n; ++v) pi[v] = copy[group_of[v]];
    return pi;
}

}  // namespace ggasp
