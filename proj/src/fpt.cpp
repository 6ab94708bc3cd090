#include "ggasp/fpt.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>

namespace ggasp {

namespace {

using Mask = std::uint32_t;

bool has(Mask m, int a) { return (m >> a) & 1u; }
Mask bit(int a) { return Mask(1) << a; }

void check_activity_guard(const Instance& inst, int limit, const char* flag) {
    if (inst.num_activities() > limit)
        throw PreconditionError("instance has " + std::to_string(inst.num_activities()) + " activities, above " +
                                flag + "=" + std::to_string(limit));
}

// A per-component answer: a full-length assignment whose entries matter only
// on that component's players.
using LocalSolver = std::function<std::optional<Assignment>(Mask used_overall, Mask used_here)>;

// Combines components left to right: reach[c][B'] holds the activity set the
// c-th component took on the way to B'. The overall activity set B is
// enumerated in ascending order; the first B that closes yields the answer.
std::optional<Assignment> combine(const Instance& inst, const std::vector<NodeSet>& comps,
                                  std::vector<LocalSolver>& solve) {
    const int p = inst.num_activities(), k = static_cast<int>(comps.size());
    const Mask all = (Mask(1) << p) - 1;
    const std::size_t width = std::size_t(1) << p;
    std::vector<std::vector<std::int32_t>> from(k + 1, std::vector<std::int32_t>(width));
    for (Mask B = 0;; ++B) {
        for (auto& layer : from) std::fill(layer.begin(), layer.end(), -1);
        from[0][0] = 0;
        for (int c = 0; c < k; ++c)
            for (Mask used = B;; used = (used - 1) & B) {
                if (from[c][used] >= 0) {
                    const Mask rest = B & ~used;
                    for (Mask q = rest;; q = (q - 1) & rest) {
                        if (from[c + 1][used | q] < 0 && solve[c](B, q)) from[c + 1][used | q] = static_cast<std::int32_t>(q);
                        if (q == 0) break;
                    }
                }
                if (used == 0) break;
            }
        if (from[k][B] >= 0) {
            Assignment pi(inst.num_players(), kVoid);
            Mask cur = B;
            for (int c = k - 1; c >= 0; --c) {
                const Mask q = static_cast<Mask>(from[c + 1][cur]);
                const Assignment local = *solve[c](B, q);
                for (int v : comps[c]) pi[v] = local[v];
                cur &= ~q;
            }
            return pi;
        }
        if (B == all) break;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- small components

class ComponentSearch {
public:
    ComponentSearch(const Instance& inst, Concept c, NodeSet comp) : inst_(&inst), concept_(c), comp_(std::move(comp)) {}

    std::optional<Assignment> operator()(Mask B, Mask Q) {
        auto key = std::make_pair(B, Q);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, search(B, Q)).first;
        return it->second;
    }

private:
    std::optional<Assignment> search(Mask B, Mask Q) const {
        const int m = static_cast<int>(comp_.size());
        if (std::popcount(Q) > m) return std::nullopt;
        std::vector<int> acts{kVoid};
        for (int a = 0; a < inst_->num_activities(); ++a)
            if (has(Q, a)) acts.push_back(a);
        const int base = static_cast<int>(acts.size());
        std::vector<int> digit(m, 0);
        Assignment pi(inst_->num_players(), kVoid);
        while (true) {
            Mask used = 0;
            for (int x = 0; x < m; ++x) {
                pi[comp_[x]] = acts[digit[x]];
                if (digit[x] > 0) used |= bit(acts[digit[x]]);
            }
            if (used == Q && acceptable(pi, B, Q)) return pi;
            int x = m - 1;
            while (x >= 0 && ++digit[x] == base) digit[x--] = 0;
            if (x < 0) return std::nullopt;
        }
    }

    bool acceptable(const Assignment& pi, Mask B, Mask Q) const {
        const Instance& inst = *inst_;
        const int p = inst.num_activities();
        std::vector<int> sz(p, 0);
        for (int v : comp_)
            if (pi[v] != kVoid) ++sz[pi[v]];
        for (int a = 0; a < p; ++a)
            if (has(Q, a) && !is_connected_subset(inst.graph(), members(pi, a))) return false;
        auto cur = [&](int v) { return pi[v] == kVoid ? void_alt() : Alternative{pi[v], sz[pi[v]]}; };
        for (int v : comp_)
            if (inst.prefers(v, void_alt(), cur(v))) return false;

        if (concept_ == Concept::CoreStable) {
            const int m = static_cast<int>(comp_.size());
            for (int b = 0; b < p; ++b) {
                if (!has(Q, b) && has(B, b)) continue;
                const NodeSet held = members(pi, b);
                for (int s = std::max<int>(1, static_cast<int>(held.size())); s <= m; ++s) {
                    NodeSet eager;
                    for (int v : comp_)
                        if (inst.prefers(v, {b, s}, cur(v))) eager.push_back(v);
                    if (!std::includes(eager.begin(), eager.end(), held.begin(), held.end())) continue;
                    auto block = largest_connected_superset(inst.graph(), eager, held);
                    if (block && static_cast<int>(block->size()) >= s) return false;
                }
            }
            return true;
        }

        for (int v : comp_)
            for (int b = 0; b < p; ++b) {
                if (b == pi[v]) continue;
                if (has(Q, b)) {
                    bool touching = false;
                    for (int w : inst.graph().neighbors(v)) touching = touching || pi[w] == b;
                    if (!touching || !inst.prefers(v, {b, sz[b] + 1}, cur(v))) continue;
                    bool accepted = true;
                    if (concept_ == Concept::IndividuallyStable)
                        for (int w : comp_)
                            if (pi[w] == b && !inst.weakly_prefers(w, {b, sz[b] + 1}, {b, sz[b]})) accepted = false;
                    if (accepted) return false;
                } else if (!has(B, b) && inst.prefers(v, {b, 1}, cur(v))) {
                    return false;
                }
            }
        return true;
    }

    const Instance* inst_;
    Concept concept_;
    NodeSet comp_;
    std::map<std::pair<Mask, Mask>, std::optional<Assignment>> cache_;
};

std::optional<Assignment> small_components(const Instance& inst, Concept c, const Guards& guards) {
    check_activity_guard(inst, guards.max_p_components, "--max-p");
    auto comps = connected_components(inst.graph());
    for (const auto& comp : comps)
        if (static_cast<int>(comp.size()) > guards.max_component)
            throw PreconditionError("a component has " + std::to_string(comp.size()) + " players, above --max-component=" +
                                    std::to_string(guards.max_component));
    std::vector<LocalSolver> solvers;
    for (const auto& comp : comps) solvers.emplace_back(ComponentSearch(inst, c, comp));
    return combine(inst, comps, solvers);
}

// ---------------------------------------------------------------- trees

// Tables for one rooted tree. An entry is keyed by (B, i, B', a, k) and holds,
// for every t, whether some assignment of desc(i) uses exactly B', puts i in
// an a-group of final size k with t members inside desc(i), and leaves no
// deviation inside desc(i) except possibly into i's group. For individual
// stability three flavors are kept: plain, "has a member who refuses growth"
// and "no adjacent outsider wants in".
class TreeDp {
public:
    enum Flavor { Plain = 0, Refusing = 1, Unwanted = 2 };

    TreeDp(const Instance& inst, const RootedTree& tree, bool individual)
        : inst_(&inst), tree_(&tree), individual_(individual), p_(inst.num_activities()) {}

    std::optional<Assignment> operator()(Mask B, Mask Q) {
        const int r = tree_->root, size = tree_->subtree_size[r];
        for (int a = -1; a < p_; ++a) {
            if (a >= 0 && !has(Q, a)) continue;
            for (int k = 1; k <= (a < 0 ? 1 : size); ++k) {
                const Entry& e = entry(r, B, Q, a, k);
                int flavor = -1;
                if (!individual_ && e.f[Plain][k]) flavor = Plain;
                if (individual_ && e.f[Refusing][k]) flavor = Refusing;
                if (individual_ && flavor < 0 && e.f[Unwanted][k]) flavor = Unwanted;
                if (flavor < 0) continue;
                Assignment pi(inst_->num_players(), kVoid);
                build(r, B, Q, a, k, k, flavor, pi);
                return pi;
            }
        }
        return std::nullopt;
    }

private:
    struct Entry {
        std::vector<char> f[3];  // indexed by t
    };

    // Inner table over the children of i for one ordered partition: state
    // (parts consumed, a-players placed below i) per flavor, one layer per child.
    struct Layer {
        int parts = 0, width = 0;
        std::vector<char> f[3];
        char& at(int flavor, int q, int l) { return f[flavor][static_cast<std::size_t>(q) * width + l]; }
    };

    struct SepInfo {
        bool any = false;      // the separated child group is safe from i
        bool unwanted = false; // ... and the child does not want to join i
    };

    struct Key {
        Mask B, Bp;
        int i, a, k;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& x) const {
            std::uint64_t h = (std::uint64_t(x.B) << 32) | x.Bp;
            h = h * 0x9E3779B97F4A7C15ull ^ ((std::uint64_t(std::uint32_t(x.i)) << 32) | std::uint32_t(x.k));
            h = h * 0x9E3779B97F4A7C15ull ^ std::uint32_t(x.a + 1);
            return static_cast<std::size_t>(h ^ (h >> 29));
        }
    };

    const Entry& entry(int i, Mask B, Mask Bp, int a, int k) {
        const Key key{B, Bp, i, a, k};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Entry e = compute(i, B, Bp, a, k);
        return memo_.emplace(key, std::move(e)).first->second;
    }

    bool admissible(int i, Mask B, Mask Bp, int a, int k) const {
        if (a < 0 ? k != 1 : !has(Bp, a)) return false;
        const Alternative ak{a < 0 ? kVoid : a, k};
        if (!inst_->weakly_prefers(i, ak, void_alt())) return false;
        for (int b = 0; b < p_; ++b)
            if (!has(B, b) && !inst_->weakly_prefers(i, ak, {b, 1})) return false;
        return true;
    }

    static std::vector<std::vector<Mask>> ordered_partitions(Mask S, int max_parts) {
        std::vector<int> elems;
        for (int a = 0; a < 32; ++a)
            if (has(S, a)) elems.push_back(a);
        std::vector<std::vector<Mask>> out;
        if (elems.empty()) {
            out.push_back({});
            return out;
        }
        const int e = static_cast<int>(elems.size());
        std::vector<int> rgs(e, 0);
        while (true) {
            int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
            if (blocks <= max_parts) {
                std::vector<Mask> parts(blocks, 0);
                for (int x = 0; x < e; ++x) parts[rgs[x]] |= bit(elems[x]);
                std::sort(parts.begin(), parts.end());
                do out.push_back(parts);
                while (std::next_permutation(parts.begin(), parts.end()));
            }
            // next restricted growth string
            int x = e - 1;
            while (x > 0) {
                int limit = *std::max_element(rgs.begin(), rgs.begin() + x) + 1;
                if (rgs[x] < limit) break;
                --x;
            }
            if (x == 0) break;
            ++rgs[x];
            std::fill(rgs.begin() + x + 1, rgs.end(), 0);
        }
        return out;
    }

    SepInfo separated(int i, int j, Mask B, Mask Q, Alternative ak) {
        SepInfo s;
        const int limit = tree_->subtree_size[j];
        for (int b = -1; b < p_; ++b) {
            if (b >= 0 && !has(Q, b)) continue;
            for (int x = 1; x <= (b < 0 ? 1 : limit); ++x) {
                const Entry& ce = entry(j, B, Q, b, x);
                const Alternative bx{b < 0 ? kVoid : b, x};
                const bool i_stays = b < 0 || inst_->weakly_prefers(i, ak, {b, x + 1});
                const bool j_stays = ak.activity == kVoid || inst_->weakly_prefers(j, bx, {ak.activity, ak.size + 1});
                bool group_ok;
                if (individual_)
                    group_ok = ce.f[Refusing][x] || (ce.f[Unwanted][x] && i_stays);
                else
                    group_ok = ce.f[Plain][x] && i_stays && j_stays;
                s.any = s.any || group_ok;
                s.unwanted = s.unwanted || (group_ok && j_stays);
            }
        }
        return s;
    }

    std::vector<Layer> inner(int i, Mask B, int a, int k, const std::vector<Mask>& parts, bool refuses) {
        const auto& ch = tree_->children[i];
        const int m = static_cast<int>(parts.size());
        const Alternative ak{a < 0 ? kVoid : a, k};
        auto fresh = [&] {
            Layer L;
            L.parts = m;
            L.width = k;
            for (auto& f : L.f) f.assign(static_cast<std::size_t>(m + 1) * k, 0);
            return L;
        };
        std::vector<Layer> layers;
        layers.push_back(fresh());
        layers[0].at(Plain, 0, 0) = 1;
        layers[0].at(Refusing, 0, 0) = refuses;
        layers[0].at(Unwanted, 0, 0) = 1;
        for (std::size_t c = 0; c < ch.size(); ++c) {
            const int j = ch[c];
            Layer next = fresh();
            Layer& prev = layers.back();
            const int limit = tree_->subtree_size[j];
            for (int q = 0; q <= m; ++q)
                for (int step = 0; step <= 1; ++step) {
                    if (q + step > m) continue;
                    const Mask Q = step ? parts[q] : 0;
                    const int nq = q + step;
                    SepInfo s = separated(i, j, B, Q, ak);
                    for (int l = 0; l < k; ++l) {
                        if (s.any) {
                            next.at(Plain, nq, l) |= prev.at(Plain, q, l);
                            next.at(Refusing, nq, l) |= prev.at(Refusing, q, l);
                        }
                        if (s.unwanted) next.at(Unwanted, nq, l) |= prev.at(Unwanted, q, l);
                    }
                    if (a < 0) continue;
                    for (int x = 1; x <= std::min(limit, k - 1); ++x) {
                        const Entry& je = entry(j, B, Q | bit(a), a, k);
                        for (int l = 0; l + x < k; ++l) {
                            next.at(Plain, nq, l + x) |= prev.at(Plain, q, l) && je.f[Plain][x];
                            next.at(Refusing, nq, l + x) |= (prev.at(Refusing, q, l) && je.f[Plain][x]) ||
                                                            (prev.at(Plain, q, l) && je.f[Refusing][x]);
                            next.at(Unwanted, nq, l + x) |= prev.at(Unwanted, q, l) && je.f[Unwanted][x];
                        }
                    }
                }
            layers.push_back(std::move(next));
        }
        return layers;
    }

    Entry compute(int i, Mask B, Mask Bp, int a, int k) {
        Entry e;
        for (auto& f : e.f) f.assign(k + 1, 0);
        if (!admissible(i, B, Bp, a, k)) return e;
        const Mask S = a < 0 ? Bp : Bp & ~bit(a);
        const bool refuses = a < 0 || inst_->prefers(i, {a, k}, {a, k + 1});
        const int nc = static_cast<int>(tree_->children[i].size());
        for (const auto& parts : ordered_partitions(S, nc)) {
            auto layers = inner(i, B, a, k, parts, refuses);
            Layer& last = layers.back();
            const int m = static_cast<int>(parts.size());
            for (int t = 1; t <= k; ++t)
                for (int fl = 0; fl < 3; ++fl) e.f[fl][t] |= last.at(fl, m, t - 1);
        }
        if (!individual_) {
            e.f[Refusing] = e.f[Plain];
            e.f[Unwanted] = e.f[Plain];
        }
        return e;
    }

    // Chooses the separated child's alternative matching `need` (the parent's flavor).
    std::pair<Alternative, int> pick_separated(int i, int j, Mask B, Mask Q, Alternative ak, int need) {
        const int limit = tree_->subtree_size[j];
        for (int b = -1; b < p_; ++b) {
            if (b >= 0 && !has(Q, b)) continue;
            for (int x = 1; x <= (b < 0 ? 1 : limit); ++x) {
                const Entry& ce = entry(j, B, Q, b, x);
                const Alternative bx{b < 0 ? kVoid : b, x};
                const bool i_stays = b < 0 || inst_->weakly_prefers(i, ak, {b, x + 1});
                const bool j_stays = ak.activity == kVoid || inst_->weakly_prefers(j, bx, {ak.activity, ak.size + 1});
                if (need == Unwanted && !j_stays) continue;
                if (!individual_) {
                    if (ce.f[Plain][x] && i_stays && j_stays) return {bx, Plain};
                } else if (ce.f[Refusing][x]) {
                    return {bx, Refusing};
                } else if (ce.f[Unwanted][x] && i_stays) {
                    return {bx, Unwanted};
                }
            }
        }
        throw std::logic_error("tree table reconstruction lost its witness");
    }

    void build(int i, Mask B, Mask Bp, int a, int k, int t, int flavor, Assignment& pi) {
        pi[i] = a < 0 ? kVoid : a;
        const auto& ch = tree_->children[i];
        const Mask S = a < 0 ? Bp : Bp & ~bit(a);
        const bool refuses = a < 0 || inst_->prefers(i, {a, k}, {a, k + 1});
        const Alternative ak{a < 0 ? kVoid : a, k};
        const int fl_final = individual_ ? flavor : Plain;
        for (const auto& parts : ordered_partitions(S, static_cast<int>(ch.size()))) {
            auto layers = inner(i, B, a, k, parts, refuses);
            int q = static_cast<int>(parts.size()), l = t - 1, fl = fl_final;
            if (!layers.back().at(fl, q, l)) continue;
            for (int c = static_cast<int>(ch.size()); c >= 1; --c) {
                const int j = ch[c - 1];
                Layer& prev = layers[c - 1];
                bool done = false;
                for (int step = 0; step <= 1 && !done; ++step) {
                    if (q - step < 0) continue;
                    const int pq = q - step;
                    const Mask Q = step ? parts[pq] : 0;
                    SepInfo s = separated(i, j, B, Q, ak);
                    bool ok = fl == Unwanted ? (s.unwanted && prev.at(Unwanted, pq, l))
                                             : (s.any && prev.at(fl, pq, l));
                    if (!ok) continue;
                    auto [bx, child_fl] = pick_separated(i, j, B, Q, ak, fl);
                    build(j, B, Q, bx.activity, bx.size, bx.size, child_fl, pi);
                    q = pq;
                    done = true;
                }
                for (int step = 0; step <= 1 && !done && a >= 0; ++step) {
                    if (q - step < 0) continue;
                    const int pq = q - step;
                    const Mask Q = (step ? parts[pq] : 0) | bit(a);
                    const Entry& je = entry(j, B, Q, a, k);
                    for (int x = 1; x <= l && !done; ++x) {
                        int child_fl = -1, prev_fl = -1;
                        if (fl == Plain && prev.at(Plain, pq, l - x) && je.f[Plain][x]) child_fl = prev_fl = Plain;
                        if (fl == Unwanted && prev.at(Unwanted, pq, l - x) && je.f[Unwanted][x])
                            child_fl = prev_fl = Unwanted;
                        if (fl == Refusing) {
                            if (prev.at(Refusing, pq, l - x) && je.f[Plain][x]) {
                                child_fl = Plain;
                                prev_fl = Refusing;
                            } else if (prev.at(Plain, pq, l - x) && je.f[Refusing][x]) {
                                child_fl = Refusing;
                                prev_fl = Plain;
                            }
                        }
                        if (child_fl < 0) continue;
                        build(j, B, Q, a, k, x, individual_ ? child_fl : Plain, pi);
                        q = pq;
                        l -= x;
                        fl = prev_fl;
                        done = true;
                    }
                }
                if (!done) throw std::logic_error("tree table reconstruction lost its witness");
            }
            return;
        }
        throw std::logic_error("tree table reconstruction lost its witness");
    }

    const Instance* inst_;
    const RootedTree* tree_;
    bool individual_;
    int p_;
    std::unordered_map<Key, Entry, KeyHash> memo_;
};

std::optional<Assignment> tree_solve(const Instance& inst, bool individual, const Guards& guards) {
    check_activity_guard(inst, guards.max_p_tree, "--max-p");
    if (!classify(inst.graph()).forest) throw PreconditionError("the graph is not a forest");
    const auto forest = root_forest(inst.graph());
    std::vector<NodeSet> comps;
    std::vector<LocalSolver> solvers;
    for (const auto& tree : forest) {
        NodeSet nodes = tree.preorder;
        std::sort(nodes.begin(), nodes.end());
        comps.push_back(nodes);
        solvers.emplace_back([dp = std::make_shared<TreeDp>(inst, tree, individual)](Mask B, Mask Q) {
            return (*dp)(B, Q);
        });
    }
    return combine(inst, comps, solvers);
}

}  // namespace

std::optional<Assignment> solve_small_components(const Instance& inst, Concept c, const Guards& guards) {
    if (c == Concept::CoreStable) return core_small_components(inst, guards);
    return small_components(inst, c, guards);
}

std::optional<Assignment> core_small_components(const Instance& inst, const Guards& guards) {
    return small_components(inst, Concept::CoreStable, guards);
}

std::optional<Assignment> ns_tree(const Instance& inst, const Guards& guards) { return tree_solve(inst, false, guards); }

std::optional<Assignment> is_tree(const Instance& inst, const Guards& guards) { return tree_solve(inst, true, guards); }

}  // namespace ggasp
