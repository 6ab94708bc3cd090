#include "ggasp/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace ggasp {

int Generated::player(const std::string& label) const {
    auto it = player_index.find(label);
    if (it == player_index.end()) throw ValidationError("no player labelled '" + label + "'");
    return it->second;
}

int Generated::activity(const std::string& name) const {
    auto a = instance.activity_by_name(name);
    if (!a) throw ValidationError("no activity named '" + name + "'");
    return *a;
}

int InstanceBuilder::add_player(const std::string& label) {
    int id = num_players();
    if (!index_.emplace(label, id).second) throw ValidationError("duplicate player label '" + label + "'");
    labels_.push_back(label);
    raw_.emplace_back();
    return id;
}

void InstanceBuilder::add_activity(const std::string& name, int copies, std::optional<std::string> label) {
    if (!row_.emplace(name, static_cast<int>(roster_.size())).second)
        throw ValidationError("duplicate activity '" + name + "'");
    roster_.push_back({name, std::move(label), copies});
}

void InstanceBuilder::add_edge(const std::string& u, const std::string& v) { add_edge(index_.at(u), index_.at(v)); }

void InstanceBuilder::add_edge(int u, int v) { edges_.emplace_back(std::min(u, v), std::max(u, v)); }

void InstanceBuilder::set_preferences(const std::string& player, const std::vector<Tier>& tiers) {
    raw_.at(index_.at(player)) = tiers;
}

Generated InstanceBuilder::build() const {
    const int n = num_players();
    std::vector<Instance::Order> prefs(n);
    for (int i = 0; i < n; ++i) {
        std::set<std::pair<int, int>> seen;
        bool has_void = false;
        for (const auto& tier : raw_[i]) {
            Instance::Tier out;
            for (const auto& pref : tier) {
                int row = kVoid;
                if (!pref.activity.empty()) {
                    auto it = row_.find(pref.activity);
                    if (it == row_.end()) throw ValidationError("unknown activity '" + pref.activity + "'");
                    row = it->second;
                    if (pref.size < 1 || pref.size > n) continue;
                }
                int size = row == kVoid ? 1 : pref.size;
                if (!seen.insert({row, size}).second) continue;
                has_void |= row == kVoid;
                out.push_back({row, size});
            }
            if (!out.empty()) prefs[i].push_back(std::move(out));
        }
        if (!has_void) prefs[i].push_back({{kVoid, 1}});
    }
    Generated g{Instance(n, edges_, roster_, std::move(prefs)), labels_, index_};
    return g;
}

namespace {

using Tier = InstanceBuilder::Tier;
using Pref = InstanceBuilder::Pref;

std::string num(int x) { return std::to_string(x); }

}  // namespace

std::vector<std::string> canonical_names() { return {"stalker", "empty_core", "empty_is"}; }

Generated canonical(const std::string& name) {
    InstanceBuilder b;
    if (name == "stalker") {
        b.add_activity("a");
        b.add_player("1");
        b.add_player("2");
        b.add_edge("1", "2");
        b.set_preferences("1", {{{"a", 1}}});
        b.set_preferences("2", {{{"a", 2}}});
    } else if (name == "empty_core") {
        b.add_activity("a");
        b.add_activity("b");
        for (auto p : {"1", "2", "3"}) b.add_player(p);
        b.add_edge("1", "2");
        b.add_edge("2", "3");
        b.set_preferences("1", {{{"b", 2}}, {{"a", 3}}});
        b.set_preferences("2", {{{"a", 2}}, {{"b", 2}}, {{"a", 3}}});
        b.set_preferences("3", {{{"a", 3}}, {{"b", 1}}, {{"a", 2}}});
    } else if (name == "empty_is") {
        for (auto a : {"a", "b", "c"}) b.add_activity(a);
        for (auto p : {"1", "2", "3"}) b.add_player(p);
        b.add_edge("1", "2");
        b.add_edge("2", "3");
        b.set_preferences("1", {{{"b", 2}}, {{"a", 1}}, {{"c", 3}}, {{"c", 2}}, {{"c", 1}}});
        b.set_preferences("2", {{{"c", 3}}, {{"c", 2}}, {{"a", 2}}, {{"b", 2}}, {{"b", 1}}});
        b.set_preferences("3", {{{"c", 3}}, {{"a", 2}}, {{"a", 1}}});
    } else {
        throw ValidationError("unknown canonical instance '" + name + "'");
    }
    return b.build();
}

// The cyclic three-player pattern with no individually stable outcome:
// labels (p1,p2,p3) over activities (lo, mid, hi) play the roles of the
// players 1,2,3 over activities a, b, c of the empty_is instance.
static void cyclic_triple(InstanceBuilder& b, const std::string& p1, const std::string& p2, const std::string& p3,
                          const std::string& lo, const std::string& mid, const std::string& hi) {
    b.set_preferences(p1, {{{mid, 2}}, {{lo, 1}}, {{hi, 3}}, {{hi, 2}}, {{hi, 1}}});
    b.set_preferences(p2, {{{hi, 3}}, {{hi, 2}}, {{lo, 2}}, {{mid, 2}}, {{mid, 1}}});
    b.set_preferences(p3, {{{hi, 3}}, {{lo, 2}}, {{lo, 1}}});
}

// ---------------------------------------------------------------- paths

static std::string color_act(int c) { return "col" + num(c); }

Generated from_rainbow_matching(const EdgeColoredPath& src, RainbowVariant variant) {
    const int m = static_cast<int>(src.edge_color.size()), q = src.colors;
    if (q < 1) throw ValidationError("need at least one color");
    if (src.k < 0 || src.k > q) throw ValidationError("k must lie in [0, colors]");
    for (int i = 0; i < m; ++i) {
        if (src.edge_color[i] < 0 || src.edge_color[i] >= q) throw ValidationError("edge color out of range");
        if (i > 0 && src.edge_color[i] == src.edge_color[i - 1])
            throw ValidationError("coloring is not proper at edge " + num(i));
    }
    InstanceBuilder b;
    for (int c = 0; c < q; ++c) b.add_activity(color_act(c));
    if (variant == RainbowVariant::CR_IS)
        for (int c = 0; c < q; ++c) {
            b.add_activity("a." + color_act(c));
            b.add_activity("b." + color_act(c));
        }
    std::vector<std::string> chain;
    for (int i = 0; i <= m; ++i) {
        chain.push_back("v" + num(i));
        if (i < m) chain.push_back("e" + num(i));
    }
    for (int g = 1; g <= q - src.k; ++g) chain.push_back("g" + num(g));
    const int width = variant == RainbowVariant::NS ? 2 : 3;
    // Gadgets start just after the last edge's color: without garbage
    // collectors the last vertex touches the first gadget, and a shared
    // color would let the three of them form a group all approve.
    const int first = m > 0 ? (src.edge_color[m - 1] + 1) % q : 0;
    for (int t = 0; t < q; ++t)
        for (int r = 1; r <= width; ++r) chain.push_back(color_act((first + t) % q) + "." + num(r));
    for (const auto& label : chain) b.add_player(label);
    for (std::size_t t = 1; t < chain.size(); ++t) b.add_edge(chain[t - 1], chain[t]);

    for (int i = 0; i <= m; ++i) {
        Tier t;
        if (i > 0) t.push_back({color_act(src.edge_color[i - 1]), 3});
        if (i < m) t.push_back({color_act(src.edge_color[i]), 3});
        b.set_preferences("v" + num(i), {t});
    }
    for (int i = 0; i < m; ++i) b.set_preferences("e" + num(i), {{{color_act(src.edge_color[i]), 3}}});
    Tier any;
    for (int c = 0; c < q; ++c) any.push_back({color_act(c), 1});
    for (int g = 1; g <= q - src.k; ++g) b.set_preferences("g" + num(g), {any});
    for (int c = 0; c < q; ++c) {
        const std::string col = color_act(c);
        if (variant == RainbowVariant::NS) {
            b.set_preferences(col + ".1", {{{col, 1}}});
            b.set_preferences(col + ".2", {{{col, 2}}});
        } else {
            cyclic_triple(b, col + ".1", col + ".2", col + ".3", "a." + col, "b." + col, col);
        }
    }
    return b.build();
}

Assignment rainbow_witness(const Generated& g, const EdgeColoredPath& src, const std::vector<int>& matching) {
    Assignment pi(g.instance.num_players(), kVoid);
    std::vector<char> used(src.colors, 0);
    const int take = std::min<int>(src.k, static_cast<int>(matching.size()));
    for (int t = 0; t < take; ++t) {
        int e = matching[t];
        int a = g.activity(color_act(src.edge_color[e]));
        used[src.edge_color[e]] = 1;
        for (auto label : {"v" + num(e), "e" + num(e), "v" + num(e + 1)}) pi[g.player(label)] = a;
    }
    int next_gc = 1;
    for (int c = 0; c < src.colors && next_gc <= src.colors - src.k; ++c)
        if (!used[c]) pi[g.player("g" + num(next_gc++))] = g.activity(color_act(c));
    if (g.player_index.count(color_act(0) + ".3"))
        for (int c = 0; c < src.colors; ++c)
            for (auto r : {".2", ".3"}) pi[g.player(color_act(c) + r)] = g.activity("a." + color_act(c));
    return pi;
}

// ---------------------------------------------------------------- stars

Generated from_mmm(const BipartiteMMM& src, MmmVariant variant) {
    if (src.left < 0 || src.right < 1) throw ValidationError("the V side must be nonempty");
    if (src.k < 0 || src.k > src.right) throw ValidationError("k must lie in [0, |V|]");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : src.edges) {
        if (u < 0 || u >= src.left || v < 0 || v >= src.right) throw ValidationError("edge endpoint out of range");
        if (!seen.insert({u, v}).second) throw ValidationError("duplicate edge");
    }
    InstanceBuilder b;
    for (int u = 0; u < src.left; ++u) b.add_activity("u" + num(u));
    b.add_activity("a");
    if (variant == MmmVariant::NS) {
        b.add_activity("b");
    } else {
        for (auto x : {"x", "y", "z"}) b.add_activity(x);
    }
    b.add_player("c");
    for (int v = 0; v < src.right; ++v) b.add_player("v" + num(v));
    if (variant == MmmVariant::NS) {
        b.add_player("s");
    } else {
        b.add_player("s1");
        b.add_player("s2");
    }
    for (int i = 1; i < b.num_players(); ++i) b.add_edge(0, i);

    const int big = src.right - src.k + 1;
    for (int v = 0; v < src.right; ++v) {
        Tier nbrs;
        for (auto [u, w] : src.edges)
            if (w == v) nbrs.push_back({"u" + num(u), 1});
        std::sort(nbrs.begin(), nbrs.end(), [](const Pref& x, const Pref& y) { return x.activity < y.activity; });
        b.set_preferences("v" + num(v), {nbrs, {{"a", big}}});
    }
    if (variant == MmmVariant::NS) {
        b.set_preferences("c", {{{"a", big}}, {{"b", 1}}});
        b.set_preferences("s", {{{"b", 2}}});
    } else {
        b.set_preferences("s1", {{{"y", 2}}, {{"x", 1}}, {{"z", 3}}, {{"z", 2}}, {{"z", 1}}});
        b.set_preferences("c", {{{"a", big}}, {{"z", 3}}, {{"z", 2}}, {{"x", 2}}, {{"y", 2}}, {{"y", 1}}});
        b.set_preferences("s2", {{{"z", 3}}, {{"x", 2}}, {{"x", 1}}});
    }
    return b.build();
}

Assignment mmm_witness(const Generated& g, const BipartiteMMM& src, const std::vector<int>& matching) {
    Assignment pi(g.instance.num_players(), kVoid);
    std::vector<char> matched(src.right, 0);
    for (int e : matching) {
        auto [u, v] = src.edges[e];
        pi[g.player("v" + num(v))] = g.activity("u" + num(u));
        matched[v] = 1;
    }
    const int a = g.activity("a");
    pi[g.player("c")] = a;
    int need = src.right - src.k;
    for (int v = 0; v < src.right && need > 0; ++v)
        if (!matched[v]) {
            pi[g.player("v" + num(v))] = a;
            --need;
        }
    if (g.player_index.count("s1")) pi[g.player("s1")] = g.activity("x");
    return pi;
}

// ---------------------------------------------------------------- small components

namespace {

std::string var_act(int x) { return "x" + num(x); }

// Occurrence activity for the literal at (clause, position): x3+1, x3-2, ...
std::vector<std::array<std::string, 3>> occurrence_names(const B2Formula& f) {
    std::vector<int> pos(f.variables + 1, 0), neg(f.variables + 1, 0);
    std::vector<std::array<std::string, 3>> out;
    for (const auto& cl : f.clauses) {
        std::array<std::string, 3> names;
        for (int r = 0; r < 3; ++r) {
            int lit = cl[r], x = std::abs(lit);
            int occ = lit > 0 ? ++pos[x] : ++neg[x];
            names[r] = var_act(x) + (lit > 0 ? "+" : "-") + num(occ);
        }
        out.push_back(names);
    }
    return out;
}

void check_b2(const B2Formula& f) {
    if (f.variables < 1) throw ValidationError("formula needs at least one variable");
    std::vector<int> pos(f.variables + 1, 0), neg(f.variables + 1, 0);
    for (const auto& cl : f.clauses)
        for (int lit : cl) {
            if (lit == 0 || std::abs(lit) > f.variables) throw ValidationError("literal out of range");
            ++(lit > 0 ? pos : neg)[std::abs(lit)];
        }
    for (int x = 1; x <= f.variables; ++x)
        if (pos[x] != 2 || neg[x] != 2)
            throw ValidationError("variable " + num(x) + " must occur exactly twice positively and twice negatively");
}

bool literal_true(int lit, const std::vector<bool>& truth) {
    bool v = truth[std::abs(lit) - 1];
    return lit > 0 ? v : !v;
}

}  // namespace

Generated from_b2sat(const B2Formula& src, B2Variant variant) {
    check_b2(src);
    const auto occ = occurrence_names(src);
    const int nc = static_cast<int>(src.clauses.size());
    InstanceBuilder b;
    for (int x = 1; x <= src.variables; ++x) {
        const std::string v = var_act(x);
        for (auto s : {"", "+1", "+2", "-1", "-2"}) b.add_activity(v + s);
        if (variant == B2Variant::NS) {
            b.add_activity("a(" + v + ")");
            b.add_activity("na(" + v + ")");
        } else {
            for (auto s : {"y", "z", "a", "b", "c", "na", "nb", "nc"}) b.add_activity(std::string(s) + "(" + v + ")");
        }
    }
    if (variant == B2Variant::NS)
        for (int c = 0; c < nc; ++c) b.add_activity("cl" + num(c));

    for (int x = 1; x <= src.variables; ++x) {
        const std::string v = var_act(x);
        if (variant == B2Variant::NS) {
            for (auto side : {"p", "np"}) {
                std::string p1 = std::string(side) + "1(" + v + ")", p2 = std::string(side) + "2(" + v + ")";
                std::string sign = std::string(side) == "p" ? "+" : "-";
                std::string aux = std::string(side) == "p" ? "a(" + v + ")" : "na(" + v + ")";
                b.add_player(p1);
                b.add_player(p2);
                b.add_edge(p1, p2);
                b.set_preferences(p1, {{{v, 2}}, {{v, 1}}, {{v + sign + "1", 1}}, {{v + sign + "2", 2}}, {{aux, 1}}});
                b.set_preferences(p2, {{{v, 2}}, {{v + sign + "2", 1}}, {{v + sign + "1", 2}}, {{aux, 2}}});
            }
        } else {
            const std::string y = "y(" + v + ")", z = "z(" + v + ")";
            for (int r = 1; r <= 3; ++r) b.add_player("v" + num(r) + "(" + v + ")");
            b.add_edge("v1(" + v + ")", "v2(" + v + ")");
            b.add_edge("v2(" + v + ")", "v3(" + v + ")");
            cyclic_triple(b, "v1(" + v + ")", "v2(" + v + ")", "v3(" + v + ")", v, y, z);
            for (auto side : {"p", "np"}) {
                std::string s(side), sign = s == "p" ? "+" : "-", pre = s == "p" ? "" : "n";
                std::string p1 = s + "1(" + v + ")", p2 = s + "2(" + v + ")", p3 = s + "3(" + v + ")";
                std::string a = pre + "a(" + v + ")", bb = pre + "b(" + v + ")", c = pre + "c(" + v + ")";
                b.add_player(p1);
                b.add_player(p2);
                b.add_player(p3);
                b.add_edge(p1, p2);
                b.add_edge(p2, p3);
                b.set_preferences(p1, {{{v, 3}, {v + sign + "1", 1}}, {{bb, 2}}, {{a, 1}}, {{c, 3}}, {{c, 2}}, {{c, 1}}});
                b.set_preferences(p2, {{{v, 3}, {v + sign + "2", 1}}, {{c, 3}}, {{c, 2}}, {{a, 2}}, {{bb, 2}}, {{bb, 1}}});
                b.set_preferences(p3, {{{v, 3}}, {{c, 3}}, {{a, 2}}, {{a, 1}}});
            }
        }
    }
    for (int c = 0; c < nc; ++c) {
        const std::string cl = "cl" + num(c);
        const auto& l = occ[c];
        if (variant == B2Variant::NS) {
            const std::string s = "s(" + cl + ")";
            b.add_player(s);
            for (int r = 1; r <= 3; ++r) {
                std::string leaf = cl + "." + num(r);
                b.add_player(leaf);
                b.add_edge(s, leaf);
                b.set_preferences(leaf, {{{l[r - 1], 1}}, {{cl, 2}}});
            }
            b.set_preferences(s, {{{l[0], 2}, {l[1], 2}, {l[2], 2}, {cl, 2}}});
        } else {
            const std::string c1 = cl + ".1", c2 = cl + ".2", c3 = cl + ".3";
            b.add_player(c1);
            b.add_player(c2);
            b.add_player(c3);
            b.add_edge(c1, c2);
            b.add_edge(c2, c3);
            cyclic_triple(b, c1, c2, c3, l[0], l[1], l[2]);
        }
    }
    return b.build();
}

Assignment b2sat_witness(const Generated& g, const B2Formula& src, const std::vector<bool>& truth) {
    const auto occ = occurrence_names(src);
    const bool ns = g.player_index.count("s(cl0)") > 0 || src.clauses.empty();
    Assignment pi(g.instance.num_players(), kVoid);
    for (int x = 1; x <= src.variables; ++x) {
        const std::string v = var_act(x);
        const bool t = truth[x - 1];
        const std::string lit_side = t ? "p" : "np", var_side = t ? "np" : "p";
        const std::string sign = t ? "+" : "-";
        pi[g.player(lit_side + "1(" + v + ")")] = g.activity(v + sign + "1");
        pi[g.player(lit_side + "2(" + v + ")")] = g.activity(v + sign + "2");
        pi[g.player(var_side + "1(" + v + ")")] = g.activity(v);
        pi[g.player(var_side + "2(" + v + ")")] = g.activity(v);
        if (!ns) {
            pi[g.player(lit_side + "3(" + v + ")")] = g.activity((t ? "a(" : "na(") + v + ")");
            pi[g.player(var_side + "3(" + v + ")")] = g.activity(v);
            for (int r = 1; r <= 3; ++r) pi[g.player("v" + num(r) + "(" + v + ")")] = g.activity("z(" + v + ")");
        }
    }
    for (std::size_t c = 0; c < src.clauses.size(); ++c) {
        const std::string cl = "cl" + num(static_cast<int>(c));
        std::array<bool, 3> used;
        for (int r = 0; r < 3; ++r) used[r] = literal_true(src.clauses[c][r], truth);
        auto put = [&](int r, const std::string& act) { pi[g.player(cl + "." + num(r))] = g.activity(act); };
        if (ns) {
            int pick = -1;
            for (int r = 0; r < 3 && pick < 0; ++r)
                if (used[r]) pick = r;
            if (pick < 0) continue;
            pi[g.player("s(" + cl + ")")] = g.activity(cl);
            for (int r = 0; r < 3; ++r) {
                if (r == pick)
                    put(r + 1, cl);
                else if (!used[r])
                    put(r + 1, occ[c][r]);
            }
            continue;
        }
        const auto& l = occ[c];
        if (used[0] && used[1] && used[2]) {
        } else if (used[0] && !used[2]) {
            for (int r = 1; r <= 3; ++r) put(r, l[2]);
        } else if (used[2] && !used[0]) {
            put(2, l[0]);
            put(3, l[0]);
        } else if (used[0] && used[2]) {
            put(1, l[1]);
            put(2, l[1]);
        } else if (used[1]) {
            put(1, l[0]);
        }
    }
    return pi;
}

// ---------------------------------------------------------------- exact cover

namespace {

void check_x3c(const X3CInput& src) {
    if (src.k < 1) throw ValidationError("X3C needs k >= 1");
    std::set<std::array<int, 3>> seen;
    for (auto s : src.sets) {
        for (int v : s)
            if (v < 0 || v >= 3 * src.k) throw ValidationError("set element out of range");
        std::sort(s.begin(), s.end());
        if (s[0] == s[1] || s[1] == s[2]) throw ValidationError("sets must have three distinct elements");
        if (!seen.insert(s).second) throw ValidationError("duplicate set in the family");
    }
}

std::vector<int> element_degrees(const X3CInput& src) {
    std::vector<int> deg(3 * src.k, 0);
    for (const auto& s : src.sets)
        for (int v : s) ++deg[v];
    return deg;
}

// beta for element index v (0-based); distinct and >= 3k+2.
int x3c_beta(const X3CInput& src, int v) { return v + 1 + 3 * src.k + 1; }

}  // namespace

Generated from_x3c_star(const X3CInput& src) {
    check_x3c(src);
    const int k = src.k, m = static_cast<int>(src.sets.size());
    const auto deg = element_degrees(src);
    InstanceBuilder b;
    b.add_activity("a");
    b.add_activity("b");
    b.add_player("c");
    b.add_player("x1");
    b.add_player("x2");
    for (int j = 0; j < m; ++j) b.add_player("S" + num(j));
    for (int v = 0; v < 3 * k; ++v) {
        int dummies = x3c_beta(src, v) - deg[v] - 2;
        if (dummies < 0) throw ValidationError("element " + num(v) + " lies in too many sets for the construction");
        for (int d = 0; d < dummies; ++d) b.add_player("d" + num(v) + "." + num(d));
    }
    for (int i = 1; i < b.num_players(); ++i) b.add_edge(0, i);

    Tier all_b;
    for (int v = 0; v < 3 * k; ++v)
        if (deg[v] > 0) all_b.push_back({"b", x3c_beta(src, v)});
    for (int j = 0; j < m; ++j) {
        Tier bj;
        for (int v : src.sets[j]) bj.push_back({"b", x3c_beta(src, v)});
        b.set_preferences("S" + num(j), {{{"a", k + 1}}, bj});
    }
    for (int v = 0; v < 3 * k; ++v)
        for (int d = 0; d < x3c_beta(src, v) - deg[v] - 2; ++d)
            b.set_preferences("d" + num(v) + "." + num(d), {{{"b", x3c_beta(src, v)}}});
    b.set_preferences("x1", {{{"b", 2}}, {{"a", 3}}});
    b.set_preferences("c", {{{"a", 2}}, {{"b", 2}}, {{"a", 3}}, all_b, {{"a", k + 1}}});
    b.set_preferences("x2", {{{"a", 3}}, all_b, {{"b", 1}}, {{"a", 2}}});
    return b.build();
}

Assignment x3c_star_witness(const Generated& g, const X3CInput&, const std::vector<int>& cover) {
    Assignment pi(g.instance.num_players(), kVoid);
    const int a = g.activity("a");
    pi[g.player("c")] = a;
    for (int j : cover) pi[g.player("S" + num(j))] = a;
    pi[g.player("x2")] = g.activity("b");
    return pi;
}

Generated from_x3c_clique(const X3CInput& src) {
    check_x3c(src);
    const int k = src.k, m = static_cast<int>(src.sets.size());
    // Unchosen sets go to c1 at size m-k, which must be a real group size.
    if (m <= k) throw ValidationError("the clique construction needs more than k sets");
    const auto deg = element_degrees(src);
    InstanceBuilder b;
    for (auto a : {"a", "b", "c1", "c2"}) b.add_activity(a);
    for (auto x : {"x1", "x2", "x3"}) b.add_player(x);
    for (int j = 0; j < m; ++j) b.add_player("S" + num(j));
    for (int v = 0; v < 3 * k; ++v)
        for (int d = 0; d < x3c_beta(src, v) - deg[v]; ++d) b.add_player("d" + num(v) + "." + num(d));
    for (int u = 0; u < b.num_players(); ++u)
        for (int w = u + 1; w < b.num_players(); ++w) b.add_edge(u, w);

    for (int j = 0; j < m; ++j) {
        Tier bj;
        for (int v : src.sets[j]) bj.push_back({"b", x3c_beta(src, v)});
        b.set_preferences("S" + num(j), {{{"c2", k}}, bj, {{"c1", m - k}}});
    }
    for (int v = 0; v < 3 * k; ++v)
        for (int d = 0; d < x3c_beta(src, v) - deg[v]; ++d)
            b.set_preferences("d" + num(v) + "." + num(d), {{{"b", x3c_beta(src, v)}}});
    b.set_preferences("x1", {{{"c1", 2}, {"c2", 2}}, {{"a", 3}}});
    b.set_preferences("x2", {{{"a", 2}}, {{"c1", 2}, {"c2", 2}}, {{"a", 3}}});
    b.set_preferences("x3", {{{"a", 3}}, {{"c1", 1}, {"c2", 1}}, {{"a", 2}}});
    return b.build();
}

Assignment x3c_clique_witness(const Generated& g, const X3CInput& src, const std::vector<int>& cover) {
    Assignment pi(g.instance.num_players(), kVoid);
    for (auto x : {"x1", "x2", "x3"}) pi[g.player(x)] = g.activity("a");
    std::set<int> in(cover.begin(), cover.end());
    for (int j = 0; j < static_cast<int>(src.sets.size()); ++j)
        pi[g.player("S" + num(j))] = g.activity(in.count(j) ? "c2" : "c1");
    return pi;
}

// ---------------------------------------------------------------- regular graphs

namespace {

struct RegularShape {
    int n, m, delta;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    std::vector<std::vector<int>> incident;  // per vertex: edge indices
};

RegularShape check_regular(const RegularCliqueInput& src) {
    RegularShape s{src.vertices, 0, 0, {}, {}};
    if (s.n < 1) throw ValidationError("graph needs a vertex");
    if (src.k < 1 || src.k > s.n) throw ValidationError("k must lie in [1, |V|]");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : src.edges) {
        if (u < 0 || v < 0 || u >= s.n || v >= s.n) throw ValidationError("edge endpoint out of range");
        if (u == v) throw ValidationError("self-loop");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw ValidationError("duplicate edge");
    }
    s.edges.assign(seen.begin(), seen.end());
    s.m = static_cast<int>(s.edges.size());
    s.incident.resize(s.n);
    for (int e = 0; e < s.m; ++e) {
        s.incident[s.edges[e].first].push_back(e);
        s.incident[s.edges[e].second].push_back(e);
    }
    s.delta = static_cast<int>(s.incident[0].size());
    for (const auto& inc : s.incident)
        if (static_cast<int>(inc.size()) != s.delta) throw ValidationError("graph is not regular");
    if (s.delta < src.k - 1) throw ValidationError("degree must be at least k-1");
    return s;
}

std::string edge_player(int owner, int other) { return "e" + num(owner) + ">" + num(other); }

}  // namespace

Generated from_regular_clique(const RegularCliqueInput& src, RegularVariant variant) {
    const RegularShape s = check_regular(src);
    const int k = src.k, pairs = k * (k - 1) / 2;
    const bool ns = variant == RegularVariant::NS;
    auto alpha = [&](int v) { return ns ? 2 * (v + 1) + s.n : (v + 1) * (k + 3) + s.n; };
    auto beta = [&](int e) { return 2 * (e + 1); };
    auto a_act = [&](int i) { return ns ? "a" + num(i) : "a1." + num(i); };

    InstanceBuilder b;
    for (int i = 1; i <= k; ++i) {
        b.add_activity(a_act(i));
        if (!ns) {
            b.add_activity("a2." + num(i));
            b.add_activity("a3." + num(i));
        }
    }
    for (int j = 1; j <= pairs; ++j) b.add_activity("b" + num(j));
    if (ns) {
        b.add_activity("c");
        b.add_activity("d");
    } else {
        for (auto a : {"d", "x", "y", "z"}) b.add_activity(a);
    }

    for (int v = 0; v < s.n; ++v) {
        b.add_player("v" + num(v));
        for (int d = 0; d < alpha(v) - s.delta + k - 2; ++d) b.add_player("dv" + num(v) + "." + num(d));
    }
    for (int e = 0; e < s.m; ++e) {
        auto [u, v] = s.edges[e];
        b.add_player(edge_player(u, v));
        b.add_player(edge_player(v, u));
        for (int d = 0; d < beta(e) - 2; ++d) b.add_player("de" + num(e) + "." + num(d));
    }
    if (ns) {
        b.add_player("s");
    } else {
        for (int i = 1; i <= k; ++i)
            for (int r = 1; r <= 3; ++r) b.add_player("p" + num(r) + "." + num(i));
        for (auto g : {"g", "g1", "g2", "g3"}) b.add_player(g);
    }
    for (int u = 0; u < b.num_players(); ++u)
        for (int w = u + 1; w < b.num_players(); ++w) b.add_edge(u, w);

    auto vertex_tier = [&](int v, bool with_next) {
        Tier t;
        for (int i = 1; i <= k; ++i) {
            if (ns) {
                t.push_back({a_act(i), alpha(v)});
                if (with_next) t.push_back({a_act(i), alpha(v) + 1});
            } else {
                for (int sz = alpha(v); sz <= alpha(v) + k; ++sz) t.push_back({a_act(i), sz});
            }
        }
        return t;
    };
    for (int v = 0; v < s.n; ++v) {
        Tier own = vertex_tier(v, false);
        if (ns) {
            own.push_back({"c", s.n - k});
            own.push_back({"d", 1});
        }
        b.set_preferences("v" + num(v), {own});
        for (int d = 0; d < alpha(v) - s.delta + k - 2; ++d)
            b.set_preferences("dv" + num(v) + "." + num(d), {vertex_tier(v, true)});
    }
    for (int e = 0; e < s.m; ++e) {
        auto [u, v] = s.edges[e];
        Tier edge_alts;
        for (int j = 1; j <= pairs; ++j) edge_alts.push_back({"b" + num(j), beta(e)});
        for (auto [owner, other] : {std::pair{u, v}, std::pair{v, u}}) {
            Tier t = vertex_tier(owner, true);
            t.insert(t.end(), edge_alts.begin(), edge_alts.end());
            b.set_preferences(edge_player(owner, other), {t});
        }
        for (int d = 0; d < beta(e) - 2; ++d) b.set_preferences("de" + num(e) + "." + num(d), {edge_alts});
    }
    if (ns) {
        b.set_preferences("s", {{{"d", 2}}});
    } else {
        std::set<int> sizes;
        for (int v = 0; v < s.n; ++v)
            for (int sz = alpha(v) + 2; sz <= alpha(v) + k; ++sz) sizes.insert(sz);
        Tier gt;
        for (int i = 1; i <= k; ++i)
            for (int sz : sizes) gt.push_back({a_act(i), sz});
        b.set_preferences("g", {gt, {{"d", 4}}});
        b.set_preferences("g1", {{{"d", 4}}, {{"y", 2}}, {{"z", 1}}, {{"x", 3}}, {{"x", 2}}, {{"x", 1}}});
        b.set_preferences("g2", {{{"d", 4}}, {{"x", 3}}, {{"x", 2}}, {{"z", 2}}, {{"y", 2}}, {{"y", 1}}});
        b.set_preferences("g3", {{{"d", 4}}, {{"x", 3}}, {{"z", 2}}, {{"z", 1}}});
        for (int i = 1; i <= k; ++i) {
            std::string a1 = a_act(i), a2 = "a2." + num(i), a3 = "a3." + num(i);
            cyclic_triple(b, "p1." + num(i), "p2." + num(i), "p3." + num(i), a1, a2, a3);
        }
    }
    return b.build();
}

Assignment regular_clique_witness(const Generated& g, const RegularCliqueInput& src, const std::vector<int>& clique) {
    const RegularShape s = check_regular(src);
    const bool ns = g.player_index.count("s") > 0;
    const int k = src.k;
    Assignment pi(g.instance.num_players(), kVoid);
    std::vector<int> slot(s.n, -1);
    std::vector<int> sorted(clique.begin(), clique.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t t = 0; t < sorted.size(); ++t) slot[sorted[t]] = static_cast<int>(t) + 1;
    auto alpha = [&](int v) { return ns ? 2 * (v + 1) + s.n : (v + 1) * (k + 3) + s.n; };
    for (int v = 0; v < s.n; ++v) {
        if (slot[v] < 0) {
            if (ns) pi[g.player("v" + num(v))] = g.activity("c");
            continue;
        }
        int a = g.activity(ns ? "a" + num(slot[v]) : "a1." + num(slot[v]));
        pi[g.player("v" + num(v))] = a;
        for (int d = 0; d < alpha(v) - s.delta + k - 2; ++d) pi[g.player("dv" + num(v) + "." + num(d))] = a;
        for (int e : s.incident[v]) {
            int other = s.edges[e].first == v ? s.edges[e].second : s.edges[e].first;
            if (slot[other] < 0) pi[g.player(edge_player(v, other))] = a;
        }
    }
    int next_b = 1;
    for (int e = 0; e < s.m; ++e) {
        auto [u, v] = s.edges[e];
        if (slot[u] < 0 || slot[v] < 0) continue;
        int a = g.activity("b" + num(next_b++));
        pi[g.player(edge_player(u, v))] = a;
        pi[g.player(edge_player(v, u))] = a;
        for (int d = 0; d < 2 * (e + 1) - 2; ++d) pi[g.player("de" + num(e) + "." + num(d))] = a;
    }
    if (!ns) {
        for (int i = 1; i <= k; ++i)
            for (int r = 1; r <= 3; ++r) pi[g.player("p" + num(r) + "." + num(i))] = g.activity("a3." + num(i));
        for (auto p : {"g", "g1", "g2", "g3"}) pi[g.player(p)] = g.activity("d");
    }
    return pi;
}

// ---------------------------------------------------------------- few players

namespace {

struct McShape {
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    std::vector<std::vector<int>> incident;
};

McShape check_multicolored(const MulticoloredInput& src) {
    if (src.h < 1 || src.q < 1) throw ValidationError("need h >= 1 colors with q >= 1 vertices each");
    const int nv = src.h * src.q;
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : src.edges) {
        if (u < 0 || v < 0 || u >= nv || v >= nv) throw ValidationError("edge endpoint out of range");
        if (u / src.q == v / src.q) throw ValidationError("edge inside one color class");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw ValidationError("duplicate edge");
    }
    McShape s{{seen.begin(), seen.end()}, std::vector<std::vector<int>>(nv)};
    for (int e = 0; e < static_cast<int>(s.edges.size()); ++e) {
        s.incident[s.edges[e].first].push_back(e);
        s.incident[s.edges[e].second].push_back(e);
    }
    return s;
}

std::string vtx_act(int v) { return "v" + num(v); }
std::string edge_act(const std::pair<int, int>& e) { return "e" + num(e.first) + "-" + num(e.second); }
std::string pair_tag(int i, int j) { return num(i) + "-" + num(j); }

}  // namespace

Generated from_multicolored(const MulticoloredInput& src, MulticoloredVariant variant) {
    const McShape s = check_multicolored(src);
    const int h = src.h, q = src.q, nv = h * q;
    const bool core = variant == MulticoloredVariant::CORE_MIS;
    InstanceBuilder b;
    for (int v = 0; v < nv; ++v) b.add_activity(vtx_act(v));
    for (const auto& e : s.edges) b.add_activity(edge_act(e));
    if (core) {
        for (auto a : {"a", "b", "c", "d"}) b.add_activity(a);
    } else {
        for (int i = 0; i < h; ++i)
            for (auto a : {"a.", "b.", "c."}) b.add_activity(a + num(i));
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j)
                for (auto a : {"a.", "b.", "c."}) b.add_activity(a + pair_tag(i, j));
        for (auto a : {"d", "x", "y", "z"}) b.add_activity(a);
    }

    const int per_color = core ? 2 : 3;
    for (int i = 0; i < h; ++i)
        for (int r = 1; r <= per_color; ++r) b.add_player("p" + num(r) + "." + num(i));
    if (!core)
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j)
                for (int r = 1; r <= 3; ++r) b.add_player("p" + num(r) + "." + pair_tag(i, j));
    for (auto g : {"g", "g1", "g2", "g3"}) b.add_player(g);
    for (int u = 0; u < b.num_players(); ++u)
        for (int w = u + 1; w < b.num_players(); ++w) b.add_edge(u, w);

    auto edge_tier = [&](const std::vector<int>& es, int lo, int hi) {
        Tier t;
        for (int e : es)
            for (int sz = lo; sz <= hi; ++sz) t.push_back({edge_act(s.edges[e]), sz});
        return t;
    };
    std::vector<int> all_edges(s.edges.size());
    std::iota(all_edges.begin(), all_edges.end(), 0);

    for (int i = 0; i < h; ++i) {
        std::vector<Tier> first, second;
        for (int l = 0; l < q; ++l) {
            int v1 = i * q + l, v2 = i * q + (q - 1 - l);
            if (core) {
                first.push_back(edge_tier(s.incident[v1], 5, 5));
                first.push_back({{vtx_act(v1), 2}});
                second.push_back(edge_tier(s.incident[v2], 5, 5));
                second.push_back({{vtx_act(v2), 2}});
            } else {
                first.push_back({{vtx_act(v1), 2}});
                first.push_back(edge_tier(s.incident[v1], 3, 5));
                second.push_back({{vtx_act(v2), 2}});
                second.push_back(edge_tier(s.incident[v2], 3, 5));
            }
        }
        if (!core) {
            const std::string a = "a." + num(i), bb = "b." + num(i), c = "c." + num(i);
            for (const Tier& t : std::vector<Tier>{{{bb, 2}}, {{a, 1}}, {{c, 3}}, {{c, 2}}, {{c, 1}}}) first.push_back(t);
            for (const Tier& t : std::vector<Tier>{{{c, 3}}, {{c, 2}}, {{a, 2}}, {{bb, 2}}, {{bb, 1}}}) second.push_back(t);
            b.set_preferences("p3." + num(i), {{{c, 3}}, {{a, 2}}, {{a, 1}}});
        }
        b.set_preferences("p1." + num(i), first);
        b.set_preferences("p2." + num(i), second);
    }
    if (core) {
        b.set_preferences("g", {edge_tier(all_edges, 5, 5), {{"d", 4}}});
        b.set_preferences("g1", {{{"d", 4}}, {{"b", 2}}, {{"a", 3}}});
        b.set_preferences("g2", {{{"d", 4}}, {{"a", 2}}, {{"b", 2}}, {{"a", 3}}});
        b.set_preferences("g3", {{{"d", 4}}, {{"a", 3}}, {{"b", 1}}, {{"a", 2}}});
    } else {
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j) {
                std::vector<int> between;
                for (int e = 0; e < static_cast<int>(s.edges.size()); ++e) {
                    int ci = s.edges[e].first / q, cj = s.edges[e].second / q;
                    if ((ci == i && cj == j) || (ci == j && cj == i)) between.push_back(e);
                }
                const std::string tag = pair_tag(i, j);
                const std::string a = "a." + tag, bb = "b." + tag, c = "c." + tag;
                Tier top = edge_tier(between, 2, 5);
                b.set_preferences("p1." + tag, {top, {{bb, 2}}, {{a, 1}}, {{c, 3}}, {{c, 2}}, {{c, 1}}});
                b.set_preferences("p2." + tag, {top, {{c, 3}}, {{c, 2}}, {{a, 2}}, {{bb, 2}}, {{c, 1}}});
                b.set_preferences("p3." + tag, {{{c, 3}}, {{a, 2}}, {{a, 1}}});
            }
        b.set_preferences("g", {edge_tier(all_edges, 4, 5), {{"d", 4}}});
        b.set_preferences("g1", {{{"d", 4}}, {{"y", 2}}, {{"z", 1}}, {{"x", 3}}, {{"x", 2}}, {{"x", 1}}});
        b.set_preferences("g2", {{{"d", 4}}, {{"x", 3}}, {{"x", 2}}, {{"z", 2}}, {{"y", 2}}, {{"y", 1}}});
        b.set_preferences("g3", {{{"d", 4}}, {{"x", 3}}, {{"z", 2}}, {{"z", 1}}});
    }
    return b.build();
}

Assignment multicolored_witness(const Generated& g, const MulticoloredInput& src, const std::vector<int>& chosen) {
    const McShape s = check_multicolored(src);
    const bool core = g.player_index.count("p3.0") == 0;
    Assignment pi(g.instance.num_players(), kVoid);
    for (int i = 0; i < src.h; ++i) {
        pi[g.player("p1." + num(i))] = g.activity(vtx_act(chosen[i]));
        pi[g.player("p2." + num(i))] = g.activity(vtx_act(chosen[i]));
        if (!core) pi[g.player("p3." + num(i))] = g.activity("a." + num(i));
    }
    if (!core)
        for (int i = 0; i < src.h; ++i)
            for (int j = i + 1; j < src.h; ++j) {
                const std::string tag = pair_tag(i, j);
                std::pair<int, int> e{std::min(chosen[i], chosen[j]), std::max(chosen[i], chosen[j])};
                if (std::binary_search(s.edges.begin(), s.edges.end(), e)) {
                    pi[g.player("p1." + tag)] = g.activity(edge_act(e));
                    pi[g.player("p2." + tag)] = g.activity(edge_act(e));
                }
                pi[g.player("p3." + tag)] = g.activity("a." + tag);
            }
    for (auto p : {"g", "g1", "g2", "g3"}) pi[g.player(p)] = g.activity("d");
    return pi;
}

// ---------------------------------------------------------------- random

std::string graph_kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::Path: return "path";
        case GraphKind::Star: return "star";
        case GraphKind::Forest: return "forest";
        case GraphKind::Clique: return "clique";
        case GraphKind::TwoComponents: return "two-components";
        case GraphKind::General: return "general";
    }
    return "?";
}

std::optional<GraphKind> parse_graph_kind(const std::string& s) {
    for (auto k : {GraphKind::Path, GraphKind::Star, GraphKind::Forest, GraphKind::Clique, GraphKind::TwoComponents,
                   GraphKind::General})
        if (graph_kind_name(k) == s) return k;
    return std::nullopt;
}

namespace {

// Values drawn with plain modular arithmetic so a seed means the same
// instance on every standard library.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int below(int m) { return static_cast<int>(eng() % static_cast<std::uint64_t>(m)); }
    bool chance(double p) { return static_cast<double>(eng() >> 11) * 0x1.0p-53 < p; }
};

void random_tree(Rng& rng, const std::vector<int>& nodes, std::vector<std::pair<int, int>>& edges) {
    for (std::size_t t = 1; t < nodes.size(); ++t) edges.emplace_back(nodes[rng.below(static_cast<int>(t))], nodes[t]);
}

std::vector<std::pair<int, int>> random_edges(Rng& rng, int n, GraphKind kind, bool trees_only) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    switch (kind) {
        case GraphKind::Path:
            for (int i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
            break;
        case GraphKind::Star:
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            break;
        case GraphKind::Forest:
            for (int i = 1; i < n; ++i)
                if (rng.below(4) != 0) edges.emplace_back(rng.below(i), i);
            break;
        case GraphKind::Clique:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            break;
        case GraphKind::TwoComponents: {
            int cut = (n + 1) / 2;
            std::vector<int> left(all.begin(), all.begin() + cut), right(all.begin() + cut, all.end());
            random_tree(rng, left, edges);
            random_tree(rng, right, edges);
            if (!trees_only)
                for (auto* part : {&left, &right})
                    for (std::size_t x = 0; x < part->size(); ++x)
                        for (std::size_t y = x + 2; y < part->size(); ++y)
                            if (rng.below(3) == 0) edges.emplace_back((*part)[x], (*part)[y]);
            break;
        }
        case GraphKind::General:
            random_tree(rng, all, edges);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.below(3) == 0) edges.emplace_back(u, v);
            break;
    }
    std::set<std::pair<int, int>> uniq;
    for (auto [u, v] : edges) uniq.insert({std::min(u, v), std::max(u, v)});
    return {uniq.begin(), uniq.end()};
}

std::vector<Instance::Order> random_preferences(Rng& rng, int n, int rows, double density) {
    std::vector<Instance::Order> prefs(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Instance::Item> kept;
        for (int r = 0; r < rows; ++r)
            for (int s = 1; s <= n; ++s)
                if (rng.chance(density)) kept.push_back({r, s});
        int tiers = kept.empty() ? 0 : 1 + rng.below(static_cast<int>(kept.size()));
        std::vector<Instance::Tier> slots(tiers);
        for (const auto& it : kept) slots[rng.below(tiers)].push_back(it);
        for (auto& t : slots)
            if (!t.empty()) prefs[i].push_back(std::move(t));
        prefs[i].push_back({{kVoid, 1}});
    }
    return prefs;
}

}  // namespace

Instance random_instance(std::uint64_t seed, int n, int p, GraphKind kind, double density) {
    if (n < 1 || p < 0) throw ValidationError("random instance needs n >= 1 and p >= 0");
    Rng rng(seed);
    auto edges = random_edges(rng, n, kind, false);
    std::vector<Instance::Entry> roster;
    for (int a = 0; a < p; ++a) roster.push_back({std::string(1, static_cast<char>('a' + a % 26)) + (a >= 26 ? num(a / 26) : ""), std::nullopt, 1});
    return Instance(n, std::move(edges), std::move(roster), random_preferences(rng, n, p, density));
}

Instance random_copyable_instance(std::uint64_t seed, int n, int p, GraphKind kind, double density) {
    if (n < 1 || p < 0) throw ValidationError("random instance needs n >= 1 and p >= 0");
    if (kind == GraphKind::Clique || kind == GraphKind::General)
        throw ValidationError("copyable random instances live on forests");
    Rng rng(seed);
    auto edges = random_edges(rng, n, kind, true);
    std::vector<Instance::Entry> roster;
    for (int a = 0; a < p; ++a) roster.push_back({std::string(1, static_cast<char>('a' + a % 26)) + (a >= 26 ? num(a / 26) : ""), std::nullopt, n});
    return Instance(n, std::move(edges), std::move(roster), random_preferences(rng, n, p, density));
}

}  // namespace ggasp
