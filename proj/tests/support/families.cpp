#include "families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sources.hpp"

namespace families {

using namespace ggasp;

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

EdgeColoredPath random_path(std::mt19937_64& rng, bool tiny) {
    EdgeColoredPath src;
    const int m = tiny ? pick(rng, 1, 2) : pick(rng, 1, 8);
    src.colors = tiny ? 2 : pick(rng, 2, 4);
    for (int i = 0; i < m; ++i) {
        int c;
        do c = pick(rng, 0, src.colors - 1);
        while (i > 0 && c == src.edge_color[i - 1]);
        src.edge_color.push_back(c);
    }
    src.k = pick(rng, 0, tiny ? 2 : std::min(src.colors, (m + 1) / 2));
    return src;
}

BipartiteMMM random_bipartite(std::mt19937_64& rng, bool tiny) {
    BipartiteMMM src;
    src.left = tiny ? pick(rng, 1, 2) : pick(rng, 1, 5);
    src.right = tiny ? pick(rng, 1, 2) : pick(rng, 1, 5);
    for (int u = 0; u < src.left; ++u)
        for (int v = 0; v < src.right; ++v)
            if (pick(rng, 0, 2) == 0) src.edges.emplace_back(u, v);
    if (src.edges.empty()) src.edges.emplace_back(0, 0);
    if (tiny && src.edges.size() > 2) src.edges.resize(2);
    src.k = pick(rng, 0, std::min<int>(src.right, static_cast<int>(src.edges.size())));
    return src;
}

B2Formula random_formula(std::mt19937_64& rng, bool tiny) {
    B2Formula f;
    f.variables = tiny ? 3 : 3 * pick(rng, 1, 2);
    std::vector<int> lits;
    for (int x = 1; x <= f.variables; ++x)
        for (int s : {x, x, -x, -x}) lits.push_back(s);
    std::shuffle(lits.begin(), lits.end(), rng);
    for (std::size_t t = 0; t < lits.size(); t += 3) f.clauses.push_back({lits[t], lits[t + 1], lits[t + 2]});
    return f;
}

X3CInput random_x3c(std::mt19937_64& rng, bool tiny, bool plant, bool clique) {
    X3CInput src;
    src.k = clique ? (tiny ? 2 : pick(rng, 2, 3)) : (tiny ? 1 : pick(rng, 1, 3));
    const int u = 3 * src.k;
    std::set<std::array<int, 3>> seen;
    auto add = [&](std::array<int, 3> s) {
        std::sort(s.begin(), s.end());
        if (seen.insert(s).second) src.sets.push_back(s);
    };
    if (plant) {
        std::vector<int> perm(u);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int t = 0; t < src.k; ++t) add({perm[3 * t], perm[3 * t + 1], perm[3 * t + 2]});
    }
    const int extra = tiny ? 0 : pick(rng, 0, src.k + 1);
    for (int t = 0; t < extra || (clique && static_cast<int>(src.sets.size()) <= src.k); ++t) {
        std::vector<int> perm(u);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        add({perm[0], perm[1], perm[2]});
    }
    std::shuffle(src.sets.begin(), src.sets.end(), rng);
    return src;
}

RegularCliqueInput random_regular(std::mt19937_64& rng, bool tiny) {
    RegularCliqueInput src;
    const int shape = pick(rng, 0, 3);
    int n = tiny ? pick(rng, 2, 3) : pick(rng, 3, 7);
    if (shape == 0 || tiny) {  // complete graph
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) src.edges.emplace_back(u, v);
    } else if (shape == 1) {  // cycle
        n = std::max(n, 4);
        for (int u = 0; u < n; ++u) src.edges.emplace_back(u, (u + 1) % n);
    } else if (shape == 2) {  // complete bipartite K_{d,d}
        const int d = pick(rng, 2, 3);
        n = 2 * d;
        for (int u = 0; u < d; ++u)
            for (int v = d; v < n; ++v) src.edges.emplace_back(u, v);
    } else {  // disjoint triangles
        const int t = pick(rng, 1, 2);
        n = 3 * t;
        for (int b = 0; b < t; ++b)
            for (auto [x, y] : {std::pair{0, 1}, {1, 2}, {0, 2}}) src.edges.emplace_back(3 * b + x, 3 * b + y);
    }
    src.vertices = n;
    const int delta = n == 0 ? 0 : static_cast<int>(std::count_if(src.edges.begin(), src.edges.end(), [](auto e) {
        return e.first == 0 || e.second == 0;
    }));
    src.k = pick(rng, 1, std::min(n, delta + 1));
    return src;
}

MulticoloredInput random_multicolored(std::mt19937_64& rng, bool tiny, bool independent, bool plant) {
    MulticoloredInput src;
    src.h = tiny ? 2 : pick(rng, 2, 4);
    src.q = tiny ? pick(rng, 1, 2) : pick(rng, 1, 3);
    const int nv = src.h * src.q;
    std::vector<int> chosen(src.h);
    for (int c = 0; c < src.h; ++c) chosen[c] = c * src.q + pick(rng, 0, src.q - 1);
    auto planted = [&](int u, int v) {
        return plant && u == chosen[u / src.q] && v == chosen[v / src.q];
    };
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) {
            if (u / src.q == v / src.q) continue;
            bool edge = pick(rng, 0, 1) == 0;
            if (planted(u, v)) edge = !independent;
            if (edge) src.edges.emplace_back(u, v);
        }
    return src;
}

}  // namespace

std::vector<std::string> names() {
    return {"rainbow-ns", "rainbow-cr-is", "mmm-ns",   "mmm-is",     "b2sat-ns",          "b2sat-cr-is",
            "x3c-star",   "x3c-clique",    "regular-ns", "regular-is", "multicolored-core", "multicolored-nsis"};
}

Case sample(const std::string& family, std::mt19937_64& rng, bool tiny, bool want_yes) {
    Case out;
    out.family = family;
    const auto ns = Concept::NashStable, is = Concept::IndividuallyStable, core = Concept::CoreStable;
    if (family == "rainbow-ns" || family == "rainbow-cr-is") {
        const bool ns_variant = family == "rainbow-ns";
        EdgeColoredPath src = random_path(rng, tiny);
        if (tiny && !want_yes) src.k = src.colors;
        auto sol = sources::rainbow_matching(src);
        if (want_yes && !sol) {
            src.k = 0;
            sol = sources::rainbow_matching(src);
        }
        out.generated = from_rainbow_matching(src, ns_variant ? RainbowVariant::NS : RainbowVariant::CR_IS);
        out.concepts = ns_variant ? std::vector{ns} : std::vector{core, is};
        if (sol) out.witness = rainbow_witness(out.generated, src, *sol);
    } else if (family == "mmm-ns" || family == "mmm-is") {
        const bool ns_variant = family == "mmm-ns";
        BipartiteMMM src = random_bipartite(rng, tiny);
        if (tiny && !want_yes) src.k = 0;
        auto sol = sources::small_maximal_matching(src);
        if (want_yes && !sol) {
            src.k = std::min<int>(src.right, static_cast<int>(src.edges.size()));
            sol = sources::small_maximal_matching(src);
        }
        out.generated = from_mmm(src, ns_variant ? MmmVariant::NS : MmmVariant::IS);
        out.concepts = {ns_variant ? ns : is};
        if (sol) out.witness = mmm_witness(out.generated, src, *sol);
    } else if (family == "b2sat-ns" || family == "b2sat-cr-is") {
        const bool ns_variant = family == "b2sat-ns";
        B2Formula f = random_formula(rng, tiny);
        auto sol = sources::satisfying_assignment(f);
        for (int tries = 0; want_yes && !sol && tries < 50; ++tries) {
            f = random_formula(rng, tiny);
            sol = sources::satisfying_assignment(f);
        }
        out.generated = from_b2sat(f, ns_variant ? B2Variant::NS : B2Variant::CR_IS);
        out.concepts = ns_variant ? std::vector{ns} : std::vector{core, is};
        if (sol) out.witness = b2sat_witness(out.generated, f, *sol);
    } else if (family == "x3c-star" || family == "x3c-clique") {
        const bool star = family == "x3c-star";
        while (true) {
            X3CInput src = random_x3c(rng, tiny, want_yes || pick(rng, 0, 1) == 0, !star);
            try {
                out.generated = star ? from_x3c_star(src) : from_x3c_clique(src);
            } catch (const ValidationError&) {
                continue;  // some element lies in too many sets
            }
            auto sol = sources::exact_cover(src);
            out.concepts = {core};
            if (sol) out.witness = star ? x3c_star_witness(out.generated, src, *sol)
                                        : x3c_clique_witness(out.generated, src, *sol);
            break;
        }
    } else if (family == "regular-ns" || family == "regular-is") {
        const bool ns_variant = family == "regular-ns";
        RegularCliqueInput src = random_regular(rng, tiny);
        auto sol = sources::clique_of_size(src.vertices, src.edges, src.k);
        if (want_yes && !sol) {
            src.k = 2;
            sol = sources::clique_of_size(src.vertices, src.edges, src.k);
        }
        out.generated = from_regular_clique(src, ns_variant ? RegularVariant::NS : RegularVariant::IS);
        out.concepts = {ns_variant ? ns : is};
        if (sol) out.witness = regular_clique_witness(out.generated, src, *sol);
    } else if (family == "multicolored-core" || family == "multicolored-nsis") {
        const bool independent = family == "multicolored-core";
        MulticoloredInput src = random_multicolored(rng, tiny, independent, want_yes);
        if (tiny && !want_yes) {
            // Complete multipartite graph: no colorful independent set; no edges: no colorful clique.
            src.edges.clear();
            if (independent)
                for (int u = 0; u < src.h * src.q; ++u)
                    for (int v = u + 1; v < src.h * src.q; ++v)
                        if (u / src.q != v / src.q) src.edges.emplace_back(u, v);
        }
        auto sol = sources::colorful_set(src, independent);
        out.generated = from_multicolored(src, independent ? MulticoloredVariant::CORE_MIS : MulticoloredVariant::NSIS_MC);
        out.concepts = independent ? std::vector{core} : std::vector{ns, is};
        if (sol) out.witness = multicolored_witness(out.generated, src, *sol);
    } else {
        throw std::invalid_argument("unknown family " + family);
    }
    out.source_yes = out.witness.has_value();
    return out;
}

}  // namespace families
