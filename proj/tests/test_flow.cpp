#include <doctest.h>

#include <limits>
#include <random>

#include "ggasp/flow.hpp"
#include "ggasp/generators.hpp"
#include "ggasp/oracle.hpp"
#include "support/naive.hpp"

using namespace ggasp;

namespace {

std::int64_t min_cut(const FlowNetwork& net) {
    const int n = net.num_nodes();
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t side = 0; side < (1u << n); ++side) {
        if (!((side >> net.source()) & 1u) || ((side >> net.sink()) & 1u)) continue;
        std::int64_t cut = 0;
        for (std::size_t e = 0; e < net.arcs().size(); e += 2) {
            const auto& a = net.arcs()[e];
            if (((side >> a.from) & 1u) && !((side >> a.to) & 1u)) cut += a.capacity;
        }
        best = std::min(best, cut);
    }
    return best;
}

void check_flow_valid(const FlowNetwork& net, std::int64_t value) {
    std::vector<std::int64_t> balance(net.num_nodes(), 0);
    for (std::size_t e = 0; e < net.arcs().size(); e += 2) {
        const auto& a = net.arcs()[e];
        CHECK(a.flow >= 0);
        CHECK(a.flow <= a.capacity);
        balance[a.from] -= a.flow;
        balance[a.to] += a.flow;
    }
    for (int v = 0; v < net.num_nodes(); ++v)
        if (v != net.source() && v != net.sink()) CHECK(balance[v] == 0);
    CHECK(balance[net.sink()] == value);
}

int count_of(const Assignment& pi, int a) { return static_cast<int>(std::count(pi.begin(), pi.end(), a)); }

}  // namespace

TEST_SUITE("flow") {
    TEST_CASE("textbook network") {
        FlowNetwork net(4, 0, 3);
        net.add_arc(0, 1, 3);
        net.add_arc(0, 2, 2);
        net.add_arc(1, 2, 1);
        net.add_arc(1, 3, 2);
        net.add_arc(2, 3, 3);
        CHECK(max_flow(net) == 5);
        check_flow_valid(net, 5);
    }

    TEST_CASE("disconnected sink") {
        FlowNetwork net(3, 0, 2);
        net.add_arc(0, 1, 7);
        CHECK(max_flow(net) == 0);
    }

    TEST_CASE("max flow equals min cut on random networks") {
        std::mt19937_64 rng(3);
        for (int round = 0; round < 100; ++round) {
            const int n = 2 + static_cast<int>(rng() % 7);
            FlowNetwork net(n, 0, n - 1);
            const int arcs = static_cast<int>(rng() % (n * 3));
            for (int e = 0; e < arcs; ++e) {
                const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
                if (u != v) net.add_arc(u, v, static_cast<std::int64_t>(rng() % 10));
            }
            const std::int64_t value = max_flow(net);
            CHECK(value == min_cut(net));
            check_flow_valid(net, value);
        }
    }

    TEST_CASE("clique solvers match the oracle") {
        std::mt19937_64 rng(11);
        int none_ns = 0, none_is = 0;
        for (int round = 0; round < 300; ++round) {
            const Instance inst = round % 3 == 0
                                      ? naive::perturbed_gadget(rng, round % 2, 1, 2)
                                      : random_instance(round, 1 + round % 6, 1 + round % 3, GraphKind::Clique,
                                                        0.2 + 0.1 * (round % 6));
            const auto ns = ns_clique_witness(inst);
            const auto is = is_clique_witness(inst);
            const bool ns_exp = brute_solve(inst, Concept::NashStable).has_value();
            const bool is_exp = brute_solve(inst, Concept::IndividuallyStable).has_value();
            CHECK(ns.has_value() == ns_exp);
            CHECK(is.has_value() == is_exp);
            for (const auto* w : {ns ? &*ns : nullptr, is ? &*is : nullptr}) {
                if (!w) continue;
                for (int a = 0; a < inst.num_activities(); ++a) CHECK(count_of(w->assignment, a) == w->sizes[a]);
                CHECK(count_of(w->assignment, kVoid) == w->void_count);
            }
            if (ns) CHECK(naive::nash(inst, ns->assignment));
            if (is) CHECK(naive::individual(inst, is->assignment));
            none_ns += !ns_exp;
            none_is += !is_exp;
        }
        CHECK(none_ns > 10);
        CHECK(none_is > 5);
    }

    TEST_CASE("canonical cyclic instance on a triangle") {
        const Instance path = canonical("empty_is").instance;
        auto edges = path.edges();
        edges.emplace_back(0, 2);
        const Instance tri(3, edges, path.roster(), path.preferences());
        CHECK(is_clique(tri).has_value() == brute_solve(tri, Concept::IndividuallyStable).has_value());
        CHECK(ns_clique(tri).has_value() == naive::exists(tri, Concept::NashStable));
    }

    TEST_CASE("preconditions") {
        CHECK_THROWS_AS(ns_clique(random_instance(2, 4, 1, GraphKind::Path, 0.5)), PreconditionError);
        Guards g;
        g.max_p_clique = 1;
        CHECK_THROWS_AS(is_clique(random_instance(2, 3, 2, GraphKind::Clique, 0.5), g), PreconditionError);
    }
}
