#include <doctest.h>

#include <random>

#include "ggasp/core_solvers.hpp"
#include "ggasp/fpt.hpp"
#include "ggasp/generators.hpp"
#include "ggasp/oracle.hpp"
#include "support/naive.hpp"

using namespace ggasp;

namespace {

Guards roomy() {
    Guards g;
    g.max_component = 8;
    return g;
}

Instance two_pairs() {
    InstanceBuilder b;
    b.add_activity("a");
    for (auto x : {"1", "2", "3", "4"}) b.add_player(x);
    b.add_edge("1", "2");
    b.add_edge("3", "4");
    for (auto x : {"1", "2", "3", "4"}) b.set_preferences(x, {{{"a", 2}}});
    return b.build().instance;
}

}  // namespace

TEST_SUITE("fpt") {
    TEST_CASE("canonical instances") {
        const Instance st = canonical("stalker").instance;
        CHECK_FALSE(ns_tree(st));
        CHECK_FALSE(solve_small_components(st, Concept::NashStable));
        CHECK(*is_tree(st) == Assignment{0, kVoid});
        CHECK_FALSE(is_tree(canonical("empty_is").instance));
        CHECK_FALSE(core_small_components(canonical("empty_core").instance));
    }

    TEST_CASE("two disjoint pairs competing for one activity") {
        const Instance inst = two_pairs();
        for (Concept c : {Concept::NashStable, Concept::IndividuallyStable, Concept::CoreStable}) {
            const auto got = solve_small_components(inst, c);
            CHECK(got.has_value() == naive::exists(inst, c));
            if (got) CHECK(naive::stable(inst, *got, c));
        }
        // One pair holds a; the idle pair cannot start it alone.
        CHECK(naive::nash(inst, Assignment{kVoid, kVoid, 0, 0}));
        CHECK_FALSE(naive::core(inst, Assignment{kVoid, kVoid, kVoid, kVoid}));
    }

    TEST_CASE("star where everybody wants the full group") {
        InstanceBuilder b;
        b.add_activity("a");
        for (auto x : {"c", "l1", "l2"}) b.add_player(x);
        b.add_edge("c", "l1");
        b.add_edge("c", "l2");
        for (auto x : {"c", "l1", "l2"}) b.set_preferences(x, {{{"a", 3}}});
        const Instance inst = b.build().instance;
        CHECK(naive::nash(inst, *ns_tree(inst)));
        CHECK(*core_small_components(inst) == Assignment{0, 0, 0});
    }

    TEST_CASE("path from a rainbow source") {
        const EdgeColoredPath src{2, {0, 1}, 1};
        const Instance inst = from_rainbow_matching(src, RainbowVariant::NS).instance;
        CHECK(ns_tree(inst).has_value());
        CHECK(brute_solve(inst, Concept::NashStable).has_value());
    }

    TEST_CASE("single activity component agrees with the constructive core") {
        std::mt19937_64 rng(5);
        for (int round = 0; round < 40; ++round) {
            const Instance inst = naive::random_tree_like(rng, 2 + round % 5, 1, round % 3);
            const auto got = core_small_components(inst, roomy());
            REQUIRE(got.has_value());
            CHECK(is_stable(inst, *got, Concept::CoreStable));
            CHECK(is_stable(inst, core_single_activity(inst), Concept::CoreStable));
        }
    }

    TEST_CASE("guards") {
        Guards tight;
        tight.max_component = 1;
        CHECK_THROWS_AS(solve_small_components(canonical("stalker").instance, Concept::NashStable, tight),
                        PreconditionError);
        tight.max_p_tree = 0;
        CHECK_THROWS_AS(ns_tree(canonical("stalker").instance, tight), PreconditionError);
        CHECK_THROWS_AS(is_tree(random_instance(1, 4, 1, GraphKind::Clique, 0.5)), PreconditionError);
    }

    TEST_CASE("tree solvers match the definitional search") {
        std::mt19937_64 rng(13);
        int none_ns = 0, none_is = 0;
        for (int round = 0; round < 400; ++round) {
            const Instance inst = round % 2 ? naive::perturbed_gadget(rng, 0, round % 4 == 1 ? 0 : 2, 3)
                                            : naive::random_tree_like(rng, 2 + round % 6, 1 + round % 3, round % 4 ? 0 : 2);
            const auto ns = ns_tree(inst);
            const auto is = is_tree(inst);
            const bool ns_exp = brute_solve(inst, Concept::NashStable).has_value();
            const bool is_exp = brute_solve(inst, Concept::IndividuallyStable).has_value();
            CHECK(ns.has_value() == ns_exp);
            CHECK(is.has_value() == is_exp);
            if (ns) CHECK(is_stable(inst, *ns, Concept::NashStable));
            if (is) CHECK(is_stable(inst, *is, Concept::IndividuallyStable));
            none_ns += !ns_exp;
            none_is += !is_exp;
        }
        CHECK(none_ns > 20);
        CHECK(none_is > 20);
    }

    TEST_CASE("component solvers match the oracle on split graphs") {
        std::mt19937_64 rng(17);
        int none_core = 0;
        for (int round = 0; round < 200; ++round) {
            Instance inst = round % 2 ? naive::perturbed_gadget(rng, round % 4 == 1 ? 1 : 0, round % 3, 2)
                                      : random_instance(round, 2 + round % 6, 1 + round % 3, GraphKind::TwoComponents,
                                                        0.3 + 0.1 * (round % 5));
            for (Concept c : {Concept::NashStable, Concept::IndividuallyStable, Concept::CoreStable}) {
                const auto got = solve_small_components(inst, c, roomy());
                const bool expected = brute_solve(inst, c).has_value();
                CHECK(got.has_value() == expected);
                if (got) CHECK(is_stable(inst, *got, c));
                if (c == Concept::CoreStable) none_core += !expected;
            }
        }
        CHECK(none_core > 10);
    }

}
