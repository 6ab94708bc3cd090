#include <doctest.h>

#include <random>

#include "ggasp/generators.hpp"
#include "ggasp/oracle.hpp"
#include "support/naive.hpp"

using namespace ggasp;

TEST_SUITE("oracle") {
    TEST_CASE("enumeration counts") {
        CHECK(enumerate_feasible(canonical("stalker").instance).size() == 4);
        InstanceBuilder one;
        one.add_activity("a");
        one.add_player("x");
        one.set_preferences("x", {{{"a", 1}}});
        CHECK(enumerate_feasible(one.build().instance).size() == 2);

        InstanceBuilder p3;
        p3.add_activity("a");
        for (auto x : {"1", "2", "3"}) p3.add_player(x);
        p3.add_edge("1", "2");
        p3.add_edge("2", "3");
        for (auto x : {"1", "2", "3"}) p3.set_preferences(x, {});
        CHECK(enumerate_feasible(p3.build().instance).size() == 7);
    }

    TEST_CASE("canonical nonexistence") {
        CHECK_FALSE(brute_solve(canonical("stalker").instance, Concept::NashStable));
        CHECK_FALSE(brute_solve(canonical("empty_is").instance, Concept::IndividuallyStable));
        CHECK_FALSE(brute_solve(canonical("empty_is").instance, Concept::CoreStable));
        CHECK_FALSE(brute_solve(canonical("empty_core").instance, Concept::CoreStable));
    }

    TEST_CASE("budget overflow is loud") {
        CHECK_THROWS_AS(brute_solve(random_instance(1, 8, 3, GraphKind::Clique, 0.5), Concept::CoreStable, 5),
                        BudgetExceeded);
    }

    TEST_CASE("uncollapsed enumeration matches a filtered odometer") {
        std::mt19937_64 rng(31);
        for (int round = 0; round < 60; ++round) {
            const Instance inst = naive::random_tree_like(rng, 1 + round % 6, 1 + round % 3, round % 3);
            CHECK(static_cast<std::int64_t>(enumerate_feasible(inst, kDefaultOracleBudget, false).size()) ==
                  naive::count_feasible(inst));
        }
    }

    TEST_CASE("existence matches the definitional search") {
        std::mt19937_64 rng(37);
        for (int round = 0; round < 150; ++round) {
            const Instance inst = round % 3 == 0 ? naive::perturbed_gadget(rng, round % 2, round % 3, 2)
                                                 : naive::random_tree_like(rng, 2 + round % 5, 1 + round % 3, round % 3);
            for (Concept c : {Concept::NashStable, Concept::IndividuallyStable, Concept::CoreStable}) {
                auto pi = brute_solve(inst, c);
                CHECK(pi.has_value() == naive::exists(inst, c));
                if (pi) CHECK(naive::stable(inst, *pi, c));
            }
        }
    }

    TEST_CASE("collapsing copies keeps existence") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const Instance inst = random_copyable_instance(seed, 2 + seed % 2, 1 + seed % 2, GraphKind::Path, 0.5);
            for (Concept c : {Concept::NashStable, Concept::IndividuallyStable, Concept::CoreStable}) {
                bool plain = false;
                FeasibleAssignments all(inst, kDefaultOracleBudget, false);
                while (auto pi = all.next()) plain = plain || is_stable(inst, *pi, c);
                CHECK(brute_solve(inst, c).has_value() == plain);
            }
        }
    }

    TEST_CASE("rational-only pruning keeps every rational assignment") {
        std::mt19937_64 rng(41);
        for (int round = 0; round < 60; ++round) {
            const Instance inst = naive::random_tree_like(rng, 2 + round % 5, 1 + round % 3, round % 3);
            std::int64_t full = 0, pruned = 0;
            FeasibleAssignments a(inst, kDefaultOracleBudget, true, false), b(inst, kDefaultOracleBudget, true, true);
            while (auto pi = a.next()) full += is_individually_rational(inst, *pi);
            while (auto pi = b.next()) pruned += is_individually_rational(inst, *pi);
            CHECK(full == pruned);
        }
    }
}
