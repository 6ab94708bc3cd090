#include <doctest.h>

#include <random>

#include "ggasp/generators.hpp"
#include "ggasp/oracle.hpp"
#include "ggasp/verify.hpp"
#include "support/naive.hpp"

using namespace ggasp;

namespace {

Assignment by_name(const Instance& inst, std::initializer_list<const char*> names) {
    Assignment pi;
    for (const char* s : names) pi.push_back(std::string(s) == "-" ? kVoid : *inst.activity_by_name(s));
    return pi;
}

}  // namespace

TEST_SUITE("verify") {
    TEST_CASE("feasibility and rationality") {
        const Instance ex2 = canonical("empty_core").instance;
        CHECK_FALSE(is_feasible(ex2, by_name(ex2, {"a", "-", "a"})));
        CHECK(is_feasible(ex2, by_name(ex2, {"-", "-", "-"})));
        CHECK(is_feasible(ex2, by_name(ex2, {"b", "b", "-"})));

        const Instance st = canonical("stalker").instance;
        CHECK(is_individually_rational(st, by_name(st, {"a", "-"})));
        CHECK_FALSE(is_individually_rational(st, by_name(st, {"-", "a"})));
        CHECK(ir_violation(st, by_name(st, {"-", "a"})) == 1);
        CHECK(is_individually_rational(st, by_name(st, {"-", "-"})));
    }

    TEST_CASE("stalker deviations") {
        const Instance st = canonical("stalker").instance;
        CHECK(find_ns_deviation(st, by_name(st, {"-", "-"})) == Deviation{DeviationKind::NS, 0, 0});
        CHECK(find_ns_deviation(st, by_name(st, {"a", "-"})) == Deviation{DeviationKind::NS, 1, 0});
        CHECK_FALSE(find_is_deviation(st, by_name(st, {"a", "-"})));
        CHECK(is_stable(st, by_name(st, {"a", "-"}), Concept::IndividuallyStable));
    }

    TEST_CASE("nobody to move") {
        InstanceBuilder b;
        b.add_activity("a");
        b.add_player("x");
        b.set_preferences("x", {{void_pref()}});
        const Instance inst = b.build().instance;
        CHECK_FALSE(find_ns_deviation(inst, {kVoid}));
    }

    TEST_CASE("deviations in the cyclic three-player example") {
        const Instance ex3 = canonical("empty_is").instance;
        CHECK(find_is_deviation(ex3, by_name(ex3, {"c", "c", "c"})) ==
              Deviation{DeviationKind::IS, 0, *ex3.activity_by_name("a")});
        CHECK(find_is_deviation(ex3, by_name(ex3, {"c", "b", "a"})) ==
              Deviation{DeviationKind::IS, 1, *ex3.activity_by_name("a")});
    }

    TEST_CASE("core blocks in the empty-core example") {
        const Instance ex2 = canonical("empty_core").instance;
        CHECK(find_core_block(ex2, by_name(ex2, {"b", "b", "-"})) == CoreBlock{{1, 2}, *ex2.activity_by_name("a")});
        CHECK(find_core_block(ex2, by_name(ex2, {"-", "-", "-"})) == CoreBlock{{2}, *ex2.activity_by_name("b")});
        CHECK_THROWS_AS(find_core_block(canonical("stalker").instance, {kVoid, 0}), NotIndividuallyRational);
    }

    TEST_CASE("certificates") {
        const Instance st = canonical("stalker").instance;
        const auto cert = certify(st, {0, kVoid}, Concept::NashStable);
        CHECK_FALSE(cert.stable);
        CHECK(certificate_json(st, cert) ==
              R"({"stable":false,"concept":"ns","witness":{"kind":"ns-deviation","player":1,"activity":"a"}})");
        CHECK(certify(st, {0, kVoid}, Concept::IndividuallyStable).stable);
        CHECK(parse_concept("core") == Concept::CoreStable);
        CHECK_FALSE(parse_concept("strong"));
    }

    TEST_CASE("verifiers agree with the definitions on every assignment") {
        std::mt19937_64 rng(21);
        int checked = 0;
        for (int round = 0; round < 120; ++round) {
            const Instance inst = round % 2 ? naive::random_tree_like(rng, 2 + round % 5, 1 + round % 3, round % 3)
                                            : naive::perturbed_gadget(rng, round % 4 < 2 ? 0 : 1, round % 3, 1);
            naive::for_each_map(inst, [&](const Assignment& pi) {
                const bool feas = naive::feasible(inst, pi);
                CHECK(is_feasible(inst, pi) == feas);
                if (!feas) return false;
                for (Concept c : {Concept::NashStable, Concept::IndividuallyStable, Concept::CoreStable})
                    CHECK(is_stable(inst, pi, c) == naive::stable(inst, pi, c));
                ++checked;
                return false;
            });
        }
        CHECK(checked > 1000);
    }

    TEST_CASE("witnesses replay") {
        std::mt19937_64 rng(23);
        for (int round = 0; round < 60; ++round) {
            const Instance inst = naive::random_tree_like(rng, 2 + round % 5, 1 + round % 3, round % 3);
            naive::for_each_map(inst, [&](const Assignment& pi) {
                if (!naive::feasible(inst, pi) || !naive::rational(inst, pi)) return false;
                if (auto d = find_is_deviation(inst, pi)) {
                    Assignment next = pi;
                    next[d->player] = d->target;
                    CHECK(inst.prefers(d->player, held(next, d->player), held(pi, d->player)));
                    if (d->target != kVoid)
                        for (int j : members(pi, d->target)) CHECK(inst.weakly_prefers(j, held(next, j), held(pi, j)));
                } else if (auto ns = find_ns_deviation(inst, pi)) {
                    // Only refusals keep an NS move from being an IS move.
                    CHECK(ns->target != kVoid);
                }
                if (auto b = find_core_block(inst, pi)) {
                    CHECK(is_connected_subset(inst.graph(), b->coalition));
                    const auto held_now = members(pi, b->activity);
                    CHECK(std::includes(b->coalition.begin(), b->coalition.end(), held_now.begin(), held_now.end()));
                    for (int i : b->coalition)
                        CHECK(inst.prefers(i, {b->activity, static_cast<int>(b->coalition.size())}, held(pi, i)));
                }
                return false;
            });
        }
    }
}
