#include <doctest.h>

#include "ggasp/dispatch.hpp"
#include "ggasp/generators.hpp"
#include "ggasp/oracle.hpp"

using namespace ggasp;

namespace {

Instance copyable_stalker() {
    InstanceBuilder b;
    b.add_activity("a", 2);
    b.add_player("1");
    b.add_player("2");
    b.add_edge("1", "2");
    b.set_preferences("1", {{{"a", 1}}});
    b.set_preferences("2", {{{"a", 2}}});
    return b.build().instance;
}

Instance triangle_and_edge() {
    InstanceBuilder b;
    b.add_activity("a");
    b.add_activity("b");
    for (auto x : {"1", "2", "3", "4", "5"}) {
        b.add_player(x);
        b.set_preferences(x, {{{"a", 2}, {"b", 3}}});
    }
    for (auto [u, v] : {std::pair{"1", "2"}, {"2", "3"}, {"1", "3"}, {"4", "5"}}) b.add_edge(u, v);
    return b.build().instance;
}

}  // namespace

TEST_SUITE("dispatch") {
    TEST_CASE("names round trip") {
        for (Algorithm a : all_algorithms()) CHECK(parse_algorithm(algorithm_name(a)) == a);
        CHECK(parse_algorithm("auto") == Algorithm::Auto);
        CHECK_FALSE(parse_algorithm("fastest"));
    }

    TEST_CASE("automatic choice") {
        const Guards g;
        const Instance st = canonical("stalker").instance;
        CHECK(choose_algorithm(st, Concept::NashStable, g) == Algorithm::TreeNs);
        CHECK(choose_algorithm(st, Concept::IndividuallyStable, g) == Algorithm::TreeIs);
        CHECK(choose_algorithm(st, Concept::CoreStable, g) == Algorithm::CoreSingle);
        CHECK(choose_algorithm(copyable_stalker(), Concept::CoreStable, g) == Algorithm::CopyableCore);
        CHECK(choose_algorithm(copyable_stalker(), Concept::NashStable, g) == Algorithm::CopyableNs);
        CHECK(choose_algorithm(random_instance(1, 5, 2, GraphKind::Clique, 0.5), Concept::NashStable, g) ==
              Algorithm::CliqueFlow);
        CHECK(choose_algorithm(triangle_and_edge(), Concept::NashStable, g) == Algorithm::SmallComp);
        CHECK(choose_algorithm(triangle_and_edge(), Concept::CoreStable, g) == Algorithm::SmallComp);
        CHECK(choose_algorithm(canonical("empty_core").instance, Concept::CoreStable, g) == Algorithm::CoreSubsets);
    }

    TEST_CASE("refusals name the guards") {
        Guards g;
        g.max_p_clique = 1;
        const Instance k5 = random_instance(1, 5, 2, GraphKind::Clique, 0.5);
        const auto why = why_not(k5, Concept::NashStable, Algorithm::CliqueFlow, g);
        REQUIRE(why);
        CHECK(why->find("--max-p") != std::string::npos);
        CHECK(why_not(k5, Concept::NashStable, Algorithm::TreeNs, g));
        CHECK_FALSE(why_not(k5, Concept::NashStable, Algorithm::Brute, g));
        CHECK(why_not(k5, Concept::CoreStable, Algorithm::TreeIs, g));
        CHECK(choose_algorithm(k5, Concept::NashStable, g) == Algorithm::Brute);
        CHECK_FALSE(refusal_reasons(k5, Concept::NashStable, g).empty());
        CHECK_THROWS_AS(run_algorithm(k5, Concept::NashStable, Algorithm::CliqueFlow, g), PreconditionError);
    }

    TEST_CASE("every applicable algorithm agrees with brute force") {
        const GraphKind kinds[] = {GraphKind::Path, GraphKind::Star, GraphKind::Forest, GraphKind::Clique,
                                   GraphKind::TwoComponents, GraphKind::General};
        const Guards g;
        for (std::uint64_t seed = 0; seed < 90; ++seed) {
            const Instance inst = random_instance(seed, 2 + seed % 5, 1 + seed % 3, kinds[seed % 6], 0.4);
            for (Concept c : {Concept::NashStable, Concept::IndividuallyStable, Concept::CoreStable}) {
                const bool expected = brute_solve(inst, c).has_value();
                const auto algs = applicable_algorithms(inst, c, g);
                CHECK(algs.back() == Algorithm::Brute);
                for (Algorithm a : algs) {
                    INFO(algorithm_name(a) << " " << concept_name(c) << " seed " << seed);
                    const auto got = run_algorithm(inst, c, a, g);
                    CHECK(got.has_value() == expected);
                    if (got) CHECK(is_stable(inst, *got, c));
                }
            }
        }
    }
}
