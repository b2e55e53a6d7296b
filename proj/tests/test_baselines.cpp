#include <doctest.h>

#include "scvn/baselines.hpp"
#include "scvn/checker.hpp"
#include "test_support.hpp"

using namespace scvn;
using scvn::testing::line_scenario;

TEST_CASE("preference-first construction") {
    ScenarioConfig cfg;
    cfg.eta_min = 0.0;
    cfg.capacity = 2;
    const Scenario zero = line_scenario({0, 10}, 4, cfg);
    const auto r0 = preference_first_kbc(zero, 1);
    for (const KbSet a : r0.kbc.alpha) CHECK(a.size() == 2);

    ScenarioConfig fit;
    fit.capacity = 1;
    fit.eta_min = 0.5;
    fit.zipf_skew = 1.0;
    const Scenario two = line_scenario({0, 10}, 2, fit);
    CHECK(preference_first_kbc(two, 1).kbc.alpha[0] == KbSet::from_indicator({1, 0}));

    ScenarioConfig all;
    all.capacity = 100;
    for (const KbSet a : preference_first_kbc(line_scenario({0, 10}, 5, all), 3).kbc.alpha) {
        CHECK(a == KbSet::full(5));
    }

    ScenarioConfig unreachable;
    unreachable.capacity = 0;
    const auto r = preference_first_kbc(line_scenario({0, 10}, 3, unreachable), 1);
    CHECK(r.below_threshold == std::vector<int>{0, 1});
}

TEST_CASE("preference-first construction is seed-deterministic") {
    ScenarioConfig cfg;
    cfg.vehicle_count = 20;
    const Scenario sc = generate_scenario(cfg, 2);
    CHECK(preference_first_kbc(sc, 5).kbc == preference_first_kbc(sc, 5).kbc);
}

TEST_CASE("distance-first pairing") {
    CHECK(dfp_pair(line_scenario({0, 10}, 2)).partner == std::vector<int>{1, 0});
    CHECK(dfp_pair(line_scenario({0, 1, 10, 11}, 2)).partner == std::vector<int>{1, 0, 3, 2});
    const VspAssignment lone = dfp_pair(line_scenario({0, 10, 5000}, 2));
    CHECK(lone.unpaired() == std::vector<int>{2});
}

TEST_CASE("knowledge-first pairing") {
    const Scenario same = line_scenario({0, 5, 20}, 3);
    KbcPolicy kbc;
    kbc.kb_count = 3;
    kbc.alpha.assign(3, KbSet::full(3));
    CHECK(kfp_pair(same, kbc).partner[0] == 1);

    // Vehicle 2 covers everything vehicle 0 sends; vehicle 1 is nearer but covers less.
    KbcPolicy cover;
    cover.kb_count = 3;
    cover.alpha = {KbSet::from_indicator({1, 1, 0}), KbSet::from_indicator({1, 0, 0}), KbSet::full(3)};
    CHECK(kb_matching_degree(same, cover, 0, 2) == doctest::Approx(1.0));
    CHECK(kfp_pair(same, cover).partner[0] == 2);

    // Hand-ranked scores for vehicle 0 with rates proportional to Zipf(1) over three KBs.
    const auto r = same.arrivals(0);
    const double theta1 = r[1] / (r[0] + r[1]);
    CHECK(kb_matching_degree(same, cover, 0, 1) == doctest::Approx(1.0 - theta1));
    KbcPolicy empty = cover;
    empty.alpha[0] = KbSet{};
    CHECK(kb_matching_degree(same, empty, 0, 1) == 0.0);
}

TEST_CASE("baseline pairings are valid partial matchings") {
    ScenarioConfig cfg;
    cfg.vehicle_count = 40;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Scenario sc = generate_scenario(cfg, seed);
        for (Method m : {Method::DFP, Method::KFP}) {
            const SolveReport rep = run_baseline(sc, m, seed);
            CHECK(rep.vsp.valid_on(sc.graph));
            const CheckerVerdict v = check_solution(sc, rep.kbc, rep.vsp);
            CHECK(v.status.symmetry);
            CHECK(v.status.neighbors);
            CHECK(v.status.storage);
        }
    }
}

TEST_CASE("method names") {
    for (Method m : {Method::S4, Method::DFP, Method::KFP}) CHECK(parse_method(method_name(m)) == m);
    CHECK_THROWS_AS(parse_method("greedy"), InvalidConfig);
    CHECK_THROWS(run_baseline(line_scenario({0, 10}, 2), Method::S4, 1));
}
