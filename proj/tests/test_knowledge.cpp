#include <doctest.h>

#include <cmath>
#include <numeric>

#include "scvn/knowledge.hpp"
#include "scvn/rng.hpp"

using namespace scvn;

TEST_CASE("zipf popularity closed form") {
    const std::vector<int> four{3, 1, 4, 2};
    for (double p : zipf_popularity(four, 0.0)) CHECK(p == doctest::Approx(0.25).epsilon(1e-15));

    const std::vector<int> two{1, 2};
    const auto p = zipf_popularity(two, 1.0);
    CHECK(p[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(p[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("zipf popularity against an extended-precision reference") {
    std::vector<int> ranks(12);
    std::iota(ranks.begin(), ranks.end(), 1);
    std::swap(ranks[0], ranks[7]);
    const auto p = zipf_popularity(ranks, 1.0);
    long double h = 0.0L;
    for (int e = 12; e >= 1; --e) h += 1.0L / static_cast<long double>(e);
    double total = 0.0;
    for (std::size_t n = 0; n < 12; ++n) {
        const long double ref = (1.0L / static_cast<long double>(ranks[n])) / h;
        CHECK(std::abs(static_cast<long double>(p[n]) - ref) <= 1e-15L);
        total += p[n];
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
}

TEST_CASE("zipf popularity rejects invalid ranks") {
    const std::vector<int> dup{1, 1};
    CHECK_THROWS_AS(zipf_popularity(dup, 1.0), InvalidConfig);
    const std::vector<int> zero{0, 1};
    CHECK_THROWS_AS(zipf_popularity(zero, 1.0), InvalidConfig);
}

TEST_CASE("preference satisfaction") {
    const std::vector<double> p{2.0 / 3.0, 1.0 / 3.0};
    CHECK(preference_satisfaction(KbSet::full(2), p) == doctest::Approx(1.0));
    CHECK(preference_satisfaction(KbSet{}, p) == 0.0);
    CHECK(preference_satisfaction(KbSet::from_indicator({1, 0}), p) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("per-KB arrival split") {
    const std::vector<double> uniform(4, 0.25);
    for (double r : per_kb_arrival(100.0, uniform)) CHECK(r == doctest::Approx(25.0));
    const auto r = per_kb_arrival(100.0, std::vector<double>{2.0 / 3.0, 1.0 / 3.0});
    CHECK(r[0] == doctest::Approx(200.0 / 3.0));
    CHECK(r[1] == doctest::Approx(100.0 / 3.0));
    CHECK_THROWS(per_kb_arrival(0.0, uniform));
}

TEST_CASE("effective arrival") {
    const std::vector<double> rates{50, 30, 20};
    CHECK(effective_arrival(KbSet::full(3), KbSet::full(3), rates) == doctest::Approx(100.0));
    CHECK(effective_arrival(KbSet::from_indicator({1, 0, 0}), KbSet::from_indicator({0, 1, 1}), rates) == 0.0);
    CHECK(effective_arrival(KbSet::from_indicator({1, 1, 0}), KbSet::from_indicator({1, 0, 1}), rates) ==
          doctest::Approx(50.0));
}

TEST_CASE("mismatch degree") {
    CHECK(mismatch_degree(KbSet::from_indicator({1, 0, 1}), KbSet::full(3), std::vector<double>{5, 6, 7}) == 0.0);
    CHECK(mismatch_degree(KbSet::from_indicator({1, 1}), KbSet::from_indicator({1, 0}), std::vector<double>{50, 50}) ==
          doctest::Approx(0.5));
    CHECK(mismatch_degree(KbSet::from_indicator({1, 1, 0}), KbSet::from_indicator({0, 1, 1}),
                          std::vector<double>{60, 30, 10}) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(mismatch_degree(KbSet{}, KbSet::full(2), std::vector<double>{1, 1}), UndefinedMismatch);
}

TEST_CASE("matched plus mismatched traffic is conserved and coverage is monotone") {
    Rng rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 10));
        std::vector<double> rates(static_cast<std::size_t>(n));
        for (double& r : rates) r = rng.uniform(0.1, 50.0);
        const KbSet ai(rng.uniform_int(1, (std::int64_t{1} << n) - 1));
        const KbSet aj(rng.uniform_int(0, (std::int64_t{1} << n) - 1));
        double sent = 0.0;
        ai.for_each([&](int k) { sent += rates[static_cast<std::size_t>(k)]; });
        const double leff = effective_arrival(ai, aj, rates);
        const double theta = mismatch_degree(ai, aj, rates);
        CHECK(leff + theta * sent == doctest::Approx(sent).epsilon(1e-12));

        const int extra = static_cast<int>(rng.uniform_int(0, n - 1));
        KbSet bigger = aj;
        bigger.set(extra);
        CHECK(mismatch_degree(ai, bigger, rates) <= theta + 1e-15);
        CHECK(effective_arrival(ai, bigger, rates) >= leff - 1e-12);
    }
}

TEST_CASE("storage and preference prefix") {
    const std::vector<int> sizes{2, 3, 1};
    CHECK(storage_used(KbSet::full(3), sizes) == 6);
    CHECK(fits(KbSet::from_indicator({1, 0, 1}), sizes, 3));
    CHECK_FALSE(fits(KbSet::from_indicator({1, 1, 0}), sizes, 4));

    const std::vector<double> p{0.7, 0.3};
    const std::vector<int> unit{1, 1};
    bool reached = false;
    CHECK(preference_prefix(p, unit, 1, 0.5, &reached) == KbSet::from_indicator({1, 0}));
    CHECK(reached);
    CHECK(preference_prefix(p, unit, 0, 0.5, &reached).empty());
    CHECK_FALSE(reached);
    CHECK(preference_prefix(p, unit, 2, 0.0, &reached).empty());
    CHECK(reached);
}

TEST_CASE("KbSet text round trip") {
    const KbSet a = KbSet::from_indicator({1, 0, 1, 1});
    CHECK(KbSet::parse(a.to_string(4)) == a);
    CHECK(a.size() == 3);
}
