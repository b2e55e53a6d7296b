#include <doctest.h>

#include "scvn/queueing.hpp"
#include "scvn/rng.hpp"

using namespace scvn;

TEST_CASE("epsilon ratios over matched KBs") {
    const KbSet one = KbSet::from_indicator({1, 0});
    CHECK(epsilon_ratios(one, one, std::vector<double>{0.3, 0.7})[0] == doctest::Approx(1.0));

    const KbSet a = KbSet::from_indicator({1, 1, 1});
    const KbSet b = KbSet::from_indicator({1, 1, 0});
    const auto eps = epsilon_ratios(a, b, std::vector<double>{0.5, 0.25, 0.25});
    CHECK(eps[0] == doctest::Approx(2.0 / 3.0));
    CHECK(eps[1] == doctest::Approx(1.0 / 3.0));

    CHECK_THROWS_AS(epsilon_ratios(one, KbSet::from_indicator({0, 1}), std::vector<double>{0.5, 0.5}),
                    NoCommonKnowledge);
}

TEST_CASE("service moments") {
    const KbSet one = KbSet::from_indicator({1});
    const auto m1 = service_moments(one, one, std::vector<double>{1.0}, std::vector<double>{0.01});
    CHECK(m1.mean == doctest::Approx(0.01));
    CHECK(m1.variance == doctest::Approx(1e-4));

    const KbSet two = KbSet::full(2);
    const auto m2 = service_moments(two, two, std::vector<double>{0.5, 0.5}, std::vector<double>{0.01, 0.005});
    CHECK(m2.mean == doctest::Approx(0.0075).epsilon(1e-12));
    CHECK(m2.variance == doctest::Approx(3.125e-5).epsilon(1e-12));

    const auto half = service_moments(two, two, std::vector<double>{0.5, 0.5}, std::vector<double>{0.005, 0.0025});
    CHECK(half.mean == doctest::Approx(m2.mean / 2));
    CHECK(half.variance == doctest::Approx(m2.variance / 4));
}

TEST_CASE("Pollaczek-Khinchine waiting time") {
    CHECK(pk_latency(0.0, 0.01, 1e-4) == 0.0);
    CHECK(pk_latency(50.0, 0.01, 1e-4) == doctest::Approx(0.01).epsilon(1e-12));
    const double rho = 0.5;
    CHECK(pk_latency(50.0, 0.01, 1e-4) == doctest::Approx(rho / (100.0 * (1 - rho))));
    CHECK(is_unstable(pk_latency(100.0, 0.01, 1e-4)));
    CHECK(is_unstable(pk_latency(150.0, 0.01, 1e-4)));
}

TEST_CASE("waiting time is nondecreasing in the arrival rate") {
    Rng rng(5);
    for (int k = 0; k < 200; ++k) {
        const double mean = rng.uniform(1e-3, 1e-2);
        const double var = rng.uniform(0.0, mean * mean);
        const double l1 = rng.uniform(0.0, 0.99 / mean);
        const double l2 = rng.uniform(l1, 0.99 / mean);
        CHECK(pk_latency(l1, mean, var) <= pk_latency(l2, mean, var));
    }
}

TEST_CASE("pair queue model and throughput") {
    const KbSet a = KbSet::full(2);
    const std::vector<double> p{0.5, 0.5};
    const std::vector<double> rates{30.0, 30.0};
    const std::vector<double> times{0.01, 0.005};
    const PairQueueModel q = pair_queue_model(a, a, p, rates, times);
    CHECK(q.lambda_eff == doctest::Approx(60.0));
    CHECK(q.service.mean == doctest::Approx(0.0075));
    CHECK(q.utilization == doctest::Approx(0.45));
    CHECK(q.stable());
    CHECK(interpretation_throughput(q) == doctest::Approx(1.0 / 0.0075));

    const PairQueueModel none =
        pair_queue_model(KbSet::from_indicator({1, 0}), KbSet::from_indicator({0, 1}), p, rates, times);
    CHECK(none.lambda_eff == 0.0);
    CHECK(interpretation_throughput(none) == 0.0);
}
