#include <doctest.h>

#include <cmath>

#include "scvn/des.hpp"
#include "scvn/queueing.hpp"
#include "scvn/validation.hpp"

using namespace scvn;

TEST_CASE("FIFO departures follow arrival order") {
    const std::vector<double> arr{0.0, 0.1, 0.15, 1.0, 1.01};
    const std::vector<double> svc{0.2, 0.05, 0.3, 0.01, 0.5};
    const auto rec = simulate_fifo(arr, svc);
    CHECK(rec[0].start == 0.0);
    CHECK(rec[1].start == doctest::Approx(0.2));
    CHECK(rec[2].start == doctest::Approx(0.25));
    CHECK(rec[3].start == doctest::Approx(1.0));
    CHECK(rec[4].start == doctest::Approx(1.01));
    for (std::size_t k = 1; k < rec.size(); ++k) {
        CHECK(rec[k].departure >= rec[k - 1].departure);
        CHECK(rec[k].start >= rec[k].arrival);
    }
    const std::vector<double> bad{1.0, 0.5};
    CHECK_THROWS(simulate_fifo(bad, std::vector<double>{0.1, 0.1}));
}

TEST_CASE("M/M/1 waiting time") {
    DesConfig c;
    c.lambda_eff = 50.0;
    c.weights = {1.0};
    c.mean_times = {0.01};
    c.seed = 17;
    const QueueStats s = des_oracle(c);
    CHECK(std::abs(s.mean_wait - 0.01) <= std::max(0.03 * 0.01, s.confidence_halfwidth));
}

TEST_CASE("two-KB weighted-sum service matches the analytic wait") {
    DesConfig c;
    c.lambda_eff = 80.0;
    c.weights = {0.5, 0.5};
    c.mean_times = {0.01, 0.005};
    c.seed = 23;
    const double pk = pk_latency(80.0, 0.0075, 3.125e-5);
    const QueueStats s = des_oracle(c);
    CHECK(std::abs(s.mean_wait - pk) <= std::max(0.03 * pk, s.confidence_halfwidth));
}

TEST_CASE("light traffic waits almost nothing") {
    DesConfig c;
    c.lambda_eff = 1e-3;
    c.weights = {1.0};
    c.mean_times = {0.01};
    CHECK(des_oracle(c).mean_wait < 1e-5);
}

TEST_CASE("DES contract checks") {
    DesConfig c;
    c.lambda_eff = 100.0;
    c.weights = {1.0};
    c.mean_times = {0.01};
    CHECK_THROWS_AS(des_oracle(c), UnstableQueue);
    c.lambda_eff = 10.0;
    c.horizon = 1000;
    CHECK_THROWS(des_oracle(c));
}

TEST_CASE("DES is reproducible and exportable") {
    DesConfig c;
    c.lambda_eff = 40.0;
    c.weights = {0.25, 0.75};
    c.mean_times = {0.008, 0.006};
    c.seed = 99;
    const QueueStats a = des_oracle(c);
    const QueueStats b = des_oracle(c);
    CHECK(a.mean_wait == b.mean_wait);
    CHECK(des_config_hash(c) == des_config_hash(c));
    const std::string row = des_csv_row(c, 0.001, a);
    CHECK(row.rfind(des_config_hash(c) + ",", 0) == 0);
}

TEST_CASE("random stable configurations stay in the requested load range") {
    for (const auto& c : random_pk_configs(30, 3)) {
        const double rho = c.lambda_eff * des_mean_service(c);
        CHECK(rho >= 0.1 - 1e-12);
        CHECK(rho <= 0.8 + 1e-12);
    }
}
