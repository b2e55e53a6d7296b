#include <doctest.h>

#include <sstream>

#include "scvn/experiments.hpp"
#include "scvn/metrics.hpp"
#include "scvn/queueing.hpp"

using namespace scvn;

TEST_CASE("pair throughput") {
    PairQueueModel a;
    a.lambda_eff = 10;
    a.service.mean = 0.01;
    a.matched = KbSet::full(1);
    PairQueueModel b = a;
    CHECK(pair_tsp(a, b) == doctest::Approx(200.0));
    b.service.mean = 0.0075;
    CHECK(pair_tsp(a, b) == doctest::Approx(100.0 + 1.0 / 0.0075));
    PairQueueModel none;
    CHECK(pair_tsp(none, none) == 0.0);
}

namespace {

ExperimentConfig small_config() {
    ExperimentConfig c;
    c.values = {8, 12};
    c.seeds = 2;
    c.scenario.kb_count = 4;
    c.scenario.geometry.cell_radius = 60;
    c.s4.dual.max_iterations = 4;
    return c;
}

}  // namespace

TEST_CASE("sweep produces one row per grid point and method") {
    const ExperimentConfig c = small_config();
    const auto rows = run_sweep(c);
    REQUIRE(rows.size() == 6);
    for (const auto& r : rows) {
        CHECK(r.seed_count == 2);
        CHECK(r.mean_latency_s >= 0.0);
        CHECK(r.mean_eta >= 0.0);
        CHECK(r.mean_eta <= 1.0);
        CHECK(r.violation_rate >= 0.0);
        CHECK(r.violation_rate <= 1.0);
        CHECK(r.failed_runs == 0);
    }
    CHECK(rows[0].method == "s4");
    CHECK(rows[0].sweep_value == 8);
    CHECK(rows[3].sweep_value == 12);
}

TEST_CASE("sweep CSV is reproducible and parseable") {
    const ExperimentConfig c = small_config();
    const std::string a = format_metric_csv(run_sweep(c));
    const std::string b = format_metric_csv(run_sweep(c, 2));
    CHECK(a == b);
    CHECK(a.rfind(std::string(kMetricCsvHeader) + "\n", 0) == 0);
    const auto parsed = parse_metric_csv(a);
    CHECK(parsed.size() == 6);
    CHECK(compare_metric_csv(parsed, parse_metric_csv(b)).equivalent);

    auto changed = parsed;
    changed[1].mean_tsp_pps *= 1.01;
    const CsvComparison diff = compare_metric_csv(parsed, changed);
    CHECK_FALSE(diff.equivalent);
    CHECK(diff.differences.size() == 1);
    CHECK(compare_metric_csv(parsed, changed, 0.02).equivalent);
    changed.pop_back();
    CHECK_FALSE(compare_metric_csv(parsed, changed, 0.02).equivalent);
}

TEST_CASE("CSV parser rejects malformed input") {
    CHECK_THROWS_AS(parse_metric_csv(""), InvalidConfig);
    CHECK_THROWS_AS(parse_metric_csv("a,b\n"), InvalidConfig);
    CHECK_THROWS_AS(parse_metric_csv(std::string(kMetricCsvHeader) + "\ns4,vehicle_count,x,1,0,0,0,0\n"),
                    InvalidConfig);
    CHECK_THROWS_AS(parse_metric_csv(std::string(kMetricCsvHeader) + "\ns4,1,2\n"), InvalidConfig);
}

TEST_CASE("experiment config parsing") {
    KeyValues kv = KeyValues::parse(
        "sweep_var = kb_count\nvalues = 4 6\nseeds = 3\nmethods = s4 kfp\nzipf_skew = 1.4\ntheta_max = 0.2\n"
        "dual_max_iterations = 7\nstep_scale = 0.1\n");
    const ExperimentConfig c = read_experiment_config(kv);
    kv.require_all_consumed();
    CHECK(c.sweep_var == SweepVariable::KbCount);
    CHECK(c.values == std::vector<int>{4, 6});
    CHECK(c.seeds == 3);
    CHECK(c.methods == std::vector<Method>{Method::S4, Method::KFP});
    CHECK(c.scenario.zipf_skew == 1.4);
    CHECK(c.scenario.theta_max == 0.2);
    CHECK(c.s4.dual.max_iterations == 7);
    CHECK(c.s4.dual.step_scale == 0.1);

    KeyValues bad_var = KeyValues::parse("sweep_var = speed\n");
    CHECK_THROWS_AS(read_experiment_config(bad_var), InvalidConfig);
    KeyValues no_seeds = KeyValues::parse("seeds = 0\n");
    CHECK_THROWS_AS(read_experiment_config(no_seeds), InvalidConfig);
    KeyValues empty_grid = KeyValues::parse("values =\n");
    CHECK_THROWS(read_experiment_config(empty_grid));
    KeyValues extra = KeyValues::parse("colour = blue\n");
    read_experiment_config(extra);
    CHECK_THROWS_AS(extra.require_all_consumed(), InvalidConfig);
}

TEST_CASE("run seeds differ per index and repeat per base seed") {
    CHECK(run_seed(1, 0) != run_seed(1, 1));
    CHECK(run_seed(1, 0) == run_seed(1, 0));
    CHECK(run_seed(1, 0) != run_seed(2, 0));
}
