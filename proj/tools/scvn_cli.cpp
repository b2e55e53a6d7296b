#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <iostream>
#include <optional>

#include "scvn/baselines.hpp"
#include "scvn/checker.hpp"
#include "scvn/experiments.hpp"
#include "scvn/metrics.hpp"
#include "scvn/rng.hpp"
#include "scvn/scenario_io.hpp"
#include "scvn/solver.hpp"
#include "scvn/validation.hpp"

using namespace scvn;

namespace {

struct Globals {
    std::optional<std::uint64_t> seed;
    std::string config;
    std::string out;
    std::string method = "s4";
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
    }
}

int cmd_generate(const Globals& g) {
    ScenarioConfig cfg;
    std::uint64_t seed = 1;
    if (!g.config.empty()) {
        KeyValues kv = KeyValues::load(g.config);
        read_scenario_config(kv, cfg);
        seed = kv.take_u64("seed", seed);
        kv.require_all_consumed();
        cfg.validate();
    }
    if (g.seed) seed = *g.seed;
    emit(serialize_scenario(generate_scenario(cfg, seed)), g.out);
    return 0;
}

int cmd_solve(const Globals& g) {
    if (g.config.empty()) throw InvalidConfig("solve needs --config <instance file>");
    KeyValues kv = KeyValues::load(g.config);
    if (g.seed && kv.has("vehicle.0")) throw InvalidConfig("--seed cannot override a realized instance");
    Scenario sc = read_scenario(kv);
    S4Options options;
    read_solver_options(kv, options);
    kv.require_all_consumed();
    if (g.seed) {
        ScenarioConfig cfg = sc.config;
        sc = generate_scenario(cfg, *g.seed);
    }
    const Method method = parse_method(g.method);
    const SolveReport rep =
        method == Method::S4 ? s4_solve(sc, options) : run_baseline(sc, method, mix_seed(sc.seed, 0xba5e));
    const CheckerVerdict verdict = check_solution(sc, rep.kbc, rep.vsp);
    const RunMetrics m = compute_metrics(sc, rep, verdict);
    std::string text = format_report(sc, rep);
    text += fmt::format("\n[metrics]\nmean_latency_s = {:.9g}\nmean_tsp_pps = {:.9g}\nmean_eta = {:.9g}\n"
                        "latency_links = {}\nunstable_links = {}\n",
                        m.mean_latency_s, m.mean_tsp_pps, m.mean_eta, m.latency_links, m.unstable_links);
    text += fmt::format("\n[checker]\nverdict = {}\n", verdict.ok() ? "ok" : "violated");
    for (const auto& v : verdict.violations) text += "violation = " + v + "\n";
    emit(text, g.out);
    return 0;
}

int cmd_sweep(const Globals& g, int threads) {
    if (g.config.empty()) throw InvalidConfig("sweep needs --config <experiment file>");
    ExperimentConfig cfg = load_experiment_config(g.config);
    if (g.seed) cfg.base_seed = *g.seed;
    const auto rows = run_sweep(cfg, threads, &std::cerr);
    emit(format_metric_csv(rows), g.out);
    return 0;
}

void print_suite(const SuiteResult& r) {
    std::cout << fmt::format("{} {}: {} ({:.1f} s)\n", r.passed ? "PASS" : "FAIL", r.name, r.summary, r.seconds);
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
}

int cmd_validate(const Globals& g, bool quick) {
    const std::uint64_t seed = g.seed.value_or(1);
    S4Options options;
    if (!g.config.empty()) {
        KeyValues kv = KeyValues::load(g.config);
        read_solver_options(kv, options);
        kv.require_all_consumed();
    }
    const int scale = quick ? 5 : 1;
    std::vector<PkCase> cases;
    const SuiteResult pk = validate_pk_vs_des(20 / scale, seed, &cases);
    print_suite(pk);
    if (!g.out.empty()) {
        std::string csv = std::string(kDesCsvHeader) + "\n";
        for (const auto& c : cases) csv += des_csv_row(c.config, c.analytic, c.simulated) + "\n";
        write_text_file(g.out, csv);
    }
    const SuiteResult tabu = validate_tabu_vs_exhaustive(100 / scale, seed, options.tabu);
    print_suite(tabu);
    const OracleGapResult gap = validate_oracle_gap(100 / scale, seed, options);
    print_suite(gap.gap);
    print_suite(gap.duality);
    print_suite(gap.proposition);
    const bool ok = pk.passed && tabu.passed && gap.gap.passed && gap.duality.passed && gap.proposition.passed;
    return ok ? 0 : 1;
}

int cmd_compare(const std::string& a, const std::string& b, double tolerance) {
    const auto ra = parse_metric_csv(read_text_file(a));
    const auto rb = parse_metric_csv(read_text_file(b));
    const CsvComparison cmp = compare_metric_csv(ra, rb, tolerance);
    for (const auto& d : cmp.differences) std::cout << d << "\n";
    std::cout << (cmp.equivalent ? "equivalent\n" : "different\n");
    return cmp.equivalent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semantic-communication vehicle pairing and knowledge-base construction"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "Instance or base seed");
    app.add_option("--config", g.config, "Config or instance file");
    app.add_option("--out", g.out, "Output path (default: stdout)");
    app.add_option("--method", g.method, "s4, dfp or kfp")->check(CLI::IsMember({"s4", "dfp", "kfp"}));

    auto* generate = app.add_subcommand("generate", "Write an instance file");
    auto* solve = app.add_subcommand("solve", "Solve one instance and print the report");
    auto* sweep = app.add_subcommand("sweep", "Run an experiment sweep and write CSV");
    int threads = 1;
    sweep->add_option("--threads", threads, "Concurrent runs")->check(CLI::PositiveNumber);
    auto* validate = app.add_subcommand("validate", "Run the queueing and optimality validation suites");
    bool quick = false;
    validate->add_flag("--quick", quick, "Run a fifth of each suite");
    auto* compare = app.add_subcommand("compare", "Compare two sweep CSV files");
    std::string csv_a;
    std::string csv_b;
    double tolerance = 0.0;
    compare->add_option("first", csv_a, "CSV file")->required()->check(CLI::ExistingFile);
    compare->add_option("second", csv_b, "CSV file")->required()->check(CLI::ExistingFile);
    compare->add_option("--tolerance", tolerance, "Relative tolerance on numeric fields");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (seed_opt->count() > 0) g.seed = seed_value;

    try {
        if (*generate) return cmd_generate(g);
        if (*solve) return cmd_solve(g);
        if (*sweep) return cmd_sweep(g, threads);
        if (*validate) return cmd_validate(g, quick);
        if (*compare) return cmd_compare(csv_a, csv_b, tolerance);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
