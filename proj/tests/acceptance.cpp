// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance [output-dir]
// Run from the project root so configs/ resolves.

#include <fmt/format.h>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "scvn/experiments.hpp"
#include "scvn/scenario_io.hpp"
#include "scvn/validation.hpp"

using namespace scvn;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
    if (!pass) ++failures;
    std::cout << fmt::format("{} criterion {}: {}: {}\n", pass ? "PASS" : "FAIL", id, title, detail) << std::flush;
}

void note(const std::string& line) { std::cout << "  " << line << "\n"; }

std::string des_csv(const std::vector<PkCase>& cases) {
    std::string csv = std::string(kDesCsvHeader) + "\n";
    for (const auto& c : cases) csv += des_csv_row(c.config, c.analytic, c.simulated) + "\n";
    return csv;
}

struct SweepRun {
    ExperimentConfig config;
    std::vector<MetricRow> rows;
    std::string csv;
    double seconds = 0.0;
};

SweepRun run_config(const fs::path& path, const fs::path& out_dir) {
    SweepRun r;
    r.config = load_experiment_config(path);
    const auto t = Clock::now();
    r.rows = run_sweep(r.config, 1, &std::cerr);
    r.seconds = since(t);
    r.csv = format_metric_csv(r.rows);
    fs::create_directories(out_dir);
    write_text_file(out_dir / (path.stem().string() + ".csv"), r.csv);
    return r;
}

const MetricRow& row(const SweepRun& run, const std::string& method, int value) {
    for (const auto& r : run.rows) {
        if (r.method == method && r.sweep_value == value) return r;
    }
    throw std::runtime_error(fmt::format("missing row {} {}", method, value));
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path out_dir = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_out");
    fs::create_directories(out_dir);
    const fs::path configs = "configs";
    constexpr std::uint64_t kSeed = 1;

    // 1. Pollaczek-Khinchine against the discrete-event simulation.
    std::vector<PkCase> pk_cases;
    const SuiteResult pk = validate_pk_vs_des(20, kSeed, &pk_cases);
    const std::string des_first = des_csv(pk_cases);
    write_text_file(out_dir / "des.csv", des_first);
    report(1, "PK vs DES", pk.passed && pk.seconds <= 60.0,
           fmt::format("{}; {:.1f} s (limit 60 s)", pk.summary, pk.seconds));
    for (const auto& f : pk.failures) note(f);

    // 2. Tabu search against enumeration.
    const SuiteResult tabu = validate_tabu_vs_exhaustive(100, kSeed);
    report(2, "tabu vs exhaustive P1", tabu.passed && tabu.seconds <= 30.0,
           fmt::format("{}; {:.1f} s (limit 30 s)", tabu.summary, tabu.seconds));
    for (const auto& f : tabu.failures) note(f);

    // 3 and 4. End-to-end against brute force.
    const OracleGapResult gap = validate_oracle_gap(100, kSeed);
    report(3, "oracle gap and weak duality", gap.gap.passed && gap.duality.passed && gap.gap.seconds <= 300.0,
           fmt::format("{}; {}; {:.1f} s (limit 300 s)", gap.gap.summary, gap.duality.summary, gap.gap.seconds));
    for (const auto& f : gap.gap.failures) note(f);
    for (const auto& f : gap.duality.failures) note(f);
    report(4, "proposition-1 consistency", gap.proposition.passed, gap.proposition.summary);
    for (const auto& f : gap.proposition.failures) note(f);

    // 5. Dominance over the baselines on the vehicle-count sweeps.
    const std::vector<std::string> fig2{"fig2_xi08", "fig2_xi14"};
    std::map<std::string, SweepRun> f2;
    double f2_seconds = 0.0;
    for (const auto& name : fig2) {
        f2[name] = run_config(configs / (name + ".cfg"), out_dir);
        f2_seconds += f2[name].seconds;
    }
    bool dominance = true;
    for (const auto& name : fig2) {
        const SweepRun& run = f2[name];
        for (int v : run.config.values) {
            const MetricRow& s4 = row(run, "s4", v);
            const MetricRow& dfp = row(run, "dfp", v);
            const MetricRow& kfp = row(run, "kfp", v);
            const bool ok = s4.mean_latency_s <= dfp.mean_latency_s && s4.mean_latency_s <= kfp.mean_latency_s &&
                            s4.mean_tsp_pps >= dfp.mean_tsp_pps && s4.mean_tsp_pps >= kfp.mean_tsp_pps;
            dominance = dominance && ok;
            note(fmt::format("{} V={}: latency ms s4 {:.3f} dfp {:.3f} kfp {:.3f}; tsp s4 {:.1f} dfp {:.1f} kfp {:.1f}{}",
                             name, v, 1e3 * s4.mean_latency_s, 1e3 * dfp.mean_latency_s, 1e3 * kfp.mean_latency_s,
                             s4.mean_tsp_pps, dfp.mean_tsp_pps, kfp.mean_tsp_pps, ok ? "" : "  <- not dominant"));
        }
    }
    report(5, "dominance over DFP and KFP", dominance && f2_seconds <= 600.0,
           fmt::format("{} sweeps, {:.1f} s (limit 600 s)", fig2.size(), f2_seconds));

    // 6. Checker agreement on every reported-feasible solution, and the skew effect.
    int feasible_runs = 0;
    int disagreements = 0;
    bool thresholds_ok = true;
    for (const auto& name : fig2) {
        const SweepRun& run = f2[name];
        thresholds_ok = thresholds_ok && run.config.scenario.eta_min == 0.5 && run.config.scenario.theta_max == 0.1;
        for (const auto& r : run.rows) {
            if (r.method != "s4") continue;
            feasible_runs += r.reported_feasible;
            disagreements += r.checker_disagreements;
        }
    }
    for (const auto& c : gap.cases) {
        if (c.s4_feasible) {
            ++feasible_runs;
            if (!c.checker_ok) ++disagreements;
        }
    }
    bool skew = true;
    for (int v : f2["fig2_xi08"].config.values) {
        const double low = row(f2["fig2_xi08"], "s4", v).mean_latency_s;
        const double high = row(f2["fig2_xi14"], "s4", v).mean_latency_s;
        if (high < low) skew = false;
        note(fmt::format("V={}: s4 latency ms at skew 0.8 {:.3f}, at 1.4 {:.3f}", v, 1e3 * low, 1e3 * high));
    }
    report(6, "constraint fidelity and skew effect", thresholds_ok && disagreements == 0 && skew,
           fmt::format("{} reported-feasible S4 solutions, {} rejected by the checker; eta_min 0.5 theta_max 0.1 {}; "
                       "skew effect {}",
                       feasible_runs, disagreements, thresholds_ok ? "yes" : "no", skew ? "holds" : "violated"));

    // 7. Preference satisfaction trend over the KB count and the mismatch threshold.
    const std::vector<std::string> fig5{"fig5_xi08_th01", "fig5_xi08_th02", "fig5_xi14_th01", "fig5_xi14_th02"};
    std::map<std::string, SweepRun> f5;
    double f5_seconds = 0.0;
    for (const auto& name : fig5) {
        f5[name] = run_config(configs / (name + ".cfg"), out_dir);
        f5_seconds += f5[name].seconds;
    }
    bool monotone = true;
    bool threshold_lower = true;
    for (const auto& name : fig5) {
        const SweepRun& run = f5[name];
        std::string etas;
        for (std::size_t k = 0; k < run.config.values.size(); ++k) {
            const double eta = row(run, "s4", run.config.values[k]).mean_eta;
            etas += fmt::format(" N={}: {:.4f}", run.config.values[k], eta);
            if (k > 0 && eta > row(run, "s4", run.config.values[k - 1]).mean_eta) {
                monotone = false;
                etas += " (increase)";
            }
        }
        note(fmt::format("{} mean eta{}", name, etas));
    }
    for (const std::string skew_tag : {"xi08", "xi14"}) {
        const SweepRun& tight = f5["fig5_" + skew_tag + "_th01"];
        const SweepRun& loose = f5["fig5_" + skew_tag + "_th02"];
        for (int n : tight.config.values) {
            const double a = row(tight, "s4", n).mean_eta;
            const double b = row(loose, "s4", n).mean_eta;
            if (!(b < a)) threshold_lower = false;
            note(fmt::format("{} N={}: eta at theta_max 0.1 {:.4f}, at 0.2 {:.4f}{}", skew_tag, n, a, b,
                             b < a ? "" : "  <- not lower"));
        }
    }
    report(7, "eta trend", monotone && threshold_lower && f5_seconds <= 300.0,
           fmt::format("nonincreasing in KB count {}; lower at theta_max 0.2 {}; {:.1f} s (limit 300 s)",
                       monotone ? "yes" : "no", threshold_lower ? "yes" : "no", f5_seconds));

    // 8. Determinism: repeat a DES run and a sweep with identical seeds.
    std::vector<PkCase> again;
    validate_pk_vs_des(20, kSeed, &again);
    const bool des_same = des_csv(again) == des_first;
    const std::string repeat_name = fig5.front();
    const SweepRun repeat = run_config(configs / (repeat_name + ".cfg"), out_dir / "repeat");
    const bool sweep_same = repeat.csv == f5[repeat_name].csv;
    report(8, "bit-identical reruns", des_same && sweep_same,
           fmt::format("DES CSV {}; {} CSV {}", des_same ? "identical" : "differs", repeat_name,
                       sweep_same ? "identical" : "differs"));

    std::cout << fmt::format("{} of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
