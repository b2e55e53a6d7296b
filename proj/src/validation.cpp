#include "scvn/validation.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>

#include "scvn/checker.hpp"
#include "scvn/oracle.hpp"
#include "scvn/queueing.hpp"
#include "scvn/rng.hpp"

namespace scvn {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double analytic_wait(const DesConfig& c) {
    double mean = 0.0;
    double var = 0.0;
    for (std::size_t n = 0; n < c.weights.size(); ++n) {
        const double m = c.weights[n] * c.mean_times[n];
        mean += m;
        var += m * m;
    }
    return pk_latency(c.lambda_eff, mean, var);
}

}  // namespace

std::vector<DesConfig> random_pk_configs(int count, std::uint64_t seed) {
    std::vector<DesConfig> out;
    Rng rng(seed);
    for (int k = 0; k < count; ++k) {
        DesConfig c;
        const int n = static_cast<int>(rng.uniform_int(1, 5));
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            c.weights.push_back(rng.uniform(0.05, 1.0));
            c.mean_times.push_back(rng.uniform(5e-3, 1e-2));
            total += c.weights.back();
        }
        for (double& w : c.weights) w /= total;
        const double rho = rng.uniform(0.1, 0.8);
        c.lambda_eff = rho / des_mean_service(c);
        c.seed = mix_seed(seed, static_cast<std::uint64_t>(k) + 1);
        out.push_back(std::move(c));
    }
    return out;
}

SuiteResult validate_pk_vs_des(int count, std::uint64_t seed, std::vector<PkCase>* cases) {
    const auto start = Clock::now();
    SuiteResult r;
    r.name = "pk_vs_des";
    std::vector<DesConfig> configs = random_pk_configs(count, seed);
    DesConfig mm1;
    mm1.lambda_eff = 50.0;
    mm1.weights = {1.0};
    mm1.mean_times = {0.01};
    mm1.seed = mix_seed(seed, 0x3131);
    configs.push_back(mm1);

    int ok = 0;
    for (std::size_t k = 0; k < configs.size(); ++k) {
        PkCase pc;
        pc.config = configs[k];
        pc.analytic = analytic_wait(pc.config);
        pc.simulated = des_oracle(pc.config);
        const double diff = std::abs(pc.simulated.mean_wait - pc.analytic);
        pc.within = diff <= std::max(0.03 * pc.analytic, pc.simulated.confidence_halfwidth);
        if (pc.within) {
            ++ok;
        } else {
            r.failures.push_back(fmt::format("case {}: pk {:.6g} s, des {:.6g} s (ci {:.3g})", k, pc.analytic,
                                             pc.simulated.mean_wait, pc.simulated.confidence_halfwidth));
        }
        if (cases) cases->push_back(std::move(pc));
    }
    const bool mm1_exact = std::abs(analytic_wait(mm1) - 0.01) <= 1e-12;
    if (!mm1_exact) r.failures.push_back(fmt::format("M/M/1 analytic wait {:.12g} != 0.01", analytic_wait(mm1)));
    r.passed = ok == static_cast<int>(configs.size()) && mm1_exact;
    r.seconds = elapsed(start);
    r.summary = fmt::format("{}/{} configurations within tolerance, M/M/1 analytic {}", ok, configs.size(),
                            mm1_exact ? "exact" : "wrong");
    return r;
}

SuiteResult validate_tabu_vs_exhaustive(int count, std::uint64_t seed, const TabuOptions& options) {
    const auto start = Clock::now();
    SuiteResult r;
    r.name = "tabu_vs_exhaustive";
    ScenarioConfig cfg;
    cfg.vehicle_count = 2;
    cfg.kb_count = 3;
    cfg.geometry.cell_radius = 30.0;
    cfg.capacity = 8;
    int exact = 0;
    int within = 0;
    int both_infeasible = 0;
    double worst = 1.0;
    for (int k = 0; k < count; ++k) {
        const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(k));
        const Scenario sc = generate_scenario(cfg, s);
        Rng rng(mix_seed(s, 0x7a0));
        const std::vector<double> tau{rng.uniform(0.0, 0.05), rng.uniform(0.0, 0.05)};
        TabuOptions opt = options;
        opt.seed = mix_seed(options.seed, static_cast<std::uint64_t>(k));
        const PairSubSolution ex = exhaustive_p1(sc, 0, 1, tau);
        const PairSubSolution tb = tabu_search_p1(sc, 0, 1, tau, opt);
        if (!ex.feasible) {
            if (!tb.feasible) {
                ++both_infeasible;
                ++exact;
                ++within;
            } else {
                r.failures.push_back(fmt::format("instance {}: tabu feasible where enumeration is not", k));
            }
            continue;
        }
        if (!tb.feasible) {
            r.failures.push_back(fmt::format("instance {}: tabu found no feasible pair (optimum {:.6g})", k, ex.omega));
            worst = kInf;
            continue;
        }
        const double ratio = ex.omega > 0.0 ? tb.omega / ex.omega : (tb.omega <= 0.0 ? 1.0 : kInf);
        worst = std::max(worst, ratio);
        if (tb.omega <= ex.omega + 1e-12 * std::max(1.0, std::abs(ex.omega))) ++exact;
        if (ratio <= 1.05) {
            ++within;
        } else {
            r.failures.push_back(fmt::format("instance {}: tabu {:.6g} vs optimum {:.6g}", k, tb.omega, ex.omega));
        }
    }
    r.passed = within == count && exact * 100 >= 95 * count;
    r.seconds = elapsed(start);
    r.summary = fmt::format("exact {}/{}, within 5% {}/{}, worst ratio {:.6g}, both infeasible {}", exact, count,
                            within, count, worst, both_infeasible);
    return r;
}

ScenarioConfig oracle_gap_scenario_config() {
    ScenarioConfig cfg;
    cfg.vehicle_count = 4;
    cfg.kb_count = 3;
    cfg.geometry.cell_radius = 40.0;
    cfg.capacity = 8;
    return cfg;
}

OracleGapResult validate_oracle_gap(int count, std::uint64_t seed, const S4Options& options) {
    const auto start = Clock::now();
    OracleGapResult out;
    out.gap.name = "oracle_gap";
    out.duality.name = "weak_duality";
    out.proposition.name = "proposition1";
    const ScenarioConfig cfg = oracle_gap_scenario_config();

    int compared = 0;
    int within = 0;
    int oracle_infeasible = 0;
    int duality_checked = 0;
    int duality_bad = 0;
    int prop_bad = 0;
    int checker_bad = 0;
    double worst = 1.0;
    for (int k = 0; k < count; ++k) {
        OracleGapCase c;
        c.seed = mix_seed(seed, static_cast<std::uint64_t>(k));
        const Scenario sc = generate_scenario(cfg, c.seed);
        const BruteForceResult bf = brute_force_p0(sc);
        const SolveReport rep = s4_solve(sc, options);
        c.oracle_feasible = bf.feasible;
        c.oracle_objective = bf.objective;
        c.s4_feasible = rep.feasible();
        c.s4_objective = rep.objective();
        c.prop1_mismatches = rep.prop1_mismatches;
        if (c.s4_feasible) c.checker_ok = check_solution(sc, rep.kbc, rep.vsp).ok();
        if (!c.checker_ok) {
            ++checker_bad;
            out.gap.failures.push_back(fmt::format("instance {}: checker rejects a solution reported feasible", k));
        }
        if (c.prop1_mismatches != 0) {
            ++prop_bad;
            out.proposition.failures.push_back(
                fmt::format("instance {}: {} proposition-1 mismatches", k, c.prop1_mismatches));
        }
        if (bf.feasible) {
            ++duality_checked;
            for (const auto& it : rep.trace) {
                if (it.dual_value > bf.objective + 1e-9 * std::max(1.0, std::abs(bf.objective))) {
                    ++c.weak_duality_violations;
                }
            }
            if (c.weak_duality_violations) {
                ++duality_bad;
                out.duality.failures.push_back(fmt::format("instance {}: {} iterations with D above optimum {:.6g}",
                                                           k, c.weak_duality_violations, bf.objective));
            }
            ++compared;
            const double ratio = !c.s4_feasible ? kInf : bf.objective > 0.0 ? c.s4_objective / bf.objective : 1.0;
            worst = std::max(worst, ratio);
            if (ratio <= 1.05 + 1e-12) {
                ++within;
            } else {
                out.gap.failures.push_back(fmt::format("instance {}: s4 {} {:.6g} vs optimum {:.6g}", k,
                                                       c.s4_feasible ? "feasible" : "infeasible", c.s4_objective,
                                                       bf.objective));
            }
        } else {
            ++oracle_infeasible;
            if (c.s4_feasible) {
                ++checker_bad;
                out.gap.failures.push_back(fmt::format("instance {}: s4 feasible where enumeration finds none", k));
            }
        }
        out.cases.push_back(c);
    }
    const double secs = elapsed(start);
    out.gap.passed = within == compared && checker_bad == 0;
    out.gap.summary = fmt::format("{}/{} within 5% of the optimum (worst ratio {:.6g}), {} instances without a "
                                  "feasible optimum, {} checker disagreements",
                                  within, compared, worst, oracle_infeasible, checker_bad);
    out.duality.passed = duality_bad == 0;
    out.duality.summary =
        fmt::format("{}/{} instances with every dual value below the optimum", duality_checked - duality_bad,
                    duality_checked);
    out.proposition.passed = prop_bad == 0;
    out.proposition.summary = fmt::format("{}/{} runs without proposition-1 mismatches", count - prop_bad, count);
    out.gap.seconds = out.duality.seconds = out.proposition.seconds = secs;
    return out;
}

}  // namespace scvn
