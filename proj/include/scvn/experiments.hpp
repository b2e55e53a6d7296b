#pragma once

// Sweep harness. Experiment config files use the scenario keys (see
// scenario_io.hpp) plus:
//   sweep_var          = vehicle_count | kb_count
//   values             = 20 40 60
//   seeds              = 10               runs per grid point
//   base_seed          = 1
//   methods            = s4 dfp kfp
//   dual_max_iterations, dual_tolerance, step_scale,
//   tabu_budget, tabu_tenure, tabu_stall_limit, tabu_seed, tabu_exhaustive,
//   warm_start, threads                   solver settings
//
// Output CSV header:
//   method,sweep_var,sweep_value,seed_count,mean_latency_s,mean_tsp_pps,mean_eta,violation_rate

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "scvn/baselines.hpp"
#include "scvn/scenario_io.hpp"
#include "scvn/solver.hpp"

namespace scvn {

enum class SweepVariable { VehicleCount, KbCount };

const char* sweep_variable_name(SweepVariable v);

struct ExperimentConfig {
    SweepVariable sweep_var = SweepVariable::VehicleCount;
    std::vector<int> values{20, 40, 60};
    int seeds = 5;
    std::uint64_t base_seed = 1;
    std::vector<Method> methods{Method::S4, Method::DFP, Method::KFP};
    ScenarioConfig scenario{};
    S4Options s4{};

    void validate() const;
};

/// Reads solver keys shared by experiment and instance configs.
void read_solver_options(KeyValues& kv, S4Options& options);
ExperimentConfig read_experiment_config(KeyValues& kv);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Scenario seed of the k-th run at every grid point (shared across methods).
std::uint64_t run_seed(std::uint64_t base_seed, int k);

struct MetricRow {
    std::string method;
    std::string sweep_var;
    int sweep_value = 0;
    int seed_count = 0;
    double mean_latency_s = 0.0;
    double mean_tsp_pps = 0.0;
    double mean_eta = 0.0;
    double violation_rate = 0.0;
    // Not serialized.
    int failed_runs = 0;            // counted as violations
    int reported_feasible = 0;      // runs whose method reported a feasible solution
    int checker_disagreements = 0;  // reported feasible but rejected by the checker
};

/// Runs every (grid value x seed x method), verifies each solution with the
/// independent checker and aggregates per (grid value, method). A run that
/// throws is logged, counted as a violation and excluded from the means.
std::vector<MetricRow> run_sweep(const ExperimentConfig& config, int threads = 1, std::ostream* log = nullptr);

inline constexpr const char* kMetricCsvHeader =
    "method,sweep_var,sweep_value,seed_count,mean_latency_s,mean_tsp_pps,mean_eta,violation_rate";

std::string format_metric_csv(const std::vector<MetricRow>& rows);
std::vector<MetricRow> parse_metric_csv(const std::string& text);

struct CsvComparison {
    bool equivalent = true;
    std::vector<std::string> differences;
};

/// Matches rows by (method, sweep_var, sweep_value); numeric fields must agree
/// within `relative_tolerance` (0 demands equality).
CsvComparison compare_metric_csv(const std::vector<MetricRow>& a, const std::vector<MetricRow>& b,
                                 double relative_tolerance = 0.0);

}  // namespace scvn
