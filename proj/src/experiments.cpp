#include "scvn/experiments.hpp"

#include <fmt/format.h>

#include <atomic>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "scvn/checker.hpp"
#include "scvn/metrics.hpp"
#include "scvn/rng.hpp"

namespace scvn {

const char* sweep_variable_name(SweepVariable v) {
    return v == SweepVariable::VehicleCount ? "vehicle_count" : "kb_count";
}

void ExperimentConfig::validate() const {
    if (values.empty()) throw InvalidConfig("sweep grid is empty");
    if (seeds < 1) throw InvalidConfig("seeds must be >= 1");
    if (methods.empty()) throw InvalidConfig("method list is empty");
    for (int x : values) {
        ScenarioConfig c = scenario;
        (sweep_var == SweepVariable::VehicleCount ? c.vehicle_count : c.kb_count) = x;
        c.validate();
    }
}

void read_solver_options(KeyValues& kv, S4Options& o) {
    o.dual.max_iterations = kv.take_int("dual_max_iterations", o.dual.max_iterations);
    o.dual.tolerance = kv.take_double("dual_tolerance", o.dual.tolerance);
    o.dual.step_scale = kv.take_double("step_scale", o.dual.step_scale);
    o.tabu.budget = kv.take_int("tabu_budget", o.tabu.budget);
    o.tabu.tenure = kv.take_int("tabu_tenure", o.tabu.tenure);
    o.tabu.stall_limit = kv.take_int("tabu_stall_limit", o.tabu.stall_limit);
    o.tabu.seed = kv.take_u64("tabu_seed", o.tabu.seed);
    o.tabu.exhaustive = kv.take_int("tabu_exhaustive", o.tabu.exhaustive ? 1 : 0) != 0;
    o.warm_start = kv.take_int("warm_start", o.warm_start ? 1 : 0) != 0;
    o.threads = kv.take_int("threads", o.threads);
    if (o.dual.max_iterations < 1) throw InvalidConfig("dual_max_iterations must be >= 1");
    if (!(o.dual.step_scale > 0.0)) throw InvalidConfig("step_scale must be positive");
    if (o.tabu.budget < 1) throw InvalidConfig("tabu_budget must be >= 1");
    if (o.tabu.tenure < 0 || o.tabu.stall_limit < 1) throw InvalidConfig("invalid tabu settings");
}

ExperimentConfig read_experiment_config(KeyValues& kv) {
    ExperimentConfig c;
    const std::string var = kv.take_string("sweep_var", sweep_variable_name(c.sweep_var));
    if (var == "vehicle_count") {
        c.sweep_var = SweepVariable::VehicleCount;
    } else if (var == "kb_count") {
        c.sweep_var = SweepVariable::KbCount;
    } else {
        throw InvalidConfig("sweep_var must be vehicle_count or kb_count, got '" + var + "'");
    }
    if (kv.has("values")) c.values = kv.take_ints("values");
    c.seeds = kv.take_int("seeds", c.seeds);
    c.base_seed = kv.take_u64("base_seed", c.base_seed);
    if (kv.has("methods")) {
        c.methods.clear();
        for (const auto& m : kv.take_list("methods")) c.methods.push_back(parse_method(m));
    }
    read_scenario_config(kv, c.scenario);
    read_solver_options(kv, c.s4);
    c.validate();
    return c;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    KeyValues kv = KeyValues::load(path);
    ExperimentConfig c = read_experiment_config(kv);
    kv.require_all_consumed();
    return c;
}

std::uint64_t run_seed(std::uint64_t base_seed, int k) {
    return mix_seed(base_seed, static_cast<std::uint64_t>(k));
}

namespace {

struct RunOutcome {
    bool failed = false;
    bool reported_feasible = false;
    RunMetrics metrics;
};

}  // namespace

std::vector<MetricRow> run_sweep(const ExperimentConfig& config, int threads, std::ostream* log) {
    config.validate();
    const std::size_t points = config.values.size();
    const std::size_t seeds = static_cast<std::size_t>(config.seeds);
    const std::size_t methods = config.methods.size();
    std::vector<RunOutcome> outcomes(points * seeds * methods);

    auto run_one = [&](std::size_t job) {
        const std::size_t p = job / seeds;
        const std::size_t k = job % seeds;
        ScenarioConfig sc_cfg = config.scenario;
        (config.sweep_var == SweepVariable::VehicleCount ? sc_cfg.vehicle_count : sc_cfg.kb_count) = config.values[p];
        const std::uint64_t seed = run_seed(config.base_seed, static_cast<int>(k));
        for (std::size_t m = 0; m < methods; ++m) {
            RunOutcome& out = outcomes[(p * seeds + k) * methods + m];
            try {
                const Scenario sc = generate_scenario(sc_cfg, seed);
                const Method method = config.methods[m];
                SolveReport rep = method == Method::S4 ? s4_solve(sc, config.s4)
                                                       : run_baseline(sc, method, mix_seed(seed, 0xba5e));
                const CheckerVerdict verdict = check_solution(sc, rep.kbc, rep.vsp);
                out.metrics = compute_metrics(sc, rep, verdict);
                out.reported_feasible = rep.feasible();
            } catch (const std::exception& e) {
                out.failed = true;
                if (log) {
                    *log << fmt::format("run failed: {}={} seed#{} method={}: {}\n", sweep_variable_name(config.sweep_var),
                                        config.values[p], k, method_name(config.methods[m]), e.what());
                }
            }
        }
    };

    const std::size_t jobs = points * seeds;
    if (threads <= 1) {
        for (std::size_t job = 0; job < jobs; ++job) run_one(job);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t job = next++; job < jobs; job = next++) run_one(job);
            });
        }
    }

    std::vector<MetricRow> rows;
    for (std::size_t p = 0; p < points; ++p) {
        for (std::size_t m = 0; m < methods; ++m) {
            MetricRow row;
            row.method = method_name(config.methods[m]);
            row.sweep_var = sweep_variable_name(config.sweep_var);
            row.sweep_value = config.values[p];
            row.seed_count = config.seeds;
            int ok_runs = 0;
            int latency_runs = 0;
            int violations = 0;
            for (std::size_t k = 0; k < seeds; ++k) {
                const RunOutcome& o = outcomes[(p * seeds + k) * methods + m];
                if (o.failed) {
                    ++row.failed_runs;
                    ++violations;
                    continue;
                }
                ++ok_runs;
                if (o.metrics.latency_links > 0) {
                    row.mean_latency_s += o.metrics.mean_latency_s;
                    ++latency_runs;
                }
                row.mean_tsp_pps += o.metrics.mean_tsp_pps;
                row.mean_eta += o.metrics.mean_eta;
                if (o.metrics.violation) ++violations;
                if (o.reported_feasible) {
                    ++row.reported_feasible;
                    if (o.metrics.violation) ++row.checker_disagreements;
                }
            }
            if (latency_runs) row.mean_latency_s /= latency_runs;
            if (ok_runs) {
                row.mean_tsp_pps /= ok_runs;
                row.mean_eta /= ok_runs;
            }
            row.violation_rate = static_cast<double>(violations) / static_cast<double>(seeds);
            rows.push_back(row);
        }
    }
    return rows;
}

std::string format_metric_csv(const std::vector<MetricRow>& rows) {
    std::string out = std::string(kMetricCsvHeader) + "\n";
    for (const auto& r : rows) {
        out += fmt::format("{},{},{},{},{:.12g},{:.12g},{:.12g},{:.12g}\n", r.method, r.sweep_var, r.sweep_value,
                           r.seed_count, r.mean_latency_s, r.mean_tsp_pps, r.mean_eta, r.violation_rate);
    }
    return out;
}

std::vector<MetricRow> parse_metric_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InvalidConfig("CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kMetricCsvHeader) throw InvalidConfig("unexpected CSV header: " + line);
    std::vector<MetricRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) f.push_back(cell);
        if (f.size() != 8) throw InvalidConfig(fmt::format("CSV line {}: expected 8 fields", lineno));
        MetricRow r;
        try {
            r.method = f[0];
            r.sweep_var = f[1];
            std::size_t pos = 0;
            r.sweep_value = std::stoi(f[2], &pos);
            r.seed_count = std::stoi(f[3]);
            r.mean_latency_s = std::stod(f[4]);
            r.mean_tsp_pps = std::stod(f[5]);
            r.mean_eta = std::stod(f[6]);
            r.violation_rate = std::stod(f[7]);
        } catch (const std::exception&) {
            throw InvalidConfig(fmt::format("CSV line {}: malformed number", lineno));
        }
        rows.push_back(r);
    }
    return rows;
}

CsvComparison compare_metric_csv(const std::vector<MetricRow>& a, const std::vector<MetricRow>& b,
                                 double relative_tolerance) {
    CsvComparison out;
    using Key = std::tuple<std::string, std::string, int>;
    std::map<Key, const MetricRow*> index_b;
    for (const auto& r : b) index_b[{r.method, r.sweep_var, r.sweep_value}] = &r;
    std::map<Key, bool> seen;
    auto differ = [&](double x, double y) {
        if (x == y) return false;
        return std::abs(x - y) > relative_tolerance * std::max(std::abs(x), std::abs(y));
    };
    for (const auto& r : a) {
        const Key key{r.method, r.sweep_var, r.sweep_value};
        seen[key] = true;
        auto it = index_b.find(key);
        if (it == index_b.end()) {
            out.equivalent = false;
            out.differences.push_back(fmt::format("{} {}={}: only in first", r.method, r.sweep_var, r.sweep_value));
            continue;
        }
        const MetricRow& o = *it->second;
        auto field = [&](const char* name, double x, double y) {
            if (differ(x, y)) {
                out.equivalent = false;
                out.differences.push_back(
                    fmt::format("{} {}={}: {} {:.9g} vs {:.9g}", r.method, r.sweep_var, r.sweep_value, name, x, y));
            }
        };
        field("seed_count", r.seed_count, o.seed_count);
        field("mean_latency_s", r.mean_latency_s, o.mean_latency_s);
        field("mean_tsp_pps", r.mean_tsp_pps, o.mean_tsp_pps);
        field("mean_eta", r.mean_eta, o.mean_eta);
        field("violation_rate", r.violation_rate, o.violation_rate);
    }
    for (const auto& r : b) {
        if (!seen.count({r.method, r.sweep_var, r.sweep_value})) {
            out.equivalent = false;
            out.differences.push_back(fmt::format("{} {}={}: only in second", r.method, r.sweep_var, r.sweep_value));
        }
    }
    return out;
}

}  // namespace scvn
