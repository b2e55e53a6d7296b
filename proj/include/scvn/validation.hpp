#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scvn/des.hpp"
#include "scvn/solver.hpp"

namespace scvn {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string summary;
    std::vector<std::string> failures;
    double seconds = 0.0;
};

struct PkCase {
    DesConfig config;
    double analytic = 0.0;
    QueueStats simulated;
    bool within = false;
};

/// Random stable single-link configurations with utilization drawn from [0.1, 0.8].
std::vector<DesConfig> random_pk_configs(int count, std::uint64_t seed);

/// DES against the Pollaczek-Khinchine wait on `count` random configurations plus
/// the M/M/1 case lambda = 50, mu = 100. Agreement means |sim - pk| <=
/// max(3% of pk, CI halfwidth).
SuiteResult validate_pk_vs_des(int count = 20, std::uint64_t seed = 1, std::vector<PkCase>* cases = nullptr);

/// Tabu against enumeration on `count` two-vehicle instances with three KBs and
/// random multipliers: exact on at least 95%, within 5% on all.
SuiteResult validate_tabu_vs_exhaustive(int count = 100, std::uint64_t seed = 1, const TabuOptions& options = {});

struct OracleGapCase {
    std::uint64_t seed = 0;
    bool oracle_feasible = false;
    double oracle_objective = kInf;
    bool s4_feasible = false;
    double s4_objective = kInf;
    int weak_duality_violations = 0;
    int prop1_mismatches = 0;
    bool checker_ok = true;  // checker agrees with every solution S4 reports feasible
};

struct OracleGapResult {
    SuiteResult gap;          // objective within 5% of the exact optimum
    SuiteResult duality;      // D(tau_t) <= exact optimum at every iteration
    SuiteResult proposition;  // finalized construction equals the cached sub-policy
    std::vector<OracleGapCase> cases;
};

/// Four vehicles within mutual range, three KBs: S4 against brute_force_p0.
ScenarioConfig oracle_gap_scenario_config();
OracleGapResult validate_oracle_gap(int count = 100, std::uint64_t seed = 1, const S4Options& options = {});

}  // namespace scvn
