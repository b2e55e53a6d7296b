#pragma once

#include <cstdint>
#include <vector>

#include "scvn/scenario.hpp"
#include "scvn/solution.hpp"

namespace scvn {

struct PreferenceFirstResult {
    KbcPolicy kbc;
    std::vector<int> below_threshold;  // vehicles whose capacity could not reach eta_min
};

/// Per vehicle: add KBs in descending preference (skipping those that do not fit)
/// until eta_min is met, then add uniformly random unconstructed KBs that still
/// fit until none does.
PreferenceFirstResult preference_first_kbc(const Scenario& scenario, std::uint64_t seed);

/// Distance-first pairing: in ascending id, each unpaired vehicle takes its
/// nearest unpaired neighbor (ties: lower id).
VspAssignment dfp_pair(const Scenario& scenario);

/// KB matching degree used by knowledge-first pairing: 1 - theta_{i->j}, or 0
/// when i constructs nothing.
double kb_matching_degree(const Scenario& scenario, const KbcPolicy& kbc, int i, int j);

/// Knowledge-first pairing: like distance-first but candidates are ranked by
/// KB matching degree (ties: nearer, then lower id).
VspAssignment kfp_pair(const Scenario& scenario, const KbcPolicy& kbc);

enum class Method { S4, DFP, KFP };

const char* method_name(Method m);
Method parse_method(const std::string& name);

/// Runs a baseline end to end and evaluates it in the solver's report format.
SolveReport run_baseline(const Scenario& scenario, Method method, std::uint64_t seed);

}  // namespace scvn
