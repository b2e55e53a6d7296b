#pragma once

#include "scvn/checker.hpp"
#include "scvn/queueing.hpp"
#include "scvn/solution.hpp"

namespace scvn {

/// Interpretable semantic packets per second of a pair: 1/E[W] of each direction, summed.
double pair_tsp(const PairQueueModel& forward, const PairQueueModel& backward);

struct RunMetrics {
    double mean_latency_s = 0.0;  // over directed paired links carrying matched traffic
    int latency_links = 0;
    double mean_tsp_pps = 0.0;    // over pairs
    int pairs = 0;
    double mean_eta = 0.0;        // over all vehicles
    bool violation = false;       // independent checker verdict
    int unstable_links = 0;       // excluded from the latency mean
};

RunMetrics compute_metrics(const Scenario& scenario, const SolveReport& report, const CheckerVerdict& verdict);

}  // namespace scvn
