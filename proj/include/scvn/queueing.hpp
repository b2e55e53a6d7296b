#pragma once

#include <span>
#include <vector>

#include "scvn/common.hpp"

namespace scvn {

struct ServiceMoments {
    double mean = 0.0;      // E[W], seconds
    double variance = 0.0;  // Var(W), seconds^2
};

/// Knowledge-matching M/G/1 queue of a directed sender -> receiver link.
struct PairQueueModel {
    double lambda_eff = 0.0;
    std::vector<double> epsilon;  // per KB; only jointly constructed entries are consumed
    KbSet matched;
    ServiceMoments service;
    double utilization = 0.0;  // lambda_eff * E[W]

    bool stable() const { return utilization < 1.0; }
};

/// Packet-share of each KB among the jointly constructed ones: p_n / sum_{matched} p_f.
/// Throws NoCommonKnowledge when the sender and receiver share no KB.
std::vector<double> epsilon_ratios(KbSet alpha_i, KbSet alpha_j, std::span<const double> probabilities_i);

/// Mean and variance of W = sum_{matched} eps_n I_n with independent exponential
/// interpretation times I_n of mean `mean_times[n]`.
ServiceMoments service_moments(KbSet alpha_i, KbSet alpha_j, std::span<const double> epsilon,
                               std::span<const double> mean_times);

/// Pollaczek-Khinchine mean waiting time (in queue, excluding service).
/// Returns 0 for an empty arrival stream and +inf when lambda * E[W] >= 1.
double pk_latency(double lambda_eff, double mean_service, double service_variance);

inline bool is_unstable(double latency) { return latency == kInf; }

/// Builds the full queue model for sender i -> receiver j.
/// `probabilities_i`/`rates_i` belong to the sender, `mean_times_j` to the receiver.
PairQueueModel pair_queue_model(KbSet alpha_i, KbSet alpha_j, std::span<const double> probabilities_i,
                                std::span<const double> rates_i, std::span<const double> mean_times_j);

/// Interpretable packets per second of one direction: 1 / E[W], or 0 with no matched KB.
double interpretation_throughput(const PairQueueModel& model);

}  // namespace scvn
