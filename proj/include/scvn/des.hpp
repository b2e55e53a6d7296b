#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace scvn {

enum class ServiceLaw {
    WeightedSum,  // W = sum eps_n X_n, X_n ~ Exp(mu_n) independent; moments match the analytic model
    Mixture,      // W = X_n with probability eps_n; sensitivity study only
};

struct DesConfig {
    double lambda_eff = 0.0;
    std::vector<double> weights;     // eps, zero on KBs that are not jointly constructed
    std::vector<double> mean_times;  // 1/mu of the receiver, seconds
    std::int64_t horizon = 100000;   // packets
    std::uint64_t seed = 1;
    ServiceLaw law = ServiceLaw::WeightedSum;
    double warmup_fraction = 0.1;
    int batches = 30;
};

struct QueueStats {
    double mean_wait = 0.0;  // seconds in queue, service excluded
    std::int64_t sample_count = 0;
    double confidence_halfwidth = 0.0;  // 95 %, batch means
};

struct PacketRecord {
    double arrival = 0.0;
    double start = 0.0;
    double departure = 0.0;
};

/// First-come first-served single server: each packet starts at
/// max(arrival, previous departure). Arrivals must be nondecreasing.
std::vector<PacketRecord> simulate_fifo(std::span<const double> arrivals, std::span<const double> services);

/// Discrete-event estimate of the mean waiting time of a Poisson/G/1 FIFO queue.
/// Requires a stable configuration and at least 1e5 packets.
QueueStats des_oracle(const DesConfig& config);

/// Mean of the configured service law (identical for both laws).
double des_mean_service(const DesConfig& config);

std::string des_config_hash(const DesConfig& config);

inline constexpr const char* kDesCsvHeader = "config_hash,lambda_eff,analytic_wait_s,simulated_wait_s,ci_halfwidth_s";
std::string des_csv_row(const DesConfig& config, double analytic_wait, const QueueStats& stats);

}  // namespace scvn
