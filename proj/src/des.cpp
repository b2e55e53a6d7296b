#include "scvn/des.hpp"

#include <fmt/format.h>

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "scvn/common.hpp"
#include "scvn/rng.hpp"

namespace scvn {
namespace {

// Two-sided 95 % Student-t quantiles for 1..30 degrees of freedom.
constexpr double kT975[] = {12.706204736, 4.302652730, 3.182446305, 2.776445105, 2.570581836, 2.446911851,
                            2.364624252, 2.306004135, 2.262157163, 2.228138852, 2.200985160, 2.178812830,
                            2.160368656, 2.144786688, 2.131449546, 2.119905299, 2.109815578, 2.100922040,
                            2.093024054, 2.085963447, 2.079613845, 2.073873068, 2.068657610, 2.063898562,
                            2.059538553, 2.055529439, 2.051830516, 2.048407142, 2.045229642, 2.042272456};

double t_quantile(int dof) {
    if (dof < 1) return kInf;
    if (dof <= 30) return kT975[dof - 1];
    return 1.959963985;
}

}  // namespace

std::vector<PacketRecord> simulate_fifo(std::span<const double> arrivals, std::span<const double> services) {
    if (arrivals.size() != services.size()) throw std::invalid_argument("simulate_fifo: size mismatch");
    std::vector<PacketRecord> out(arrivals.size());
    double last_departure = -kInf;
    double last_arrival = -kInf;
    for (std::size_t k = 0; k < arrivals.size(); ++k) {
        if (arrivals[k] < last_arrival) throw std::invalid_argument("simulate_fifo: arrivals out of order");
        last_arrival = arrivals[k];
        const double start = std::max(arrivals[k], last_departure);
        last_departure = start + services[k];
        out[k] = {arrivals[k], start, last_departure};
    }
    return out;
}

double des_mean_service(const DesConfig& c) {
    double m = 0.0;
    for (std::size_t n = 0; n < c.weights.size(); ++n) m += c.weights[n] * c.mean_times[n];
    return m;
}

QueueStats des_oracle(const DesConfig& c) {
    if (c.weights.size() != c.mean_times.size()) throw std::invalid_argument("des_oracle: size mismatch");
    if (c.horizon < 100000) throw std::invalid_argument("des_oracle: horizon must be at least 1e5 packets");
    if (c.batches < 2) throw std::invalid_argument("des_oracle: need at least two batches");
    if (!(c.lambda_eff > 0.0)) throw std::invalid_argument("des_oracle: arrival rate must be positive");
    for (std::size_t n = 0; n < c.weights.size(); ++n) {
        if (c.weights[n] < 0.0 || (c.weights[n] > 0.0 && !(c.mean_times[n] > 0.0))) {
            throw std::invalid_argument("des_oracle: invalid service parameters");
        }
    }
    const double mean_service = des_mean_service(c);
    if (!(mean_service > 0.0)) throw std::invalid_argument("des_oracle: no matched KB");
    if (!(c.lambda_eff * mean_service < 1.0)) throw UnstableQueue("des_oracle: utilization >= 1, refusing to run");

    std::vector<int> active;
    std::vector<double> cumulative;
    double acc = 0.0;
    for (std::size_t n = 0; n < c.weights.size(); ++n) {
        if (c.weights[n] > 0.0) {
            active.push_back(static_cast<int>(n));
            acc += c.weights[n];
            cumulative.push_back(acc);
        }
    }

    Rng rng(c.seed);
    auto draw_service = [&]() {
        if (c.law == ServiceLaw::WeightedSum) {
            double w = 0.0;
            for (int n : active) {
                const auto k = static_cast<std::size_t>(n);
                w += c.weights[k] * rng.exponential(1.0 / c.mean_times[k]);
            }
            return w;
        }
        const double u = rng.uniform01() * acc;
        std::size_t pick = 0;
        while (pick + 1 < cumulative.size() && u >= cumulative[pick]) ++pick;
        return rng.exponential(1.0 / c.mean_times[static_cast<std::size_t>(active[pick])]);
    };

    const auto warmup = static_cast<std::int64_t>(std::floor(c.warmup_fraction * static_cast<double>(c.horizon)));
    const std::int64_t batch_size = (c.horizon - warmup) / c.batches;
    const std::int64_t kept = batch_size * c.batches;

    // Lindley recursion on the FIFO server; same semantics as simulate_fifo.
    double clock = 0.0;
    double last_departure = 0.0;
    std::vector<double> batch_sum(static_cast<std::size_t>(c.batches), 0.0);
    for (std::int64_t k = 0; k < warmup + kept; ++k) {
        clock += rng.exponential(c.lambda_eff);
        const double start = std::max(clock, last_departure);
        last_departure = start + draw_service();
        if (k >= warmup) batch_sum[static_cast<std::size_t>((k - warmup) / batch_size)] += start - clock;
    }

    QueueStats s;
    s.sample_count = kept;
    double total = 0.0;
    for (double b : batch_sum) total += b;
    s.mean_wait = total / static_cast<double>(kept);
    double ss = 0.0;
    for (double b : batch_sum) {
        const double d = b / static_cast<double>(batch_size) - s.mean_wait;
        ss += d * d;
    }
    const double sd = std::sqrt(ss / (c.batches - 1));
    s.confidence_halfwidth = t_quantile(c.batches - 1) * sd / std::sqrt(static_cast<double>(c.batches));
    return s;
}

std::string des_config_hash(const DesConfig& c) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](const void* data, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t k = 0; k < len; ++k) {
            h ^= p[k];
            h *= 0x100000001b3ULL;
        }
    };
    feed(&c.lambda_eff, sizeof c.lambda_eff);
    feed(c.weights.data(), c.weights.size() * sizeof(double));
    feed(c.mean_times.data(), c.mean_times.size() * sizeof(double));
    feed(&c.horizon, sizeof c.horizon);
    feed(&c.seed, sizeof c.seed);
    const int law = static_cast<int>(c.law);
    feed(&law, sizeof law);
    return fmt::format("{:016x}", h);
}

std::string des_csv_row(const DesConfig& config, double analytic_wait, const QueueStats& stats) {
    return fmt::format("{},{:.10g},{:.10g},{:.10g},{:.10g}", des_config_hash(config), config.lambda_eff, analytic_wait,
                       stats.mean_wait, stats.confidence_halfwidth);
}

}  // namespace scvn
