#include "scvn/checker.hpp"

#include <fmt/format.h>

#include <cmath>

namespace scvn {
namespace {

constexpr double kTol = 1e-9;

// Zipf probabilities recomputed from ranks, independent of the model code.
std::vector<double> request_probabilities(const Vehicle& veh) {
    const std::size_t n = veh.preference_ranks.size();
    std::vector<double> p(n);
    double norm = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        p[k] = std::exp(-veh.zipf_skew * std::log(static_cast<double>(veh.preference_ranks[k])));
        norm += std::exp(-veh.zipf_skew * std::log(static_cast<double>(k + 1)));
    }
    for (double& x : p) x /= norm;
    return p;
}

}  // namespace

CheckerVerdict check_solution(const Scenario& sc, const KbcPolicy& kbc, const VspAssignment& vsp) {
    CheckerVerdict out;
    auto fail = [&](bool& flag, std::string msg) {
        flag = false;
        out.violations.push_back(std::move(msg));
    };

    const std::size_t v = sc.vehicles.size();
    const std::size_t n = sc.library.sizes.size();
    if (kbc.alpha.size() != v || vsp.partner.size() != v || kbc.kb_count != static_cast<int>(n)) {
        fail(out.status.binary, "solution dimensions do not match the instance");
        return out;
    }

    std::vector<std::vector<double>> prob(v);
    for (std::size_t i = 0; i < v; ++i) prob[i] = request_probabilities(sc.vehicles[i]);

    auto constructed = [&](std::size_t i, std::size_t k) { return (kbc.alpha[i].bits() >> k) & 1u; };

    for (std::size_t i = 0; i < v; ++i) {
        if (n < 64 && (kbc.alpha[i].bits() >> n) != 0) {
            fail(out.status.binary, fmt::format("vehicle {}: construction bits beyond the library", i));
        }
        long long used = 0;
        double eta = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (!constructed(i, k)) continue;
            used += sc.library.sizes[k];
            eta += prob[i][k];
        }
        if (used > sc.vehicles[i].capacity) {
            fail(out.status.storage, fmt::format("vehicle {}: storage {} > capacity {}", i, used, sc.vehicles[i].capacity));
        }
        if (eta < sc.config.eta_min - kTol) {
            fail(out.status.satisfaction, fmt::format("vehicle {}: satisfaction {:.6f} < {:.6f}", i, eta, sc.config.eta_min));
        }
    }

    for (std::size_t i = 0; i < v; ++i) {
        const int j = vsp.partner[i];
        if (j == VspAssignment::kUnpaired) {
            fail(out.status.single_association, fmt::format("vehicle {}: unpaired", i));
            continue;
        }
        if (j < 0 || static_cast<std::size_t>(j) >= v || static_cast<std::size_t>(j) == i) {
            fail(out.status.binary, fmt::format("vehicle {}: invalid partner {}", i, j));
            continue;
        }
        const auto uj = static_cast<std::size_t>(j);
        if (vsp.partner[uj] != static_cast<int>(i)) {
            fail(out.status.symmetry, fmt::format("vehicle {}: partner {} does not pair back", i, j));
        }
        if (!(sc.graph.sinr(i, uj) >= sc.graph.sinr_threshold)) {
            fail(out.status.neighbors, fmt::format("vehicle {}: partner {} is below the SINR threshold", i, j));
        }

        // Sender i, receiver j.
        const double rate = sc.vehicles[i].total_arrival_rate;
        double sent = 0.0, missed = 0.0, matched_p = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (!constructed(i, k)) continue;
            sent += rate * prob[i][k];
            if (constructed(uj, k)) {
                matched_p += prob[i][k];
            } else {
                missed += rate * prob[i][k];
            }
        }
        const double theta = sent > 0.0 ? missed / sent : 1.0;
        if (theta > sc.config.theta_max + kTol) {
            fail(out.status.mismatch, fmt::format("pair {}->{}: mismatch {:.6f} > {:.6f}", i, j, theta, sc.config.theta_max));
        }
        if (matched_p > 0.0) {
            double mean = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                if (constructed(i, k) && constructed(uj, k)) {
                    mean += prob[i][k] / matched_p * sc.library.interpretation_mean_time(uj, k);
                }
            }
            if (!(rate * matched_p * mean < 1.0)) {
                fail(out.status.stability, fmt::format("pair {}->{}: utilization >= 1", i, j));
            }
        }
    }
    return out;
}

}  // namespace scvn
