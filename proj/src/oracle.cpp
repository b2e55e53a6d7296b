#include "scvn/oracle.hpp"

#include <fmt/format.h>

#include <functional>

#include "scvn/queueing.hpp"

namespace scvn {
namespace {

struct PairOptimum {
    double cost = kInf;
    KbSet alpha_i;
    KbSet alpha_j;
};

double direction_latency(const Scenario& sc, int tx, int rx, KbSet a_tx, KbSet a_rx) {
    const PairQueueModel q = pair_queue_model(a_tx, a_rx, sc.probabilities(tx), sc.arrivals(tx), sc.mean_times(rx));
    return pk_latency(q.lambda_eff, q.service.mean, q.service.variance);
}

}  // namespace

BruteForceResult brute_force_p0(const Scenario& sc) {
    const int v = sc.vehicle_count();
    const int n = sc.kb_count();
    if (v > kBruteForceMaxVehicles || n > kBruteForceMaxKbs) {
        throw InstanceTooLarge(fmt::format("brute_force_p0: instance {}x{} exceeds the {}x{} bound", v, n,
                                           kBruteForceMaxVehicles, kBruteForceMaxKbs));
    }

    std::vector<std::vector<KbSet>> feasible(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) {
        const int cap = sc.vehicles[static_cast<std::size_t>(i)].capacity;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const KbSet a(bits);
            if (storage_used(a, sc.sizes()) > cap) continue;
            if (preference_satisfaction(a, sc.probabilities(i)) < sc.eta_min() - kFeasTol) continue;
            feasible[static_cast<std::size_t>(i)].push_back(a);
        }
    }

    BruteForceResult res;
    // With the pairing fixed the objective and constraints separate per pair,
    // so each edge's best joint construction is found once.
    Matrix<PairOptimum> best(static_cast<std::size_t>(v), static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) {
        for (int j : sc.graph.neighbors[static_cast<std::size_t>(i)]) {
            if (j < i) continue;
            PairOptimum opt;
            for (KbSet a : feasible[static_cast<std::size_t>(i)]) {
                for (KbSet b : feasible[static_cast<std::size_t>(j)]) {
                    ++res.configurations;
                    if ((a & b).empty()) continue;
                    if (mismatch_degree(a, b, sc.arrivals(i)) > sc.theta_max() + kFeasTol) continue;
                    if (mismatch_degree(b, a, sc.arrivals(j)) > sc.theta_max() + kFeasTol) continue;
                    const double cost = direction_latency(sc, i, j, a, b) + direction_latency(sc, j, i, b, a);
                    if (cost < opt.cost) opt = {cost, a, b};
                }
            }
            best(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = opt;
        }
    }

    VspAssignment current(v);
    VspAssignment best_vsp(v);
    double best_cost = kInf;
    std::function<void(double)> recurse = [&](double acc) {
        int first = -1;
        for (int i = 0; i < v; ++i) {
            if (!current.paired(i)) {
                first = i;
                break;
            }
        }
        if (first < 0) {
            if (acc < best_cost) {
                best_cost = acc;
                best_vsp = current;
            }
            return;
        }
        for (int j : sc.graph.neighbors[static_cast<std::size_t>(first)]) {
            if (j < first || current.paired(j)) continue;
            const double c = best(static_cast<std::size_t>(first), static_cast<std::size_t>(j)).cost;
            if (c == kInf) continue;
            current.pair(first, j);
            recurse(acc + c);
            current.partner[static_cast<std::size_t>(first)] = VspAssignment::kUnpaired;
            current.partner[static_cast<std::size_t>(j)] = VspAssignment::kUnpaired;
        }
    };
    recurse(0.0);

    res.kbc.kb_count = n;
    res.kbc.alpha.assign(static_cast<std::size_t>(v), KbSet{});
    if (best_cost == kInf) return res;
    res.feasible = true;
    res.objective = best_cost;
    res.vsp = best_vsp;
    for (const auto& [i, j] : best_vsp.pairs()) {
        const PairOptimum& o = best(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        res.kbc.alpha[static_cast<std::size_t>(i)] = o.alpha_i;
        res.kbc.alpha[static_cast<std::size_t>(j)] = o.alpha_j;
    }
    return res;
}

}  // namespace scvn
