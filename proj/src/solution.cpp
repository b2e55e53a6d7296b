#include "scvn/solution.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "scvn/queueing.hpp"

namespace scvn {

std::vector<std::pair<int, int>> VspAssignment::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i) {
        const int j = partner[static_cast<std::size_t>(i)];
        if (j > i) out.emplace_back(i, j);
    }
    return out;
}

std::vector<int> VspAssignment::unpaired() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        if (!paired(i)) out.push_back(i);
    }
    return out;
}

bool VspAssignment::valid_on(const NeighborGraph& graph) const {
    const int v = size();
    if (static_cast<std::size_t>(v) != graph.neighbors.size()) return false;
    for (int i = 0; i < v; ++i) {
        const int j = partner[static_cast<std::size_t>(i)];
        if (j == kUnpaired) continue;
        if (j < 0 || j >= v || j == i) return false;
        if (partner[static_cast<std::size_t>(j)] != i) return false;
        if (!graph.adjacent(i, j)) return false;
    }
    return true;
}

std::string ConstraintStatus::describe() const {
    std::string out;
    auto add = [&](bool ok, const char* name) {
        if (!ok) out += (out.empty() ? "" : ",") + std::string(name);
    };
    add(storage, "storage");
    add(satisfaction, "satisfaction");
    add(single_association, "single_association");
    add(symmetry, "symmetry");
    add(mismatch, "mismatch");
    add(binary, "binary");
    add(neighbors, "neighbors");
    add(stability, "stability");
    return out.empty() ? "ok" : out;
}

SolutionEvaluation evaluate_solution(const Scenario& sc, const KbcPolicy& kbc, const VspAssignment& vsp) {
    const int v = sc.vehicle_count();
    if (static_cast<int>(kbc.alpha.size()) != v || vsp.size() != v) {
        throw std::invalid_argument("evaluate_solution: solution size does not match the scenario");
    }
    SolutionEvaluation ev;
    ev.vehicles.resize(static_cast<std::size_t>(v));
    ev.max_theta_residual = -kInf;
    const KbSet universe = KbSet::full(sc.kb_count());
    for (int i = 0; i < v; ++i) {
        auto& r = ev.vehicles[static_cast<std::size_t>(i)];
        const KbSet a = kbc.alpha[static_cast<std::size_t>(i)];
        r.alpha = a;
        r.partner = vsp.partner[static_cast<std::size_t>(i)];
        r.eta = preference_satisfaction(a & universe, sc.probabilities(i));
        if (!a.is_subset_of(universe)) ev.status.binary = false;
        const int cap = sc.vehicles[static_cast<std::size_t>(i)].capacity;
        const int used = storage_used(a & universe, sc.sizes());
        if (used > cap) {
            ev.status.storage = false;
            ev.residual_sum += static_cast<double>(used - cap) / std::max(cap, 1);
        }
        if (r.eta < sc.eta_min() - kFeasTol) {
            ev.status.satisfaction = false;
            ev.residual_sum += sc.eta_min() - r.eta;
        }
        const int j = r.partner;
        if (j == VspAssignment::kUnpaired) {
            ev.status.single_association = false;
            ev.residual_sum += 1.0;
            continue;
        }
        if (j < 0 || j >= v || j == i) {
            ev.status.binary = false;
            continue;
        }
        if (vsp.partner[static_cast<std::size_t>(j)] != i) ev.status.symmetry = false;
        if (!sc.graph.adjacent(i, j)) ev.status.neighbors = false;

        const KbSet b = kbc.alpha[static_cast<std::size_t>(j)];
        try {
            r.theta = mismatch_degree(a, b, sc.arrivals(i));
        } catch (const UndefinedMismatch&) {
            r.theta = 1.0;
        }
        const PairQueueModel q = pair_queue_model(a, b, sc.probabilities(i), sc.arrivals(i), sc.mean_times(j));
        r.lambda_eff = q.lambda_eff;
        r.mean_service = q.service.mean;
        r.delta = pk_latency(q.lambda_eff, q.service.mean, q.service.variance);
        if (is_unstable(r.delta)) {
            ev.status.stability = false;
            ev.residual_sum += 1.0;
        }
        ev.objective += r.delta;
        ev.max_theta_residual = std::max(ev.max_theta_residual, r.theta - sc.theta_max());
        if (r.theta > sc.theta_max() + kFeasTol) {
            ev.status.mismatch = false;
            ev.residual_sum += r.theta - sc.theta_max();
        }
    }
    ev.pair_count = static_cast<int>(vsp.pairs().size());
    if (ev.max_theta_residual == -kInf) ev.max_theta_residual = 0.0;
    return ev;
}

std::string format_report(const Scenario& sc, const SolveReport& rep) {
    const auto& ev = rep.evaluation;
    std::string out;
    out += fmt::format("method: {}\n", rep.method);
    out += fmt::format("vehicles: {}  kbs: {}  pairs: {}  unpaired: {}\n", sc.vehicle_count(), sc.kb_count(),
                       ev.pair_count, rep.vsp.unpaired().size());
    out += fmt::format("objective_s: {:.9g}\n", ev.objective);
    out += fmt::format("feasible: {}  constraints: {}\n", ev.feasible() ? "yes" : "no", ev.status.describe());
    if (!rep.trace.empty()) {
        out += fmt::format("dual_bound: {:.9g}\n", rep.dual_bound);
        out += fmt::format("iterations: {}  best_iteration: {}  converged: {}\n", rep.iterations, rep.best_iteration,
                           rep.converged ? "yes" : "no");
        out += fmt::format("weak_duality: {}  proposition1_mismatches: {}\n", rep.weak_duality_ok ? "ok" : "VIOLATED",
                           rep.prop1_mismatches);
        out += "\n[trace]\nt,dual_value,primal_objective,max_theta_residual,primal_feasible\n";
        for (const auto& it : rep.trace) {
            out += fmt::format("{},{:.9g},{:.9g},{:.6g},{}\n", it.t, it.dual_value, it.primal_objective,
                               it.max_theta_residual, it.primal_feasible ? 1 : 0);
        }
    }
    out += "\n[vehicles]\nvehicle,partner,alpha,eta,theta,delta_s\n";
    for (int i = 0; i < sc.vehicle_count(); ++i) {
        const auto& r = ev.vehicles[static_cast<std::size_t>(i)];
        out += fmt::format("{},{},{},{:.6f},{:.6f},{:.9g}\n", i, r.partner, r.alpha.to_string(sc.kb_count()), r.eta,
                           r.theta, r.delta);
    }
    return out;
}

}  // namespace scvn
