#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scvn/knowledge.hpp"
#include "scvn/scenario.hpp"

namespace scvn {

/// Pairing of vehicles; partner[i] is i's partner or kUnpaired.
struct VspAssignment {
    static constexpr int kUnpaired = -1;
    std::vector<int> partner;

    VspAssignment() = default;
    explicit VspAssignment(int vehicle_count) : partner(static_cast<std::size_t>(vehicle_count), kUnpaired) {}

    int size() const { return static_cast<int>(partner.size()); }
    bool paired(int i) const { return partner[static_cast<std::size_t>(i)] != kUnpaired; }
    void pair(int i, int j) {
        partner[static_cast<std::size_t>(i)] = j;
        partner[static_cast<std::size_t>(j)] = i;
    }
    /// Pairs (i, j) with i < j in ascending order of i.
    std::vector<std::pair<int, int>> pairs() const;
    std::vector<int> unpaired() const;
    /// Involution on paired vehicles, no self pairs, every pair a neighbor edge.
    bool valid_on(const NeighborGraph& graph) const;

    friend bool operator==(const VspAssignment&, const VspAssignment&) = default;
};

/// Per-constraint verdicts for a joint (alpha, beta) solution.
struct ConstraintStatus {
    bool storage = true;             // sum_n alpha_i^n s_n <= C_i
    bool satisfaction = true;        // eta_i >= eta_min
    bool single_association = true;  // every vehicle has exactly one partner
    bool symmetry = true;            // beta_{i->j} = beta_{j->i}
    bool mismatch = true;            // theta_{i->partner} <= theta_max
    bool binary = true;              // domains of alpha and beta
    bool neighbors = true;           // every pair is a neighbor edge
    bool stability = true;           // every paired direction has a stable queue

    bool all() const {
        return storage && satisfaction && single_association && symmetry && mismatch && binary && neighbors &&
               stability;
    }
    std::string describe() const;
};

struct VehicleReport {
    int partner = VspAssignment::kUnpaired;
    KbSet alpha;
    double eta = 0.0;
    double theta = 0.0;  // towards the partner; 0 when unpaired
    double delta = 0.0;  // waiting time towards the partner; 0 when unpaired
    double lambda_eff = 0.0;
    double mean_service = 0.0;
};

struct SolutionEvaluation {
    double objective = 0.0;  // sum over pairs of delta_{i->j} + delta_{j->i}
    ConstraintStatus status;
    std::vector<VehicleReport> vehicles;
    int pair_count = 0;
    double max_theta_residual = 0.0;  // max_i theta_i - theta_max over paired vehicles
    double residual_sum = 0.0;        // summed constraint excess; 1 per unpaired vehicle or unstable link

    bool feasible() const { return status.all(); }
};

/// Evaluates a joint solution with the model formulas.
SolutionEvaluation evaluate_solution(const Scenario& scenario, const KbcPolicy& kbc, const VspAssignment& vsp);

struct IterationRecord {
    int t = 0;
    double dual_value = 0.0;
    bool relaxation_perfect = false;  // dual value is a valid bound only when true
    double primal_objective = 0.0;
    double max_theta_residual = 0.0;
    bool primal_feasible = false;
    double tau_max = 0.0;
};

struct SolveReport {
    std::string method;
    KbcPolicy kbc;
    VspAssignment vsp;
    SolutionEvaluation evaluation;
    /// Cached pair sub-policy alpha*_{i(j*_i)} of each paired vehicle (S4 only).
    std::vector<KbSet> subpolicy;
    std::vector<IterationRecord> trace;
    double dual_bound = -kInf;
    int iterations = 0;
    int best_iteration = 0;
    bool converged = false;
    bool weak_duality_ok = true;
    int prop1_mismatches = 0;

    double objective() const { return evaluation.objective; }
    bool feasible() const { return evaluation.feasible(); }
};

/// Human-readable report: summary, iteration trace CSV block and per-vehicle CSV block.
std::string format_report(const Scenario& scenario, const SolveReport& report);

}  // namespace scvn
