#pragma once

// Lagrangian-dual pairing and KB-construction solver.
//
// The mismatch constraint theta_{i->j*} <= theta_max is dualized with one
// multiplier per vehicle. For fixed multipliers the relaxed problem separates:
// every neighbor pair gets its own construction subproblem (solved by tabu
// search), the optimal pair costs form a symmetric matrix, and a fractional
// matching LP over that matrix is rounded iteratively into a pairing. Each vehicle
// then adopts the sub-policy it had in the subproblem of its chosen partner.
// Multipliers move along the subgradient of the dual function.

#include <cstdint>
#include <span>
#include <vector>

#include "scvn/pair_eval.hpp"
#include "scvn/scenario.hpp"
#include "scvn/simplex.hpp"
#include "scvn/solution.hpp"

namespace scvn {

struct TabuOptions {
    int budget = 500;         // iterations
    int tenure = 7;           // moves an index stays tabu after it flips
    int stall_limit = 100;    // stop after this many moves without improving the incumbent
    bool exhaustive = false;  // enumerate instead (2N <= 20)
    std::uint64_t seed = 1;
    double initial_penalty = 1.0;
};

struct PairSubSolution {
    int i = 0;
    int j = 0;
    KbSet alpha_i;
    KbSet alpha_j;
    double omega = kInf;
    bool feasible = false;
    int iterations = 0;

    KbSet alpha_of(int vehicle) const { return vehicle == i ? alpha_i : alpha_j; }
};

/// Pair cost with the model formulas; +inf when a direction has no common KB or is unstable.
double pair_cost(const Scenario& scenario, int i, int j, KbSet alpha_i, KbSet alpha_j, double tau_i, double tau_j);

/// Best storage/satisfaction-feasible (alpha_i, alpha_j) for one pair under multipliers `tau`.
/// `warm_start`, when given, seeds the search.
PairSubSolution tabu_search_p1(const Scenario& scenario, int i, int j, std::span<const double> tau,
                               const TabuOptions& options, const PairSubSolution* warm_start = nullptr);

/// Exact subproblem optimum by enumeration; requires 2N <= 20.
PairSubSolution exhaustive_p1(const Scenario& scenario, int i, int j, std::span<const double> tau);

/// Symmetric matrix of optimal pair costs (+inf on the diagonal and for non-neighbors),
/// with the cached sub-solution of every neighbor pair.
struct OmegaMatrix {
    Matrix<double> omega;
    std::vector<std::pair<int, int>> edges;  // i < j
    std::vector<PairSubSolution> subsolutions;  // parallel to edges
    Matrix<int> edge_index;                     // -1 for non-edges

    int subproblems() const { return static_cast<int>(edges.size()); }
    const PairSubSolution* find(int i, int j) const;
};

/// Solves one subproblem per unordered neighbor pair. `threads` > 1 evaluates pairs concurrently.
OmegaMatrix build_omega(const Scenario& scenario, std::span<const double> tau, const TabuOptions& options,
                        const OmegaMatrix* warm_start = nullptr, int threads = 1);

struct P2Result {
    VspAssignment assignment;
    LpStatus lp_status = LpStatus::Infeasible;
    double relaxed_value = 0.0;      // sum_e omega_e beta_e of the first LP optimum
    double relaxed_unmatched = 0.0;  // summed slack of the row constraints (0 for a perfect fractional matching)
    double rounded_value = 0.0;      // sum of omega over the rounded pairs
    std::vector<std::pair<int, int>> edges;
    std::vector<double> relaxed_beta;  // parallel to edges
    std::vector<int> unpaired;
};

/// Pairing subproblem: fractional matching LP with iterative rounding. Each round
/// fixes the integral pairs and the remaining pair with the largest relaxed value
/// (ties: smaller cost, then lexicographic pair), removes both vehicles and
/// re-solves the LP on the rest. The reported relaxed values are those of the
/// first LP. Vehicles without a finite option stay unpaired and are listed.
P2Result solve_p2(const Matrix<double>& omega);

/// tau_i' = max(0, tau_i + (c / sqrt(t)) (weighted_theta_i - theta_max)).
std::vector<double> subgradient_step(std::span<const double> tau, std::span<const double> weighted_theta,
                                     double theta_max, double step_scale, int t);

struct DualOptions {
    int max_iterations = 200;
    double tolerance = 1e-4;   // on max |tau' - tau|
    double step_scale = 0.05;  // c in c / sqrt(t), seconds
};

struct S4Options {
    TabuOptions tabu;
    DualOptions dual;
    bool warm_start = true;
    int threads = 1;
};

SolveReport s4_solve(const Scenario& scenario, const S4Options& options = {});

}  // namespace scvn
