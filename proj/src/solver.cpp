#include "scvn/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace scvn {

const PairSubSolution* OmegaMatrix::find(int i, int j) const {
    const int e = edge_index(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return e < 0 ? nullptr : &subsolutions[static_cast<std::size_t>(e)];
}

OmegaMatrix build_omega(const Scenario& sc, std::span<const double> tau, const TabuOptions& options,
                        const OmegaMatrix* warm_start, int threads) {
    const int v = sc.vehicle_count();
    if (static_cast<int>(tau.size()) != v) throw std::invalid_argument("build_omega: tau has the wrong length");
    for (double t : tau) {
        if (t < 0.0) throw std::invalid_argument("build_omega: multipliers must be non-negative");
    }
    OmegaMatrix out;
    out.omega = Matrix<double>(static_cast<std::size_t>(v), static_cast<std::size_t>(v), kInf);
    out.edge_index = Matrix<int>(static_cast<std::size_t>(v), static_cast<std::size_t>(v), -1);
    for (int i = 0; i < v; ++i) {
        for (int j : sc.graph.neighbors[static_cast<std::size_t>(i)]) {
            if (j > i) out.edges.emplace_back(i, j);
        }
    }
    out.subsolutions.resize(out.edges.size());

    auto solve_edge = [&](std::size_t e) {
        const auto [i, j] = out.edges[e];
        const PairSubSolution* warm = warm_start ? warm_start->find(i, j) : nullptr;
        out.subsolutions[e] = tabu_search_p1(sc, i, j, tau, options, warm);
    };
    if (threads <= 1 || out.edges.size() < 2) {
        for (std::size_t e = 0; e < out.edges.size(); ++e) solve_edge(e);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t e = next++; e < out.edges.size(); e = next++) solve_edge(e);
            });
        }
    }

    for (std::size_t e = 0; e < out.edges.size(); ++e) {
        const auto [i, j] = out.edges[e];
        const auto ui = static_cast<std::size_t>(i);
        const auto uj = static_cast<std::size_t>(j);
        out.omega(ui, uj) = out.omega(uj, ui) = out.subsolutions[e].omega;
        out.edge_index(ui, uj) = out.edge_index(uj, ui) = static_cast<int>(e);
    }
    return out;
}

namespace {

struct MatchingLp {
    std::vector<std::pair<int, int>> edges;  // finite edges among the active vehicles
    std::vector<double> cost;
    std::vector<double> beta;
    LpStatus status = LpStatus::Infeasible;
    double value = 0.0;
    double unmatched = 0.0;
};

// Fractional matching over the active vehicles. One beta per undirected edge
// (symmetry by construction) and one slack per vehicle row:
// sum_{e ~ i} beta_e + slack_i = 1. The slack cost exceeds any matching cost
// change, so the LP matches as much as it can.
MatchingLp solve_matching_lp(const Matrix<double>& omega, const std::vector<int>& active) {
    MatchingLp m;
    const std::size_t v = active.size();
    double finite_sum = 0.0;
    for (std::size_t a = 0; a < v; ++a) {
        for (std::size_t b = a + 1; b < v; ++b) {
            const double w = omega(static_cast<std::size_t>(active[a]), static_cast<std::size_t>(active[b]));
            if (w < kInf) {
                m.edges.emplace_back(active[a], active[b]);
                m.cost.push_back(w);
                finite_sum += std::abs(w);
            }
        }
    }
    const std::size_t e_count = m.edges.size();
    m.beta.assign(e_count, 0.0);
    if (e_count == 0) {
        m.status = LpStatus::Optimal;
        m.unmatched = static_cast<double>(v);
        return m;
    }
    std::vector<int> row_of(omega.rows(), -1);
    for (std::size_t a = 0; a < v; ++a) row_of[static_cast<std::size_t>(active[a])] = static_cast<int>(a);

    const double slack_cost = 4.0 * (1.0 + finite_sum);
    LpProblem lp;
    lp.a = Matrix<double>(v, e_count + v, 0.0);
    lp.b.assign(v, 1.0);
    lp.c.assign(e_count + v, slack_cost);
    for (std::size_t e = 0; e < e_count; ++e) {
        const auto [i, j] = m.edges[e];
        lp.a(static_cast<std::size_t>(row_of[static_cast<std::size_t>(i)]), e) = 1.0;
        lp.a(static_cast<std::size_t>(row_of[static_cast<std::size_t>(j)]), e) = 1.0;
        lp.c[e] = m.cost[e];
    }
    for (std::size_t a = 0; a < v; ++a) lp.a(a, e_count + a) = 1.0;

    const LpSolution sol = solve_lp(lp);
    m.status = sol.status;
    if (sol.status == LpStatus::Optimal) {
        for (std::size_t e = 0; e < e_count; ++e) {
            m.beta[e] = sol.x[e];
            m.value += m.cost[e] * sol.x[e];
        }
        for (std::size_t a = 0; a < v; ++a) m.unmatched += sol.x[e_count + a];
    }
    return m;
}

int max_matching_size(const Matrix<double>& omega, const std::vector<int>& active) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    const std::size_t v = active.size();
    Graph g(v);
    for (std::size_t a = 0; a < v; ++a) {
        for (std::size_t b = a + 1; b < v; ++b) {
            if (omega(static_cast<std::size_t>(active[a]), static_cast<std::size_t>(active[b])) < kInf) {
                boost::add_edge(a, b, g);
            }
        }
    }
    std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(v);
    boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
    return static_cast<int>(boost::matching_size(g, &mate[0]));
}

}  // namespace

P2Result solve_p2(const Matrix<double>& omega) {
    const std::size_t v = omega.rows();
    if (omega.cols() != v) throw std::invalid_argument("solve_p2: omega must be square");
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = i + 1; j < v; ++j) {
            if (!(omega(i, j) == omega(j, i))) throw std::invalid_argument("solve_p2: omega must be symmetric");
        }
    }
    P2Result res;
    res.assignment = VspAssignment(static_cast<int>(v));
    std::vector<int> active(v);
    for (std::size_t i = 0; i < v; ++i) active[i] = static_cast<int>(i);

    constexpr double kTieEps = 1e-9;
    MatchingLp cur = solve_matching_lp(omega, active);
    res.lp_status = cur.status;
    res.relaxed_value = cur.value;
    res.relaxed_unmatched = cur.unmatched;
    res.edges = cur.edges;
    res.relaxed_beta = cur.beta;

    // A pair is fixed only if the remaining vehicles can still form a matching
    // of maximum size, so rounding never strands a vehicle that could be paired.
    int target = max_matching_size(omega, active);
    while (target > 0 && !cur.edges.empty()) {
        std::vector<std::size_t> order(cur.edges.size());
        for (std::size_t e = 0; e < order.size(); ++e) order[e] = e;
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            if (std::abs(cur.beta[x] - cur.beta[y]) > kTieEps) return cur.beta[x] > cur.beta[y];
            if (cur.cost[x] != cur.cost[y]) return cur.cost[x] < cur.cost[y];
            return cur.edges[x] < cur.edges[y];
        });
        bool fixed = false;
        for (std::size_t e : order) {
            const auto [i, j] = cur.edges[e];
            if (res.assignment.paired(i) || res.assignment.paired(j)) continue;
            std::vector<int> rest;
            for (int k : active) {
                if (k != i && k != j) rest.push_back(k);
            }
            if (max_matching_size(omega, rest) != target - 1) continue;
            res.assignment.pair(i, j);
            res.rounded_value += cur.cost[e];
            active = std::move(rest);
            --target;
            fixed = true;
            // Integral pairs are fixed together; the LP restricted to the rest stays optimal.
            if (cur.beta[e] < 1.0 - kTieEps) break;
        }
        if (!fixed) break;
        cur = solve_matching_lp(omega, active);
    }
    res.unpaired = res.assignment.unpaired();
    return res;
}

std::vector<double> subgradient_step(std::span<const double> tau, std::span<const double> weighted_theta,
                                     double theta_max, double step_scale, int t) {
    if (t < 1) throw std::invalid_argument("subgradient_step: t must be >= 1");
    if (tau.size() != weighted_theta.size()) throw std::invalid_argument("subgradient_step: size mismatch");
    const double step = step_scale / std::sqrt(static_cast<double>(t));
    std::vector<double> out(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) {
        out[i] = std::max(0.0, tau[i] + step * (weighted_theta[i] - theta_max));
    }
    return out;
}

namespace {

// Lexicographic preference between iterates: feasible, then smaller constraint
// residual, then more pairs, then smaller objective.
bool better_iterate(const SolutionEvaluation& a, const SolutionEvaluation& b) {
    const bool fa = a.feasible();
    const bool fb = b.feasible();
    if (fa != fb) return fa;
    if (std::abs(a.residual_sum - b.residual_sum) > 1e-12) return a.residual_sum < b.residual_sum;
    if (a.pair_count != b.pair_count) return a.pair_count > b.pair_count;
    return a.objective < b.objective;
}

}  // namespace

SolveReport s4_solve(const Scenario& sc, const S4Options& options) {
    const int v = sc.vehicle_count();
    if (options.dual.max_iterations < 1) throw std::invalid_argument("s4_solve: max_iterations must be >= 1");
    SolveReport report;
    report.method = "s4";

    std::vector<double> tau(static_cast<std::size_t>(v), 0.0);
    OmegaMatrix previous;
    bool have_previous = false;
    bool have_best = false;
    double best_feasible_objective = kInf;

    for (int t = 1; t <= options.dual.max_iterations; ++t) {
        OmegaMatrix om = build_omega(sc, tau, options.tabu, options.warm_start && have_previous ? &previous : nullptr,
                                     options.threads);
        const P2Result p2 = solve_p2(om.omega);

        KbcPolicy kbc;
        kbc.kb_count = sc.kb_count();
        kbc.alpha.resize(static_cast<std::size_t>(v));
        std::vector<KbSet> subpolicy(static_cast<std::size_t>(v));
        for (int i = 0; i < v; ++i) {
            const int j = p2.assignment.partner[static_cast<std::size_t>(i)];
            if (j == VspAssignment::kUnpaired) {
                kbc.alpha[static_cast<std::size_t>(i)] =
                    preference_prefix(sc.probabilities(i), sc.sizes(), sc.vehicles[static_cast<std::size_t>(i)].capacity,
                                      sc.eta_min());
                continue;
            }
            const PairSubSolution* sub = om.find(i, j);
            subpolicy[static_cast<std::size_t>(i)] = sub->alpha_of(i);
            kbc.alpha[static_cast<std::size_t>(i)] = sub->alpha_of(i);
        }
        int mismatches = 0;
        for (int i = 0; i < v; ++i) {
            const int j = p2.assignment.partner[static_cast<std::size_t>(i)];
            if (j == VspAssignment::kUnpaired) continue;
            if (!(kbc.alpha[static_cast<std::size_t>(i)] == om.find(i, j)->alpha_of(i))) ++mismatches;
        }

        SolutionEvaluation ev = evaluate_solution(sc, kbc, p2.assignment);

        IterationRecord rec;
        rec.t = t;
        double tau_sum = 0.0;
        for (double x : tau) tau_sum += x;
        rec.dual_value = p2.relaxed_value - sc.theta_max() * tau_sum;
        rec.relaxation_perfect = p2.lp_status == LpStatus::Optimal && p2.relaxed_unmatched < 1e-9;
        rec.primal_objective = ev.objective;
        rec.max_theta_residual = ev.max_theta_residual;
        rec.primal_feasible = ev.feasible();
        rec.tau_max = tau.empty() ? 0.0 : *std::max_element(tau.begin(), tau.end());
        report.trace.push_back(rec);
        if (rec.relaxation_perfect) report.dual_bound = std::max(report.dual_bound, rec.dual_value);

        if (!have_best || better_iterate(ev, report.evaluation)) {
            report.kbc = kbc;
            report.vsp = p2.assignment;
            report.evaluation = ev;
            report.subpolicy = subpolicy;
            report.best_iteration = t;
            report.prop1_mismatches = mismatches;
            have_best = true;
        }
        if (ev.feasible()) best_feasible_objective = std::min(best_feasible_objective, ev.objective);

        std::vector<double> weighted_theta(static_cast<std::size_t>(v), 0.0);
        for (int i = 0; i < v; ++i) {
            if (p2.assignment.paired(i)) weighted_theta[static_cast<std::size_t>(i)] = ev.vehicles[static_cast<std::size_t>(i)].theta;
        }
        std::vector<double> next = subgradient_step(tau, weighted_theta, sc.theta_max(), options.dual.step_scale, t);
        double move = 0.0;
        for (std::size_t k = 0; k < next.size(); ++k) move = std::max(move, std::abs(next[k] - tau[k]));
        tau = std::move(next);
        report.iterations = t;
        previous = std::move(om);
        have_previous = true;
        if (move < options.dual.tolerance) {
            report.converged = true;
            break;
        }
    }

    if (best_feasible_objective < kInf) {
        const double slack = 1e-9 * std::max(1.0, std::abs(best_feasible_objective));
        for (const auto& rec : report.trace) {
            if (rec.relaxation_perfect && rec.dual_value > best_feasible_objective + slack) {
                report.weak_duality_ok = false;
            }
        }
    }
    return report;
}

}  // namespace scvn
