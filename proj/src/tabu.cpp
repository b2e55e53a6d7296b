#include <algorithm>
#include <vector>

#include "scvn/rng.hpp"
#include "scvn/solver.hpp"

namespace scvn {
namespace {

// Search score of states whose cost is undefined (no common KB, unstable queue).
constexpr double kUndefinedCost = 1e3;
constexpr double kPenaltyMin = 1e-6;
constexpr double kPenaltyMax = 1e6;

struct Move {
    int a = -1;  // flat index side * N + n
    int b = -1;  // second index of a swap, -1 for a single flip
};

struct State {
    KbSet side[2];

    void toggle(int flat, int kb_count) { side[flat / kb_count].flip(flat % kb_count); }
};

}  // namespace

double pair_cost(const Scenario& sc, int i, int j, KbSet alpha_i, KbSet alpha_j, double tau_i, double tau_j) {
    if (tau_i < 0.0 || tau_j < 0.0) throw std::invalid_argument("pair_cost: multipliers must be non-negative");
    return PairEvaluator(sc, i, j, tau_i, tau_j).omega(alpha_i, alpha_j);
}

PairSubSolution exhaustive_p1(const Scenario& sc, int i, int j, std::span<const double> tau) {
    const int n = sc.kb_count();
    if (2 * n > 20) throw InstanceTooLarge("exhaustive_p1: 2N must not exceed 20 bits");
    const PairEvaluator eval(sc, i, j, tau[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(j)]);
    std::vector<KbSet> options[2];
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (int s = 0; s < 2; ++s) {
            if (eval.vehicle_feasible(s, KbSet(bits))) options[s].emplace_back(bits);
        }
    }
    PairSubSolution best;
    best.i = i;
    best.j = j;
    for (KbSet a : options[0]) {
        for (KbSet b : options[1]) {
            const double w = eval.omega(a, b);
            if (w < best.omega) {
                best.alpha_i = a;
                best.alpha_j = b;
                best.omega = w;
                best.feasible = true;
            }
        }
    }
    return best;
}

PairSubSolution tabu_search_p1(const Scenario& sc, int i, int j, std::span<const double> tau,
                               const TabuOptions& opt, const PairSubSolution* warm_start) {
    if (i == j || !sc.graph.adjacent(i, j)) throw std::invalid_argument("tabu_search_p1: vehicles are not neighbors");
    if (opt.budget < 1) throw std::invalid_argument("tabu_search_p1: budget must be >= 1");
    if (opt.exhaustive) return exhaustive_p1(sc, i, j, tau);

    const int n = sc.kb_count();
    const PairEvaluator eval(sc, i, j, tau[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(j)]);
    Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(i) * 1000003ULL + static_cast<std::uint64_t>(j)));

    State cur;
    if (warm_start) {
        cur.side[0] = warm_start->alpha_of(i);
        cur.side[1] = warm_start->alpha_of(j);
    } else {
        for (int s = 0; s < 2; ++s) {
            const int v = s == 0 ? i : j;
            cur.side[s] = preference_prefix(sc.probabilities(v), sc.sizes(), sc.vehicles[static_cast<std::size_t>(v)].capacity,
                                            sc.eta_min());
        }
    }

    PairSubSolution best;
    best.i = i;
    best.j = j;
    auto consider = [&](const State& s, double omega) {
        if (omega < best.omega && eval.feasible(s.side[0], s.side[1])) {
            best.alpha_i = s.side[0];
            best.alpha_j = s.side[1];
            best.omega = omega;
            best.feasible = true;
            return true;
        }
        return false;
    };
    double penalty = opt.initial_penalty;
    auto score = [&](double omega, double violation) {
        const double base = omega == kInf ? kUndefinedCost : omega;
        return base + penalty * violation;
    };
    consider(cur, eval.omega(cur.side[0], cur.side[1]));

    std::vector<int> tabu_until(static_cast<std::size_t>(2 * n), -1);
    std::vector<Move> moves;
    moves.reserve(static_cast<std::size_t>(2 * n + n * n));
    int stall = 0;
    int it = 0;
    for (; it < opt.budget && stall < opt.stall_limit; ++it) {
        moves.clear();
        for (int f = 0; f < 2 * n; ++f) moves.push_back({f, -1});
        for (int s = 0; s < 2; ++s) {
            for (int in = 0; in < n; ++in) {
                if (!cur.side[s].contains(in)) continue;
                for (int out = 0; out < n; ++out) {
                    if (cur.side[s].contains(out)) continue;
                    moves.push_back({s * n + in, s * n + out});
                }
            }
        }

        const Move* chosen = nullptr;
        double chosen_score = kInf;
        double chosen_omega = kInf;
        int ties = 0;
        const Move* fallback = nullptr;
        int fallback_expiry = 0;
        double fallback_score = kInf;
        double fallback_omega = kInf;
        for (const Move& m : moves) {
            State next = cur;
            next.toggle(m.a, n);
            if (m.b >= 0) next.toggle(m.b, n);
            const double w = eval.omega(next.side[0], next.side[1]);
            const double viol = eval.violation(next.side[0], next.side[1]);
            const double sc_val = score(w, viol);
            int expiry = tabu_until[static_cast<std::size_t>(m.a)];
            if (m.b >= 0) expiry = std::max(expiry, tabu_until[static_cast<std::size_t>(m.b)]);
            const bool is_tabu = expiry > it;
            const bool aspires = w < best.omega && viol == 0.0;
            if (is_tabu && !aspires) {
                if (!fallback || expiry < fallback_expiry || (expiry == fallback_expiry && sc_val < fallback_score)) {
                    fallback = &m;
                    fallback_expiry = expiry;
                    fallback_score = sc_val;
                    fallback_omega = w;
                }
                continue;
            }
            if (sc_val < chosen_score) {
                chosen = &m;
                chosen_score = sc_val;
                chosen_omega = w;
                ties = 1;
            } else if (sc_val == chosen_score && chosen) {
                // Uniform choice among equal-score moves.
                ++ties;
                if (rng.uniform_int(1, ties) == 1) {
                    chosen = &m;
                    chosen_omega = w;
                }
            }
        }
        if (!chosen) {
            chosen = fallback;
            chosen_omega = fallback_omega;
        }
        if (!chosen) break;

        cur.toggle(chosen->a, n);
        tabu_until[static_cast<std::size_t>(chosen->a)] = it + 1 + opt.tenure;
        if (chosen->b >= 0) {
            cur.toggle(chosen->b, n);
            tabu_until[static_cast<std::size_t>(chosen->b)] = it + 1 + opt.tenure;
        }
        stall = consider(cur, chosen_omega) ? 0 : stall + 1;

        if (eval.violation(cur.side[0], cur.side[1]) > 0.0) {
            penalty = std::min(penalty * 1.5, kPenaltyMax);
        } else {
            penalty = std::max(penalty / 1.5, kPenaltyMin);
        }
    }
    best.iterations = it;
    return best;
}

}  // namespace scvn
