#include "scvn/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace scvn {
namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-10;
constexpr int kDegenerateSwitch = 50;

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows + 1, cols + 1, 0.0), basis_(rows, 0) {}

    double& at(std::size_t r, std::size_t c) { return t_(r + 1, c); }
    double& rhs(std::size_t r) { return t_(r + 1, n_); }
    double& cost(std::size_t c) { return t_(0, c); }
    double& objective() { return t_(0, n_); }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t row, std::size_t col) {
        const std::size_t pr = row + 1;
        const double inv = 1.0 / t_(pr, col);
        double* prow = t_.row(pr);
        for (std::size_t c = 0; c <= n_; ++c) prow[c] *= inv;
        prow[col] = 1.0;
        for (std::size_t r = 0; r <= m_; ++r) {
            if (r == pr) continue;
            double* rr = t_.row(r);
            const double f = rr[col];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c <= n_; ++c) rr[c] -= f * prow[c];
            rr[col] = 0.0;
        }
        basis_[row] = col;
    }

    /// Minimizes the current cost row over columns flagged in `allowed`.
    LpStatus optimize(const std::vector<bool>& allowed, int& iterations, int max_iterations) {
        int degenerate_run = 0;
        while (true) {
            if (iterations >= max_iterations) return LpStatus::IterationLimit;
            const bool bland = degenerate_run >= kDegenerateSwitch;
            std::size_t enter = n_;
            double best = -kCostEps;
            for (std::size_t c = 0; c < n_; ++c) {
                if (!allowed[c]) continue;
                const double d = cost(c);
                if (d < best) {
                    enter = c;
                    if (bland) break;
                    best = d;
                }
            }
            if (enter == n_) return LpStatus::Optimal;

            std::size_t leave = m_;
            double ratio = kInf;
            for (std::size_t r = 0; r < m_; ++r) {
                const double a = at(r, enter);
                if (a <= kPivotEps) continue;
                const double q = rhs(r) / a;
                if (q < ratio - 1e-12 || (q <= ratio + 1e-12 && leave != m_ && basis_[r] < basis_[leave])) {
                    ratio = q;
                    leave = r;
                }
            }
            if (leave == m_) return LpStatus::Unbounded;
            degenerate_run = ratio <= 1e-12 ? degenerate_run + 1 : 0;
            pivot(leave, enter);
            ++iterations;
        }
    }

private:
    std::size_t m_, n_;
    Matrix<double> t_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& p, int max_iterations) {
    const std::size_t m = p.a.rows();
    const std::size_t n = p.a.cols();
    if (p.b.size() != m || p.c.size() != n) throw std::invalid_argument("solve_lp: dimension mismatch");

    std::vector<double> sign(m, 1.0);
    for (std::size_t r = 0; r < m; ++r) {
        if (p.b[r] < 0.0) sign[r] = -1.0;
    }

    // Look for unit columns that can start the basis.
    std::vector<std::size_t> start(m, SIZE_MAX);
    std::vector<bool> used(n, false);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t unit_row = SIZE_MAX;
        bool ok = true;
        for (std::size_t r = 0; r < m && ok; ++r) {
            const double v = sign[r] * p.a(r, c);
            if (v == 0.0) continue;
            if (v == 1.0 && unit_row == SIZE_MAX) {
                unit_row = r;
            } else {
                ok = false;
            }
        }
        if (ok && unit_row != SIZE_MAX && start[unit_row] == SIZE_MAX) {
            start[unit_row] = c;
            used[c] = true;
        }
    }
    std::size_t artificial_count = 0;
    for (std::size_t r = 0; r < m; ++r) {
        if (start[r] == SIZE_MAX) ++artificial_count;
    }
    const std::size_t total = n + artificial_count;

    Tableau tab(m, total);
    std::size_t next_art = n;
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) tab.at(r, c) = sign[r] * p.a(r, c);
        tab.rhs(r) = sign[r] * p.b[r];
        if (start[r] == SIZE_MAX) {
            tab.at(r, next_art) = 1.0;
            tab.basis()[r] = next_art++;
        } else {
            tab.basis()[r] = start[r];
        }
    }

    LpSolution sol;
    int iterations = 0;

    auto load_costs = [&](const std::vector<double>& costs) {
        for (std::size_t c = 0; c < total; ++c) tab.cost(c) = costs[c];
        tab.objective() = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            const double cb = costs[tab.basis()[r]];
            if (cb == 0.0) continue;
            for (std::size_t c = 0; c < total; ++c) tab.cost(c) -= cb * tab.at(r, c);
            tab.objective() -= cb * tab.rhs(r);
        }
    };

    if (artificial_count > 0) {
        std::vector<double> phase1(total, 0.0);
        for (std::size_t c = n; c < total; ++c) phase1[c] = 1.0;
        load_costs(phase1);
        std::vector<bool> allowed(total, true);
        const LpStatus st = tab.optimize(allowed, iterations, max_iterations);
        if (st == LpStatus::IterationLimit) {
            sol.status = st;
            sol.iterations = iterations;
            return sol;
        }
        if (-tab.objective() > 1e-8) {
            sol.status = LpStatus::Infeasible;
            sol.iterations = iterations;
            return sol;
        }
        // Drive zero-valued artificials out of the basis where possible.
        for (std::size_t r = 0; r < m; ++r) {
            if (tab.basis()[r] < n) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (std::abs(tab.at(r, c)) > kPivotEps) {
                    tab.pivot(r, c);
                    break;
                }
            }
        }
    }

    std::vector<double> phase2(total, 0.0);
    for (std::size_t c = 0; c < n; ++c) phase2[c] = p.c[c];
    load_costs(phase2);
    std::vector<bool> allowed(total, false);
    for (std::size_t c = 0; c < n; ++c) allowed[c] = true;
    const LpStatus st = tab.optimize(allowed, iterations, max_iterations);
    sol.status = st;
    sol.iterations = iterations;
    if (st != LpStatus::Optimal) return sol;

    sol.x.assign(n, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis()[r] < n) sol.x[tab.basis()[r]] = tab.rhs(r);
    }
    sol.objective = 0.0;
    for (std::size_t c = 0; c < n; ++c) sol.objective += p.c[c] * sol.x[c];
    return sol;
}

}  // namespace scvn
