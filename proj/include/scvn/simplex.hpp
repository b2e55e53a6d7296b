#pragma once

#include <vector>

#include "scvn/common.hpp"

namespace scvn {

/// min c^T x  s.t.  A x = b,  x >= 0.
struct LpProblem {
    Matrix<double> a;
    std::vector<double> b;
    std::vector<double> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
    int iterations = 0;
};

/// Dense two-phase tableau simplex. Unit columns already present in A seed the
/// starting basis; artificials are added only for the remaining rows. Dantzig
/// pricing with a switch to Bland's rule on long degenerate runs.
LpSolution solve_lp(const LpProblem& problem, int max_iterations = 200000);

}  // namespace scvn
