#pragma once

#include <string>
#include <vector>

#include "scvn/scenario.hpp"
#include "scvn/solution.hpp"

namespace scvn {

/// Verdict of the independent constraint checker.
struct CheckerVerdict {
    ConstraintStatus status;
    std::vector<std::string> violations;

    bool ok() const { return status.all(); }
};

/// Re-verifies storage, satisfaction, single association, symmetry, mismatch,
/// binary domains, neighbor edges and queue stability straight from the raw
/// instance data (ranks, skews, rates, sizes, interpretation times). It
/// recomputes every quantity itself and does not call the model or solver code.
CheckerVerdict check_solution(const Scenario& scenario, const KbcPolicy& kbc, const VspAssignment& vsp);

}  // namespace scvn
