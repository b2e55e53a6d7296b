#pragma once

#include <cstdint>

#include "scvn/scenario.hpp"
#include "scvn/solution.hpp"

namespace scvn {

/// Exact optimum of the joint construction/pairing problem by enumeration.
struct BruteForceResult {
    bool feasible = false;
    double objective = kInf;
    KbcPolicy kbc;
    VspAssignment vsp;
    std::int64_t configurations = 0;  // (pair, alpha_i, alpha_j) combinations examined
};

inline constexpr int kBruteForceMaxVehicles = 6;
inline constexpr int kBruteForceMaxKbs = 4;

/// Enumerates every storage/satisfaction-feasible construction of every vehicle
/// and every perfect matching on the neighbor graph; mismatch and stability are
/// hard constraints. Throws InstanceTooLarge beyond 6 vehicles or 4 KBs.
BruteForceResult brute_force_p0(const Scenario& scenario);

}  // namespace scvn
