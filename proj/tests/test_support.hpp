#pragma once

#include <vector>

#include "scvn/scenario.hpp"

namespace scvn::testing {

/// Scenario with vehicles on the x-axis; every vehicle gets ranks 1..N in KB order.
inline Scenario line_scenario(const std::vector<double>& xs, int kb_count, ScenarioConfig cfg = {}) {
    cfg.vehicle_count = static_cast<int>(xs.size());
    cfg.kb_count = kb_count;
    cfg.geometry.lane_count = 1;
    std::vector<Vehicle> vehicles;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Vehicle v;
        v.id = static_cast<int>(i);
        v.position = {xs[i], cfg.geometry.lane_center(0)};
        v.capacity = cfg.capacity;
        v.total_arrival_rate = cfg.arrival_rate;
        v.zipf_skew = cfg.zipf_skew;
        for (int n = 0; n < kb_count; ++n) v.preference_ranks.push_back(n + 1);
        vehicles.push_back(v);
    }
    KbLibrary lib;
    lib.sizes.assign(static_cast<std::size_t>(kb_count), 1);
    lib.interpretation_mean_time =
        Matrix<double>(xs.size(), static_cast<std::size_t>(kb_count), 0.5 * (cfg.interp_time_min + cfg.interp_time_max));
    return assemble_scenario(cfg, 0, std::move(vehicles), std::move(lib));
}

}  // namespace scvn::testing
