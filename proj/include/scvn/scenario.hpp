#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "scvn/common.hpp"
#include "scvn/knowledge.hpp"

namespace scvn {

struct Geometry {
    int lane_count = 6;
    double lane_width = 4.0;     // m
    double cell_radius = 500.0;  // m
    Point rsu_position{};

    void validate() const;
    /// y-coordinate of a lane's centerline; lanes are centered on the RSU.
    double lane_center(int lane) const;
};

/// Interference-free log-distance path loss: gamma(d) = P_tx (d0 / max(d, d0))^exponent / noise.
struct ChannelConfig {
    double tx_power_dbm = 23.0;
    double noise_power_dbm = -95.0;
    double path_loss_exponent = 3.5;
    double reference_distance = 1.0;  // m

    void validate() const;
};

struct ScenarioConfig {
    int vehicle_count = 60;
    int kb_count = 12;
    Geometry geometry{};
    ChannelConfig channel{};
    /// Neighbor threshold. 45 dB with the default channel is a ~122 m V2V range.
    double sinr_threshold_db = 45.0;

    int capacity = 24;            // storage units, same for every vehicle
    double arrival_rate = 100.0;  // packets/s per vehicle
    double zipf_skew = 1.0;

    int kb_size_min = 1;
    int kb_size_max = 5;
    double interp_time_min = 5e-3;  // s/packet
    double interp_time_max = 1e-2;

    double eta_min = 0.5;    // minimum preference satisfaction
    double theta_max = 0.1;  // maximum mismatch degree

    void validate() const;
};

struct Vehicle {
    int id = 0;
    Point position{};
    int capacity = 0;
    double total_arrival_rate = 0.0;
    std::vector<int> preference_ranks;  // 1-based ranks, one per KB
    double zipf_skew = 0.0;
    int lane = 0;
};

struct NeighborGraph {
    Matrix<double> sinr;  // linear
    double sinr_threshold = 0.0;  // linear
    std::vector<std::vector<int>> neighbors;

    bool adjacent(int i, int j) const;
    /// Number of undirected edges, i.e. half the summed neighbor-list sizes.
    int edge_count() const;
};

/// A complete problem instance. Derived fields (graph, probabilities, rates) are
/// always rebuilt from the primary data by `assemble_scenario`.
struct Scenario {
    ScenarioConfig config{};
    std::uint64_t seed = 0;
    std::vector<Vehicle> vehicles;
    KbLibrary library;

    NeighborGraph graph;
    Matrix<double> preference;   // V x N, p_i^n
    Matrix<double> kb_arrival;   // V x N, lambda_i^n

    int vehicle_count() const { return static_cast<int>(vehicles.size()); }
    int kb_count() const { return library.count(); }
    double eta_min() const { return config.eta_min; }
    double theta_max() const { return config.theta_max; }

    std::span<const double> probabilities(int i) const {
        return {preference.row(static_cast<std::size_t>(i)), preference.cols()};
    }
    std::span<const double> arrivals(int i) const {
        return {kb_arrival.row(static_cast<std::size_t>(i)), kb_arrival.cols()};
    }
    std::span<const double> mean_times(int receiver) const {
        const auto& m = library.interpretation_mean_time;
        return {m.row(static_cast<std::size_t>(receiver)), m.cols()};
    }
    std::span<const int> sizes() const { return library.sizes; }
};

double db_to_linear(double db);

/// Draws a scenario: uniform longitudinal placement on the cell diameter (the
/// spatial Poisson process conditioned on the vehicle count), uniform lane,
/// random preference permutations, integer KB sizes and per-KB interpretation times.
Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed);

/// Builds the SINR matrix, neighbor lists and per-KB probabilities/rates from primary data.
Scenario assemble_scenario(ScenarioConfig config, std::uint64_t seed, std::vector<Vehicle> vehicles,
                           KbLibrary library);

Matrix<double> compute_sinr(std::span<const Point> positions, const ChannelConfig& channel);

std::vector<std::vector<int>> neighbor_sets(const Matrix<double>& sinr, double threshold);

}  // namespace scvn
