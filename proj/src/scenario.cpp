#include "scvn/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "scvn/rng.hpp"

namespace scvn {

void Geometry::validate() const {
    if (lane_count < 1) throw InvalidConfig("lane_count must be >= 1");
    if (!(lane_width > 0.0)) throw InvalidConfig("lane_width must be positive");
    if (!(cell_radius > 0.0)) throw InvalidConfig("cell_radius must be positive");
}

double Geometry::lane_center(int lane) const {
    return rsu_position.y + (lane + 0.5) * lane_width - 0.5 * lane_count * lane_width;
}

void ChannelConfig::validate() const {
    if (!(path_loss_exponent > 0.0)) throw InvalidConfig("path_loss_exponent must be positive");
    if (!(reference_distance > 0.0)) throw InvalidConfig("reference_distance must be positive");
    if (!std::isfinite(tx_power_dbm) || !std::isfinite(noise_power_dbm)) {
        throw InvalidConfig("channel powers must be finite");
    }
}

void ScenarioConfig::validate() const {
    if (vehicle_count < 2) throw InvalidConfig("vehicle_count must be >= 2");
    if (kb_count < 1 || kb_count > kMaxKbCount) throw InvalidConfig("kb_count must be in [1, 64]");
    geometry.validate();
    channel.validate();
    if (!std::isfinite(sinr_threshold_db)) throw InvalidConfig("sinr_threshold_db must be finite");
    if (capacity < 0) throw InvalidConfig("capacity must be non-negative");
    if (!(arrival_rate > 0.0)) throw InvalidConfig("arrival_rate must be positive");
    if (!(zipf_skew >= 0.0)) throw InvalidConfig("zipf_skew must be non-negative");
    if (kb_size_min < 1 || kb_size_max < kb_size_min) throw InvalidConfig("invalid KB size range");
    if (!(interp_time_min > 0.0) || interp_time_max < interp_time_min) {
        throw InvalidConfig("invalid interpretation time range");
    }
    if (eta_min < 0.0 || eta_min > 1.0) throw InvalidConfig("eta_min must be in [0, 1]");
    if (theta_max < 0.0 || theta_max > 1.0) throw InvalidConfig("theta_max must be in [0, 1]");
}

bool NeighborGraph::adjacent(int i, int j) const {
    const auto& n = neighbors[static_cast<std::size_t>(i)];
    return std::binary_search(n.begin(), n.end(), j);
}

int NeighborGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& n : neighbors) total += n.size();
    return static_cast<int>(total / 2);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

Matrix<double> compute_sinr(std::span<const Point> positions, const ChannelConfig& channel) {
    channel.validate();
    const std::size_t v = positions.size();
    const double snr_ref = db_to_linear(channel.tx_power_dbm - channel.noise_power_dbm);
    Matrix<double> sinr(v, v, 0.0);
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = i + 1; j < v; ++j) {
            const double d = std::max(distance(positions[i], positions[j]), channel.reference_distance);
            const double g = snr_ref * std::pow(channel.reference_distance / d, channel.path_loss_exponent);
            sinr(i, j) = g;
            sinr(j, i) = g;
        }
    }
    return sinr;
}

std::vector<std::vector<int>> neighbor_sets(const Matrix<double>& sinr, double threshold) {
    if (!(threshold > 0.0)) throw InvalidConfig("SINR threshold must be positive");
    const std::size_t v = sinr.rows();
    std::vector<std::vector<int>> out(v);
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            if (j != i && sinr(i, j) >= threshold) out[i].push_back(static_cast<int>(j));
        }
    }
    return out;
}

Scenario assemble_scenario(ScenarioConfig config, std::uint64_t seed, std::vector<Vehicle> vehicles,
                           KbLibrary library) {
    config.vehicle_count = static_cast<int>(vehicles.size());
    config.kb_count = library.count();
    config.validate();
    library.validate();
    const auto v = vehicles.size();
    const auto n = static_cast<std::size_t>(library.count());
    if (library.interpretation_mean_time.rows() != v) {
        throw InvalidConfig("interpretation time matrix must have one row per vehicle");
    }

    Scenario sc;
    sc.config = config;
    sc.seed = seed;
    sc.preference = Matrix<double>(v, n);
    sc.kb_arrival = Matrix<double>(v, n);
    std::vector<Point> positions;
    positions.reserve(v);
    for (std::size_t i = 0; i < v; ++i) {
        const Vehicle& veh = vehicles[i];
        if (veh.id != static_cast<int>(i)) throw InvalidConfig("vehicle ids must be 0..V-1 in order");
        if (veh.capacity < 0) throw InvalidConfig("vehicle capacity must be non-negative");
        if (veh.preference_ranks.size() != n) throw InvalidConfig("rank vector length must equal kb_count");
        const auto p = zipf_popularity(veh.preference_ranks, veh.zipf_skew);
        const auto rates = per_kb_arrival(veh.total_arrival_rate, p);
        std::copy(p.begin(), p.end(), sc.preference.row(i));
        std::copy(rates.begin(), rates.end(), sc.kb_arrival.row(i));
        positions.push_back(veh.position);
    }
    sc.graph.sinr = compute_sinr(positions, config.channel);
    sc.graph.sinr_threshold = db_to_linear(config.sinr_threshold_db);
    sc.graph.neighbors = neighbor_sets(sc.graph.sinr, sc.graph.sinr_threshold);
    sc.vehicles = std::move(vehicles);
    sc.library = std::move(library);
    return sc;
}

Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed) {
    if (config.vehicle_count <= 0) throw InvalidConfig("vehicle_count must be positive");
    config.validate();
    Rng rng(seed);
    const int v = config.vehicle_count;
    const int n = config.kb_count;
    const Geometry& geo = config.geometry;

    std::vector<Vehicle> vehicles(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) {
        Vehicle& veh = vehicles[static_cast<std::size_t>(i)];
        veh.id = i;
        const double x = rng.uniform(-geo.cell_radius, geo.cell_radius);
        veh.lane = static_cast<int>(rng.uniform_int(0, geo.lane_count - 1));
        veh.position = {geo.rsu_position.x + x, geo.lane_center(veh.lane)};
        veh.capacity = config.capacity;
        veh.total_arrival_rate = config.arrival_rate;
        veh.zipf_skew = config.zipf_skew;
    }
    for (auto& veh : vehicles) {
        veh.preference_ranks.resize(static_cast<std::size_t>(n));
        std::iota(veh.preference_ranks.begin(), veh.preference_ranks.end(), 1);
        rng.shuffle(veh.preference_ranks);
    }

    KbLibrary lib;
    lib.sizes.resize(static_cast<std::size_t>(n));
    for (auto& s : lib.sizes) s = static_cast<int>(rng.uniform_int(config.kb_size_min, config.kb_size_max));
    // Interpretation time depends on the KB only; every receiver shares the row.
    std::vector<double> per_kb(static_cast<std::size_t>(n));
    for (auto& t : per_kb) t = rng.uniform(config.interp_time_min, config.interp_time_max);
    lib.interpretation_mean_time = Matrix<double>(static_cast<std::size_t>(v), static_cast<std::size_t>(n));
    for (int i = 0; i < v; ++i) {
        std::copy(per_kb.begin(), per_kb.end(), lib.interpretation_mean_time.row(static_cast<std::size_t>(i)));
    }
    return assemble_scenario(config, seed, std::move(vehicles), std::move(lib));
}

}  // namespace scvn
