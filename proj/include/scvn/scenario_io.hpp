#pragma once

// Human-readable `key = value` files for configs and instances.
//
// Scenario keys (all optional, defaults from ScenarioConfig):
//   vehicle_count kb_count lane_count lane_width cell_radius rsu_x rsu_y
//   tx_power_dbm noise_power_dbm path_loss_exponent reference_distance
//   sinr_threshold_db capacity arrival_rate zipf_skew kb_size_min kb_size_max
//   interp_time_min interp_time_max eta_min theta_max
//
// Instance files add `seed` and, when the realized data is present:
//   kb.size          = s_1 ... s_N
//   kb.interp_time.i = t_1 ... t_N          (receiver i, seconds/packet)
//   vehicle.i        = x y lane capacity arrival_rate zipf_skew r_1 ... r_N
// An instance file holding only config keys and a seed is regenerated.

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "scvn/scenario.hpp"

namespace scvn {

/// Parsed `key = value` lines. Consumers take keys; leftovers are reported as unknown.
class KeyValues {
public:
    static KeyValues parse(const std::string& text);
    static KeyValues load(const std::filesystem::path& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::string take_string(const std::string& key, const std::string& fallback);
    int take_int(const std::string& key, int fallback);
    std::uint64_t take_u64(const std::string& key, std::uint64_t fallback);
    double take_double(const std::string& key, double fallback);
    std::vector<std::string> take_list(const std::string& key);
    std::vector<double> take_doubles(const std::string& key);
    std::vector<int> take_ints(const std::string& key);

    /// Keys starting with `prefix` that have not been taken yet.
    std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

    /// Throws InvalidConfig naming every key nobody consumed.
    void require_all_consumed() const;

private:
    std::map<std::string, std::string> values_;
    std::set<std::string> consumed_;
};

void read_scenario_config(KeyValues& kv, ScenarioConfig& config);
std::string format_scenario_config(const ScenarioConfig& config);

std::string serialize_scenario(const Scenario& scenario);
Scenario parse_scenario(const std::string& text);
/// Takes the scenario keys from `kv` and leaves any other key untouched.
Scenario read_scenario(KeyValues& kv);

void save_scenario(const Scenario& scenario, const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace scvn
