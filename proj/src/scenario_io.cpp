#include "scvn/scenario_io.hpp"

#include <fmt/format.h>

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace scvn {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
        throw InvalidConfig(fmt::format("key '{}': '{}' is not a number", key, text));
    }
    return v;
}

long long parse_integer(const std::string& key, const std::string& text) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(text.c_str(), &end, 10);
    if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
        throw InvalidConfig(fmt::format("key '{}': '{}' is not an integer", key, text));
    }
    return v;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string join_doubles(std::span<const double> v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ' ';
        out += fmt::format("{:.17g}", v[k]);
    }
    return out;
}

}  // namespace

KeyValues KeyValues::parse(const std::string& text) {
    KeyValues kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidConfig(fmt::format("line {}: expected 'key = value'", lineno));
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw InvalidConfig(fmt::format("line {}: empty key", lineno));
        if (!kv.values_.emplace(key, value).second) {
            throw InvalidConfig(fmt::format("line {}: duplicate key '{}'", lineno, key));
        }
    }
    return kv;
}

KeyValues KeyValues::load(const std::filesystem::path& path) { return parse(read_text_file(path)); }

std::string KeyValues::take_string(const std::string& key, const std::string& fallback) {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    consumed_.insert(key);
    return it->second;
}

int KeyValues::take_int(const std::string& key, int fallback) {
    if (!has(key)) return fallback;
    return static_cast<int>(parse_integer(key, take_string(key, {})));
}

std::uint64_t KeyValues::take_u64(const std::string& key, std::uint64_t fallback) {
    if (!has(key)) return fallback;
    const std::string text = take_string(key, {});
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
    if (text.empty() || text[0] == '-' || end != text.c_str() + text.size() || errno == ERANGE) {
        throw InvalidConfig(fmt::format("key '{}': '{}' is not an unsigned integer", key, text));
    }
    return v;
}

double KeyValues::take_double(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    return parse_double(key, take_string(key, {}));
}

std::vector<std::string> KeyValues::take_list(const std::string& key) {
    if (!has(key)) return {};
    return split_ws(take_string(key, {}));
}

std::vector<double> KeyValues::take_doubles(const std::string& key) {
    std::vector<double> out;
    for (const auto& t : take_list(key)) out.push_back(parse_double(key, t));
    return out;
}

std::vector<int> KeyValues::take_ints(const std::string& key) {
    std::vector<int> out;
    for (const auto& t : take_list(key)) out.push_back(static_cast<int>(parse_integer(key, t)));
    return out;
}

std::vector<std::string> KeyValues::keys_with_prefix(const std::string& prefix) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : values_) {
        if (k.rfind(prefix, 0) == 0 && !consumed_.count(k)) out.push_back(k);
    }
    return out;
}

void KeyValues::require_all_consumed() const {
    std::string unknown;
    for (const auto& [k, v] : values_) {
        if (!consumed_.count(k)) unknown += (unknown.empty() ? "" : ", ") + k;
    }
    if (!unknown.empty()) throw InvalidConfig("unknown keys: " + unknown);
}

void read_scenario_config(KeyValues& kv, ScenarioConfig& c) {
    c.vehicle_count = kv.take_int("vehicle_count", c.vehicle_count);
    c.kb_count = kv.take_int("kb_count", c.kb_count);
    c.geometry.lane_count = kv.take_int("lane_count", c.geometry.lane_count);
    c.geometry.lane_width = kv.take_double("lane_width", c.geometry.lane_width);
    c.geometry.cell_radius = kv.take_double("cell_radius", c.geometry.cell_radius);
    c.geometry.rsu_position.x = kv.take_double("rsu_x", c.geometry.rsu_position.x);
    c.geometry.rsu_position.y = kv.take_double("rsu_y", c.geometry.rsu_position.y);
    c.channel.tx_power_dbm = kv.take_double("tx_power_dbm", c.channel.tx_power_dbm);
    c.channel.noise_power_dbm = kv.take_double("noise_power_dbm", c.channel.noise_power_dbm);
    c.channel.path_loss_exponent = kv.take_double("path_loss_exponent", c.channel.path_loss_exponent);
    c.channel.reference_distance = kv.take_double("reference_distance", c.channel.reference_distance);
    c.sinr_threshold_db = kv.take_double("sinr_threshold_db", c.sinr_threshold_db);
    c.capacity = kv.take_int("capacity", c.capacity);
    c.arrival_rate = kv.take_double("arrival_rate", c.arrival_rate);
    c.zipf_skew = kv.take_double("zipf_skew", c.zipf_skew);
    c.kb_size_min = kv.take_int("kb_size_min", c.kb_size_min);
    c.kb_size_max = kv.take_int("kb_size_max", c.kb_size_max);
    c.interp_time_min = kv.take_double("interp_time_min", c.interp_time_min);
    c.interp_time_max = kv.take_double("interp_time_max", c.interp_time_max);
    c.eta_min = kv.take_double("eta_min", c.eta_min);
    c.theta_max = kv.take_double("theta_max", c.theta_max);
}

std::string format_scenario_config(const ScenarioConfig& c) {
    std::string out;
    auto put = [&](const char* key, auto value) { out += fmt::format("{} = {}\n", key, value); };
    auto putd = [&](const char* key, double value) { out += fmt::format("{} = {:.17g}\n", key, value); };
    put("vehicle_count", c.vehicle_count);
    put("kb_count", c.kb_count);
    put("lane_count", c.geometry.lane_count);
    putd("lane_width", c.geometry.lane_width);
    putd("cell_radius", c.geometry.cell_radius);
    putd("rsu_x", c.geometry.rsu_position.x);
    putd("rsu_y", c.geometry.rsu_position.y);
    putd("tx_power_dbm", c.channel.tx_power_dbm);
    putd("noise_power_dbm", c.channel.noise_power_dbm);
    putd("path_loss_exponent", c.channel.path_loss_exponent);
    putd("reference_distance", c.channel.reference_distance);
    putd("sinr_threshold_db", c.sinr_threshold_db);
    put("capacity", c.capacity);
    putd("arrival_rate", c.arrival_rate);
    putd("zipf_skew", c.zipf_skew);
    put("kb_size_min", c.kb_size_min);
    put("kb_size_max", c.kb_size_max);
    putd("interp_time_min", c.interp_time_min);
    putd("interp_time_max", c.interp_time_max);
    putd("eta_min", c.eta_min);
    putd("theta_max", c.theta_max);
    return out;
}

std::string serialize_scenario(const Scenario& sc) {
    std::string out = "# scvn instance\n";
    out += format_scenario_config(sc.config);
    out += fmt::format("seed = {}\n", sc.seed);
    out += "kb.size =";
    for (int s : sc.library.sizes) out += fmt::format(" {}", s);
    out += '\n';
    const auto& t = sc.library.interpretation_mean_time;
    for (std::size_t i = 0; i < t.rows(); ++i) {
        out += fmt::format("kb.interp_time.{} = {}\n", i, join_doubles({t.row(i), t.cols()}));
    }
    for (const Vehicle& v : sc.vehicles) {
        out += fmt::format("vehicle.{} = {:.17g} {:.17g} {} {} {:.17g} {:.17g}", v.id, v.position.x, v.position.y,
                           v.lane, v.capacity, v.total_arrival_rate, v.zipf_skew);
        for (int r : v.preference_ranks) out += fmt::format(" {}", r);
        out += '\n';
    }
    return out;
}

Scenario parse_scenario(const std::string& text) {
    KeyValues kv = KeyValues::parse(text);
    Scenario sc = read_scenario(kv);
    kv.require_all_consumed();
    return sc;
}

Scenario read_scenario(KeyValues& kv) {
    ScenarioConfig config;
    read_scenario_config(kv, config);
    const std::uint64_t seed = kv.take_u64("seed", 0);
    if (!kv.has("vehicle.0")) {
        return generate_scenario(config, seed);
    }

    const int v = config.vehicle_count;
    const int n = config.kb_count;
    if (v < 2 || n < 1 || n > kMaxKbCount) throw InvalidConfig("instance has invalid dimensions");
    KbLibrary lib;
    lib.sizes = kv.take_ints("kb.size");
    if (static_cast<int>(lib.sizes.size()) != n) throw InvalidConfig("kb.size must list kb_count sizes");
    lib.interpretation_mean_time = Matrix<double>(static_cast<std::size_t>(v), static_cast<std::size_t>(n));
    std::vector<Vehicle> vehicles(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) {
        const std::string tkey = fmt::format("kb.interp_time.{}", i);
        const auto times = kv.take_doubles(tkey);
        if (static_cast<int>(times.size()) != n) throw InvalidConfig(tkey + " must list kb_count times");
        std::copy(times.begin(), times.end(), lib.interpretation_mean_time.row(static_cast<std::size_t>(i)));

        const std::string vkey = fmt::format("vehicle.{}", i);
        const auto fields = kv.take_doubles(vkey);
        if (static_cast<int>(fields.size()) != 6 + n) {
            throw InvalidConfig(vkey + " must hold x y lane capacity arrival_rate zipf_skew and N ranks");
        }
        Vehicle& veh = vehicles[static_cast<std::size_t>(i)];
        veh.id = i;
        veh.position = {fields[0], fields[1]};
        veh.lane = static_cast<int>(fields[2]);
        veh.capacity = static_cast<int>(fields[3]);
        veh.total_arrival_rate = fields[4];
        veh.zipf_skew = fields[5];
        for (int k = 0; k < n; ++k) veh.preference_ranks.push_back(static_cast<int>(fields[6 + static_cast<std::size_t>(k)]));
    }
    return assemble_scenario(config, seed, std::move(vehicles), std::move(lib));
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
    write_text_file(path, serialize_scenario(scenario));
}

Scenario load_scenario(const std::filesystem::path& path) { return parse_scenario(read_text_file(path)); }

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidConfig("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace scvn
