#include "scvn/rng.hpp"

#include <cmath>
#include <stdexcept>

#include "scvn/common.hpp"

namespace scvn {

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
}

double Rng::exponential(double rate) {
    return -std::log1p(-uniform01()) / rate;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

KbSet KbSet::from_indicator(const std::vector<int>& indicator) {
    if (indicator.size() > kMaxKbCount) throw InvalidConfig("KbSet: more than 64 KBs");
    KbSet s;
    for (std::size_t n = 0; n < indicator.size(); ++n) {
        if (indicator[n] != 0 && indicator[n] != 1) {
            throw InvalidConfig("KbSet: indicator entries must be 0 or 1");
        }
        if (indicator[n]) s.set(static_cast<int>(n));
    }
    return s;
}

std::string KbSet::to_string(int count) const {
    std::string out(static_cast<std::size_t>(count), '0');
    for (int n = 0; n < count; ++n) {
        if (contains(n)) out[static_cast<std::size_t>(n)] = '1';
    }
    return out;
}

KbSet KbSet::parse(const std::string& text) {
    if (text.size() > kMaxKbCount) throw InvalidConfig("KbSet: more than 64 KBs");
    KbSet s;
    for (std::size_t n = 0; n < text.size(); ++n) {
        if (text[n] == '1') {
            s.set(static_cast<int>(n));
        } else if (text[n] != '0') {
            throw InvalidConfig("KbSet: expected a 0/1 string, got '" + text + "'");
        }
    }
    return s;
}

}  // namespace scvn
