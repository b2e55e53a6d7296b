#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace scvn {

/// Portable random source: mt19937_64 bits with hand-rolled transforms so that
/// streams are identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform01();
    double uniform(double lo, double hi);
    /// Uniform integer on [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    /// Exponential with the given rate.
    double exponential(double rate);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t k = v.size(); k > 1; --k) {
            auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(k) - 1));
            std::swap(v[k - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace scvn
