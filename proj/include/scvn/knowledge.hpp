#pragma once

#include <span>
#include <vector>

#include "scvn/common.hpp"

namespace scvn {

/// The N knowledge bases: integer storage sizes and per-receiver mean interpretation times.
struct KbLibrary {
    std::vector<int> sizes;                  // s_n, storage units
    Matrix<double> interpretation_mean_time;  // V x N, seconds/packet (1/mu)

    int count() const { return static_cast<int>(sizes.size()); }
    void validate() const;
};

/// Binary construction matrix: one KbSet per vehicle.
struct KbcPolicy {
    int kb_count = 0;
    std::vector<KbSet> alpha;

    friend bool operator==(const KbcPolicy&, const KbcPolicy&) = default;
};

/// Zipf request probabilities from a rank permutation (ranks are 1-based):
/// p_n = r_n^(-skew) / sum_{e=1..N} e^(-skew).
std::vector<double> zipf_popularity(std::span<const int> ranks, double skew);

/// Preference satisfaction: probability mass covered by the constructed set.
double preference_satisfaction(KbSet alpha, std::span<const double> probabilities);

/// Split of a vehicle's total arrival rate across KBs.
std::vector<double> per_kb_arrival(double total_rate, std::span<const double> probabilities);

/// Rate of packets from i that j can interpret (jointly constructed KBs only).
double effective_arrival(KbSet alpha_i, KbSet alpha_j, std::span<const double> per_kb_rate_i);

/// Arrival-weighted share of i's constructed traffic that j cannot interpret.
/// Throws UndefinedMismatch when i constructs nothing with positive rate.
double mismatch_degree(KbSet alpha_i, KbSet alpha_j, std::span<const double> per_kb_rate_i);

int storage_used(KbSet alpha, std::span<const int> sizes);

inline bool fits(KbSet alpha, std::span<const int> sizes, int capacity) {
    return storage_used(alpha, sizes) <= capacity;
}

/// KB indices sorted by descending probability, lower index first on ties.
std::vector<int> preference_order(std::span<const double> probabilities);

/// Walks the preference order adding KBs that fit until satisfaction reaches `eta_min`.
/// Returns the resulting set; `reached` reports whether the threshold was met.
KbSet preference_prefix(std::span<const double> probabilities, std::span<const int> sizes,
                        int capacity, double eta_min, bool* reached = nullptr);

}  // namespace scvn
