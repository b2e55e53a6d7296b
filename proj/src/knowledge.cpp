#include "scvn/knowledge.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace scvn {

void KbLibrary::validate() const {
    if (sizes.empty()) throw InvalidConfig("KB library is empty");
    if (count() > kMaxKbCount) throw InvalidConfig("KB library exceeds 64 entries");
    for (int s : sizes) {
        if (s <= 0) throw InvalidConfig("KB sizes must be positive");
    }
    if (interpretation_mean_time.cols() != sizes.size()) {
        throw InvalidConfig("interpretation time matrix has the wrong number of columns");
    }
    for (std::size_t r = 0; r < interpretation_mean_time.rows(); ++r) {
        for (std::size_t c = 0; c < interpretation_mean_time.cols(); ++c) {
            if (!(interpretation_mean_time(r, c) > 0.0)) {
                throw InvalidConfig("interpretation mean times must be positive");
            }
        }
    }
}

std::vector<double> zipf_popularity(std::span<const int> ranks, double skew) {
    if (skew < 0.0) throw InvalidConfig("Zipf skew must be non-negative");
    const int n = static_cast<int>(ranks.size());
    if (n == 0) throw InvalidConfig("rank vector is empty");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int r : ranks) {
        if (r < 1 || r > n || seen[static_cast<std::size_t>(r - 1)]) {
            throw InvalidConfig("ranks must be a permutation of 1..N");
        }
        seen[static_cast<std::size_t>(r - 1)] = true;
    }
    // Summed smallest-first for accuracy.
    double norm = 0.0;
    for (int e = n; e >= 1; --e) norm += std::pow(static_cast<double>(e), -skew);
    std::vector<double> p(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        p[static_cast<std::size_t>(k)] = std::pow(static_cast<double>(ranks[static_cast<std::size_t>(k)]), -skew) / norm;
    }
    return p;
}

double preference_satisfaction(KbSet alpha, std::span<const double> probabilities) {
    double eta = 0.0;
    alpha.for_each([&](int n) { eta += probabilities[static_cast<std::size_t>(n)]; });
    return eta;
}

std::vector<double> per_kb_arrival(double total_rate, std::span<const double> probabilities) {
    if (!(total_rate > 0.0)) throw InvalidConfig("total arrival rate must be positive");
    std::vector<double> out(probabilities.size());
    for (std::size_t n = 0; n < probabilities.size(); ++n) out[n] = total_rate * probabilities[n];
    return out;
}

double effective_arrival(KbSet alpha_i, KbSet alpha_j, std::span<const double> per_kb_rate_i) {
    double rate = 0.0;
    (alpha_i & alpha_j).for_each([&](int n) { rate += per_kb_rate_i[static_cast<std::size_t>(n)]; });
    return rate;
}

double mismatch_degree(KbSet alpha_i, KbSet alpha_j, std::span<const double> per_kb_rate_i) {
    double sent = 0.0;
    double missed = 0.0;
    alpha_i.for_each([&](int n) {
        const double r = per_kb_rate_i[static_cast<std::size_t>(n)];
        sent += r;
        if (!alpha_j.contains(n)) missed += r;
    });
    if (!(sent > 0.0)) {
        throw UndefinedMismatch("mismatch degree undefined: sender constructs no KB");
    }
    return missed / sent;
}

int storage_used(KbSet alpha, std::span<const int> sizes) {
    int used = 0;
    alpha.for_each([&](int n) { used += sizes[static_cast<std::size_t>(n)]; });
    return used;
}

std::vector<int> preference_order(std::span<const double> probabilities) {
    std::vector<int> order(probabilities.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return probabilities[static_cast<std::size_t>(a)] > probabilities[static_cast<std::size_t>(b)];
    });
    return order;
}

KbSet preference_prefix(std::span<const double> probabilities, std::span<const int> sizes,
                        int capacity, double eta_min, bool* reached) {
    KbSet alpha;
    double eta = 0.0;
    int used = 0;
    for (int n : preference_order(probabilities)) {
        if (eta >= eta_min - kFeasTol) break;
        const int s = sizes[static_cast<std::size_t>(n)];
        if (used + s > capacity) continue;
        alpha.set(n);
        used += s;
        eta += probabilities[static_cast<std::size_t>(n)];
    }
    if (reached) *reached = eta >= eta_min - kFeasTol;
    return alpha;
}

}  // namespace scvn
