#include "scvn/pair_eval.hpp"

#include <algorithm>

#include "scvn/queueing.hpp"

namespace scvn {

PairEvaluator::PairEvaluator(const Scenario& sc, int i, int j, double tau_i, double tau_j)
    : i_(i), j_(j), kb_count_(sc.kb_count()), sizes_(sc.sizes()), eta_min_(sc.eta_min()) {
    sides_[0] = {sc.probabilities(i), sc.arrivals(i), sc.mean_times(i), sc.vehicles[static_cast<std::size_t>(i)].capacity,
                 tau_i};
    sides_[1] = {sc.probabilities(j), sc.arrivals(j), sc.mean_times(j), sc.vehicles[static_cast<std::size_t>(j)].capacity,
                 tau_j};
}

DirectionMetrics PairEvaluator::direction(int sender_side, KbSet sender, KbSet receiver) const {
    const Side& tx = sides_[sender_side];
    const Side& rx = sides_[1 - sender_side];
    DirectionMetrics d;
    double sent_p = 0.0;
    double missed_p = 0.0;
    double common_p = 0.0;
    sender.for_each([&](int n) {
        const double p = tx.probabilities[static_cast<std::size_t>(n)];
        sent_p += p;
        if (receiver.contains(n)) {
            common_p += p;
            d.lambda_eff += tx.rates[static_cast<std::size_t>(n)];
        } else {
            missed_p += p;
        }
    });
    d.theta = sent_p > 0.0 ? missed_p / sent_p : 1.0;
    const KbSet common = sender & receiver;
    d.has_common = !common.empty() && common_p > 0.0;
    if (!d.has_common) {
        d.delta = kInf;
        return d;
    }
    common.for_each([&](int n) {
        const double term = tx.probabilities[static_cast<std::size_t>(n)] / common_p *
                            rx.mean_times[static_cast<std::size_t>(n)];
        d.mean_service += term;
        d.variance += term * term;
    });
    d.delta = pk_latency(d.lambda_eff, d.mean_service, d.variance);
    return d;
}

double PairEvaluator::omega(KbSet alpha_i, KbSet alpha_j) const {
    const DirectionMetrics a = direction(0, alpha_i, alpha_j);
    if (!a.has_common || a.delta == kInf) return kInf;
    const DirectionMetrics b = direction(1, alpha_j, alpha_i);
    if (b.delta == kInf) return kInf;
    return (a.delta + sides_[0].tau * a.theta) + (b.delta + sides_[1].tau * b.theta);
}

bool PairEvaluator::vehicle_feasible(int side, KbSet alpha) const {
    const Side& s = sides_[side];
    if (storage_used(alpha, sizes_) > s.capacity) return false;
    return preference_satisfaction(alpha, s.probabilities) >= eta_min_ - kFeasTol;
}

double PairEvaluator::side_violation(const Side& s, KbSet alpha) const {
    double v = 0.0;
    const int excess = storage_used(alpha, sizes_) - s.capacity;
    if (excess > 0) v += static_cast<double>(excess) / std::max(1, s.capacity);
    const double deficit = eta_min_ - preference_satisfaction(alpha, s.probabilities);
    if (deficit > kFeasTol) v += deficit / std::max(eta_min_, 1e-12);
    return v;
}

double PairEvaluator::violation(KbSet alpha_i, KbSet alpha_j) const {
    return side_violation(sides_[0], alpha_i) + side_violation(sides_[1], alpha_j);
}

}  // namespace scvn
