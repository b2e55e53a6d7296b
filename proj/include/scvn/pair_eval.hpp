#pragma once

#include <span>

#include "scvn/scenario.hpp"

namespace scvn {

/// Queue metrics of one direction of a pair.
struct DirectionMetrics {
    bool has_common = false;
    double lambda_eff = 0.0;
    double mean_service = 0.0;
    double variance = 0.0;
    double delta = 0.0;  // PK waiting time, +inf when unstable or nothing is matched
    double theta = 1.0;  // mismatch degree; 1 when the sender's constructed set is empty
};

/// Evaluates the per-pair cost
///   omega = (delta_{i->j} + tau_i theta_{i->j}) + (delta_{j->i} + tau_j theta_{j->i})
/// together with the storage and satisfaction constraints of both vehicles.
/// Holds views into the scenario; the scenario must outlive it.
class PairEvaluator {
public:
    PairEvaluator(const Scenario& scenario, int i, int j, double tau_i, double tau_j);

    int first() const { return i_; }
    int second() const { return j_; }
    int kb_count() const { return kb_count_; }

    /// side 0 is vehicle i (sender of the first direction), side 1 is j.
    DirectionMetrics direction(int sender_side, KbSet sender, KbSet receiver) const;

    /// +inf when either direction has no common KB or is unstable.
    double omega(KbSet alpha_i, KbSet alpha_j) const;

    bool vehicle_feasible(int side, KbSet alpha) const;
    bool feasible(KbSet alpha_i, KbSet alpha_j) const {
        return vehicle_feasible(0, alpha_i) && vehicle_feasible(1, alpha_j);
    }

    /// Normalized storage excess plus satisfaction deficit of both vehicles; 0 iff both are feasible.
    double violation(KbSet alpha_i, KbSet alpha_j) const;

private:
    struct Side {
        std::span<const double> probabilities;
        std::span<const double> rates;
        std::span<const double> mean_times;  // as receiver
        int capacity = 0;
        double tau = 0.0;
    };

    double side_violation(const Side& s, KbSet alpha) const;

    int i_, j_;
    int kb_count_;
    std::span<const int> sizes_;
    double eta_min_;
    Side sides_[2];
};

}  // namespace scvn
