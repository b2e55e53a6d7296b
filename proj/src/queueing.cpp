#include "scvn/queueing.hpp"

#include "scvn/knowledge.hpp"

namespace scvn {

std::vector<double> epsilon_ratios(KbSet alpha_i, KbSet alpha_j, std::span<const double> probabilities_i) {
    const KbSet matched = alpha_i & alpha_j;
    double denom = 0.0;
    matched.for_each([&](int n) { denom += probabilities_i[static_cast<std::size_t>(n)]; });
    if (matched.empty() || !(denom > 0.0)) {
        throw NoCommonKnowledge("no jointly constructed KB between sender and receiver");
    }
    std::vector<double> eps(probabilities_i.size());
    for (std::size_t n = 0; n < eps.size(); ++n) eps[n] = probabilities_i[n] / denom;
    return eps;
}

ServiceMoments service_moments(KbSet alpha_i, KbSet alpha_j, std::span<const double> epsilon,
                               std::span<const double> mean_times) {
    ServiceMoments m;
    (alpha_i & alpha_j).for_each([&](int n) {
        const double term = epsilon[static_cast<std::size_t>(n)] * mean_times[static_cast<std::size_t>(n)];
        m.mean += term;
        m.variance += term * term;
    });
    return m;
}

double pk_latency(double lambda_eff, double mean_service, double service_variance) {
    if (lambda_eff < 0.0) throw std::invalid_argument("pk_latency: negative arrival rate");
    if (lambda_eff == 0.0) return 0.0;
    const double rho = lambda_eff * mean_service;
    if (!(rho < 1.0)) return kInf;
    return lambda_eff * (mean_service * mean_service + service_variance) / (2.0 * (1.0 - rho));
}

PairQueueModel pair_queue_model(KbSet alpha_i, KbSet alpha_j, std::span<const double> probabilities_i,
                                std::span<const double> rates_i, std::span<const double> mean_times_j) {
    PairQueueModel q;
    q.matched = alpha_i & alpha_j;
    q.lambda_eff = effective_arrival(alpha_i, alpha_j, rates_i);
    if (q.matched.empty()) return q;
    q.epsilon = epsilon_ratios(alpha_i, alpha_j, probabilities_i);
    q.service = service_moments(alpha_i, alpha_j, q.epsilon, mean_times_j);
    q.utilization = q.lambda_eff * q.service.mean;
    return q;
}

double interpretation_throughput(const PairQueueModel& model) {
    if (model.matched.empty() || !(model.service.mean > 0.0)) return 0.0;
    return 1.0 / model.service.mean;
}

}  // namespace scvn
