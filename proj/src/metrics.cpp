#include "scvn/metrics.hpp"

namespace scvn {

double pair_tsp(const PairQueueModel& forward, const PairQueueModel& backward) {
    return interpretation_throughput(forward) + interpretation_throughput(backward);
}

RunMetrics compute_metrics(const Scenario& sc, const SolveReport& report, const CheckerVerdict& verdict) {
    RunMetrics m;
    const int v = sc.vehicle_count();
    double eta_sum = 0.0;
    for (int i = 0; i < v; ++i) {
        eta_sum += preference_satisfaction(report.kbc.alpha[static_cast<std::size_t>(i)], sc.probabilities(i));
    }
    m.mean_eta = eta_sum / v;

    double latency_sum = 0.0;
    double tsp_sum = 0.0;
    for (const auto& [i, j] : report.vsp.pairs()) {
        const KbSet a = report.kbc.alpha[static_cast<std::size_t>(i)];
        const KbSet b = report.kbc.alpha[static_cast<std::size_t>(j)];
        const PairQueueModel fwd = pair_queue_model(a, b, sc.probabilities(i), sc.arrivals(i), sc.mean_times(j));
        const PairQueueModel bwd = pair_queue_model(b, a, sc.probabilities(j), sc.arrivals(j), sc.mean_times(i));
        for (const PairQueueModel* q : {&fwd, &bwd}) {
            if (!(q->lambda_eff > 0.0)) continue;
            const double d = pk_latency(q->lambda_eff, q->service.mean, q->service.variance);
            if (is_unstable(d)) {
                ++m.unstable_links;
                continue;
            }
            latency_sum += d;
            ++m.latency_links;
        }
        tsp_sum += pair_tsp(fwd, bwd);
        ++m.pairs;
    }
    m.mean_latency_s = m.latency_links ? latency_sum / m.latency_links : 0.0;
    m.mean_tsp_pps = m.pairs ? tsp_sum / m.pairs : 0.0;
    m.violation = !verdict.ok();
    return m;
}

}  // namespace scvn
