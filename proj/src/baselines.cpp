#include "scvn/baselines.hpp"

#include <cmath>

#include "scvn/rng.hpp"

namespace scvn {

PreferenceFirstResult preference_first_kbc(const Scenario& sc, std::uint64_t seed) {
    const int v = sc.vehicle_count();
    const int n = sc.kb_count();
    PreferenceFirstResult out;
    out.kbc.kb_count = n;
    out.kbc.alpha.resize(static_cast<std::size_t>(v));
    Rng rng(seed);
    for (int i = 0; i < v; ++i) {
        const int cap = sc.vehicles[static_cast<std::size_t>(i)].capacity;
        bool reached = false;
        KbSet a = preference_prefix(sc.probabilities(i), sc.sizes(), cap, sc.eta_min(), &reached);
        if (!reached) out.below_threshold.push_back(i);
        int used = storage_used(a, sc.sizes());
        std::vector<int> candidates;
        while (true) {
            candidates.clear();
            for (int k = 0; k < n; ++k) {
                if (!a.contains(k) && used + sc.sizes()[static_cast<std::size_t>(k)] <= cap) candidates.push_back(k);
            }
            if (candidates.empty()) break;
            const int pick = candidates[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(candidates.size()) - 1))];
            a.set(pick);
            used += sc.sizes()[static_cast<std::size_t>(pick)];
        }
        out.kbc.alpha[static_cast<std::size_t>(i)] = a;
    }
    return out;
}

VspAssignment dfp_pair(const Scenario& sc) {
    const int v = sc.vehicle_count();
    VspAssignment vsp(v);
    for (int i = 0; i < v; ++i) {
        if (vsp.paired(i)) continue;
        int pick = -1;
        double best = kInf;
        for (int j : sc.graph.neighbors[static_cast<std::size_t>(i)]) {
            if (vsp.paired(j)) continue;
            const double d = distance(sc.vehicles[static_cast<std::size_t>(i)].position,
                                      sc.vehicles[static_cast<std::size_t>(j)].position);
            if (d < best) {
                best = d;
                pick = j;
            }
        }
        if (pick >= 0) vsp.pair(i, pick);
    }
    return vsp;
}

double kb_matching_degree(const Scenario& sc, const KbcPolicy& kbc, int i, int j) {
    try {
        return 1.0 - mismatch_degree(kbc.alpha[static_cast<std::size_t>(i)], kbc.alpha[static_cast<std::size_t>(j)],
                                     sc.arrivals(i));
    } catch (const UndefinedMismatch&) {
        return 0.0;
    }
}

VspAssignment kfp_pair(const Scenario& sc, const KbcPolicy& kbc) {
    constexpr double kScoreEps = 1e-12;
    const int v = sc.vehicle_count();
    VspAssignment vsp(v);
    for (int i = 0; i < v; ++i) {
        if (vsp.paired(i)) continue;
        int pick = -1;
        double best_score = -kInf;
        double best_dist = kInf;
        for (int j : sc.graph.neighbors[static_cast<std::size_t>(i)]) {
            if (vsp.paired(j)) continue;
            const double s = kb_matching_degree(sc, kbc, i, j);
            const double d = distance(sc.vehicles[static_cast<std::size_t>(i)].position,
                                      sc.vehicles[static_cast<std::size_t>(j)].position);
            const bool higher = s > best_score + kScoreEps;
            const bool tie = std::abs(s - best_score) <= kScoreEps;
            if (higher || (tie && d < best_dist)) {
                best_score = s;
                best_dist = d;
                pick = j;
            }
        }
        if (pick >= 0) vsp.pair(i, pick);
    }
    return vsp;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::S4: return "s4";
        case Method::DFP: return "dfp";
        case Method::KFP: return "kfp";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    if (name == "s4") return Method::S4;
    if (name == "dfp") return Method::DFP;
    if (name == "kfp") return Method::KFP;
    throw InvalidConfig("unknown method '" + name + "' (expected s4, dfp or kfp)");
}

SolveReport run_baseline(const Scenario& sc, Method method, std::uint64_t seed) {
    if (method == Method::S4) throw std::invalid_argument("run_baseline: s4 is not a baseline");
    SolveReport rep;
    rep.method = method_name(method);
    rep.kbc = preference_first_kbc(sc, seed).kbc;
    rep.vsp = method == Method::DFP ? dfp_pair(sc) : kfp_pair(sc, rep.kbc);
    rep.evaluation = evaluate_solution(sc, rep.kbc, rep.vsp);
    return rep;
}

}  // namespace scvn
