#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library's sorted sweeps: every operating point is
// recomputed by counting scores directly, at thresholds placed halfway
// between consecutive distinct pooled scores.

#include "sasv/trialdata.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace sasv::oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline std::vector<double> pooled(std::initializer_list<const std::vector<double>*> lists) {
    std::vector<double> all;
    for (const auto* l : lists) all.insert(all.end(), l->begin(), l->end());
    return all;
}

/// -inf, one threshold below the smallest finite score, midpoints between
/// consecutive distinct finite scores, and +inf.
inline std::vector<double> midpoint_thresholds(std::vector<double> scores) {
    std::vector<double> finite;
    for (double s : scores) {
        if (std::isfinite(s)) finite.push_back(s);
    }
    std::sort(finite.begin(), finite.end());
    finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
    std::vector<double> t{-kInf};
    if (!finite.empty()) t.push_back(finite.front() - 1.0);
    for (std::size_t i = 1; i < finite.size(); ++i) t.push_back(finite[i - 1] + (finite[i] - finite[i - 1]) / 2.0);
    t.push_back(kInf);
    return t;
}

inline double miss_rate(const std::vector<double>& xs, double t) {
    if (xs.empty()) return 0.0;
    std::uint64_t n = 0;
    for (double x : xs) n += x < t ? 1 : 0;
    return static_cast<double>(n) / static_cast<double>(xs.size());
}

inline double fa_rate(const std::vector<double>& xs, double t) {
    if (xs.empty()) return 0.0;
    std::uint64_t n = 0;
    for (double x : xs) n += x >= t ? 1 : 0;
    return static_cast<double>(n) / static_cast<double>(xs.size());
}

inline double min_adcf(const CostModel& m, const ScoreSet& s) {
    const double w_miss = m.c_miss * m.pi_tar;
    const double w_non = m.c_fa_non * m.pi_non;
    const double w_spf = m.c_fa_spf * m.pi_spf;
    const double def = std::min(w_miss, w_miss * 0.0 + w_non * 1.0 + w_spf * 1.0);
    double best = kInf;
    for (double t : midpoint_thresholds(pooled({&s.tar(), &s.non(), &s.spf()}))) {
        const double cost = w_miss * miss_rate(s.tar(), t) + w_non * fa_rate(s.non(), t) + w_spf * fa_rate(s.spf(), t);
        best = std::min(best, cost / def);
    }
    return best;
}

inline double min_dcf(double c_miss, double c_fa, double pi_tar, const std::vector<double>& tar,
                      const std::vector<double>& non) {
    const double w_miss = c_miss * pi_tar;
    const double w_fa = c_fa * (1.0 - pi_tar);
    const double def = std::min(w_miss, w_fa);
    double best = kInf;
    for (double t : midpoint_thresholds(pooled({&tar, &non}))) {
        best = std::min(best, (w_miss * miss_rate(tar, t) + w_fa * fa_rate(non, t)) / def);
    }
    return best;
}

/// EER read off the first sign change of P_miss - P_fa along increasing
/// midpoint thresholds, interpolated on the joining segment.
inline double eer(const std::vector<double>& pos, const std::vector<double>& neg) {
    const auto ts = midpoint_thresholds(pooled({&pos, &neg}));
    double m_prev = 0.0, f_prev = 1.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double m = miss_rate(pos, ts[i]);
        const double f = fa_rate(neg, ts[i]);
        if (m - f >= 0.0) {
            if (m == f || i == 0) return m;
            const double d0 = m_prev - f_prev;
            const double d1 = m - f;
            const double lambda = -d0 / (d1 - d0);
            return m_prev + lambda * (m - m_prev);
        }
        m_prev = m;
        f_prev = f;
    }
    return m_prev;
}

/// Tandem min t-DCF by direct per-trial counting at midpoint thresholds of both columns.
inline double min_tdcf(const CostModel& m, const DualScoreSet& d) {
    std::vector<double> asv, cm;
    double n[3] = {0, 0, 0};
    for (const auto& t : d.trials()) {
        asv.push_back(t.asv);
        cm.push_back(t.cm);
        n[static_cast<int>(t.label)] += 1.0;
    }
    const double w_miss = m.c_miss * m.pi_tar;
    const double w_non = m.c_fa_non * m.pi_non;
    const double w_spf = m.c_fa_spf * m.pi_spf;
    const double def = std::min(w_miss, w_non + w_spf);
    double best = kInf;
    for (double ta : midpoint_thresholds(asv)) {
        for (double tc : midpoint_thresholds(cm)) {
            double acc[3] = {0, 0, 0};
            for (const auto& t : d.trials()) {
                if (t.asv >= ta && t.cm >= tc) acc[static_cast<int>(t.label)] += 1.0;
            }
            const double cost = w_miss * ((n[0] - acc[0]) / n[0]) + w_non * (acc[1] / n[1]) + w_spf * (acc[2] / n[2]);
            best = std::min(best, cost / def);
        }
    }
    return best;
}

} // namespace sasv::oracle
