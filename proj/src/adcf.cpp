#include "sasv/adcf.hpp"

#include "sasv/detail/cost_terms.hpp"
#include "sasv/detail/sweep.hpp"
#include "sasv/error.hpp"
#include "sasv/numfmt.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>

namespace sasv {

namespace {

void check_rates(const ErrorRates& r) {
    for (double v : {r.p_miss, r.p_fa_non, r.p_fa_spf}) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw RangeError("error rate " + format_real(v) + " is outside [0, 1]");
        }
    }
}

struct Weights {
    double miss;
    double fa_non;
    double fa_spf;
    double def;
};

Weights weights_of(const CostModel& m) {
    return {m.c_miss * m.pi_tar, m.c_fa_non * m.pi_non, m.c_fa_spf * m.pi_spf, adcf_default(m)};
}

void require_weighted_classes(const std::span<const CostModel> models, const ScoreSet& s) {
    bool need[3] = {false, false, false};
    for (const auto& m : models) {
        need[0] = need[0] || m.pi_tar > 0.0;
        need[1] = need[1] || m.pi_non > 0.0;
        need[2] = need[2] || m.pi_spf > 0.0;
    }
    for (auto c : kAllClasses) {
        if (need[static_cast<int>(c)] && s.of(c).empty()) {
            throw EmptyClassError("no " + std::string(to_string(c)) + " scores");
        }
    }
}

// Tracks the running minimum of one cost model along a threshold sweep.
class MinTracker {
public:
    MinTracker(const CostModel& m, bool keep_curve) : w_(weights_of(m)) {
        result_.default_cost = w_.def;
        result_.min_norm_adcf = std::numeric_limits<double>::infinity();
        if (keep_curve) result_.curve.emplace();
    }

    void visit(double t, double p_miss, double p_fa_non, double p_fa_spf) {
        const double cost = detail::weighted_errors(w_.miss, p_miss, w_.fa_non, p_fa_non, w_.fa_spf, p_fa_spf);
        const double norm = cost / w_.def;
        if (norm < result_.min_norm_adcf) {
            result_.min_norm_adcf = norm;
            result_.argmin_threshold = t;
        }
        if (result_.curve) result_.curve->push_back({t, cost, norm});
    }

    AdcfResult take() { return std::move(result_); }

private:
    Weights w_;
    AdcfResult result_;
};

} // namespace

double adcf_at(const CostModel& m, const ErrorRates& r) {
    check_rates(r);
    return detail::weighted_errors(m.c_miss * m.pi_tar, r.p_miss, m.c_fa_non * m.pi_non, r.p_fa_non,
                                   m.c_fa_spf * m.pi_spf, r.p_fa_spf);
}

double adcf_default(const CostModel& m) {
    const double reject_all = m.c_miss * m.pi_tar;
    // Same expression as the cost at t = -inf, so that edge normalises to 1 exactly.
    const double accept_all =
        detail::weighted_errors(m.c_miss * m.pi_tar, 0.0, m.c_fa_non * m.pi_non, 1.0, m.c_fa_spf * m.pi_spf, 1.0);
    const double def = std::min(reject_all, accept_all);
    if (!(def > 0.0)) {
        throw DegenerateModelError("default-system cost is zero; the normalised a-DCF is undefined");
    }
    return def;
}

double adcf_norm_at(const CostModel& m, const ErrorRates& r) { return adcf_at(m, r) / adcf_default(m); }

std::vector<AdcfResult> min_adcf(std::span<const CostModel> models, const ScoreSet& s, bool keep_curve) {
    std::vector<MinTracker> trackers;
    trackers.reserve(models.size());
    for (const auto& m : models) trackers.emplace_back(validate_cost_model(m), keep_curve);
    require_weighted_classes(models, s);

    const auto tar = detail::sorted_copy(s.tar());
    const auto non = detail::sorted_copy(s.non());
    const auto spf = detail::sorted_copy(s.spf());
    const auto n_tar = static_cast<std::uint64_t>(tar.size());
    const auto n_non = static_cast<std::uint64_t>(non.size());
    const auto n_spf = static_cast<std::uint64_t>(spf.size());

    detail::sweep_sorted<3>({tar, non, spf}, [&](double t, const auto& below) {
        const double p_miss = Rate{below[0], n_tar}.value();
        const double p_fa_non = Rate{n_non - below[1], n_non}.value();
        const double p_fa_spf = Rate{n_spf - below[2], n_spf}.value();
        for (auto& tr : trackers) tr.visit(t, p_miss, p_fa_non, p_fa_spf);
    });

    std::vector<AdcfResult> out;
    out.reserve(trackers.size());
    for (auto& tr : trackers) out.push_back(tr.take());
    return out;
}

AdcfResult min_adcf(const CostModel& m, const ScoreSet& s, bool keep_curve) {
    return std::move(min_adcf(std::span<const CostModel>(&m, 1), s, keep_curve).front());
}

AdcfResult min_adcf(const CostModel& m, const RateCurve& curve, bool keep_curve) {
    MinTracker tracker(validate_cost_model(m), keep_curve);
    if ((m.pi_tar > 0.0 && curve.n_tar() == 0) || (m.pi_non > 0.0 && curve.n_non() == 0) ||
        (m.pi_spf > 0.0 && curve.n_spf() == 0)) {
        throw EmptyClassError("rate curve lacks scores for a class with positive prior");
    }
    for (std::size_t i = 0; i < curve.size(); ++i) {
        tracker.visit(curve.thresholds()[i], curve.p_miss(i).value(), curve.p_fa_non(i).value(),
                      curve.p_fa_spf(i).value());
    }
    return tracker.take();
}

void write_cost_curve_csv(std::ostream& out, std::span<const AdcfCurveRow> rows) {
    out << "threshold,adcf,adcf_norm\n";
    for (const auto& r : rows) {
        out << format_real(r.threshold) << ',' << format_sig(r.adcf, 12) << ',' << format_sig(r.adcf_norm, 12)
            << '\n';
    }
}

} // namespace sasv
