#include "sasv/tandem.hpp"

#include "sasv/detail/cost_terms.hpp"
#include "sasv/detail/sweep.hpp"
#include "sasv/errcurves.hpp"
#include "sasv/error.hpp"
#include "sasv/numfmt.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

namespace sasv {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_rate(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw RangeError(std::string(what) + " = " + format_real(v) + " is outside [0, 1]");
    }
}

std::size_t index_of(TrialClass c) { return static_cast<std::size_t>(c); }

std::array<std::uint64_t, 3> class_counts(const DualScoreSet& d) {
    std::array<std::uint64_t, 3> n{};
    for (const auto& t : d.trials()) ++n[index_of(t.label)];
    return n;
}

std::array<std::uint64_t, 3> require_all_classes(const DualScoreSet& d) {
    const auto n = class_counts(d);
    for (auto c : kAllClasses) {
        if (n[index_of(c)] == 0) throw EmptyClassError("no " + std::string(to_string(c)) + " trials");
    }
    return n;
}

// -inf, distinct values ascending, one past the maximum.
std::vector<double> candidates_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::vector<double> out;
    detail::sweep_sorted<1>({std::span<const double>(values)}, [&](double t, const auto&) { out.push_back(t); });
    return out;
}

struct GridTracker {
    detail::CostWeights w;
    TdcfResult result;
};

} // namespace

TandemRates tandem_rates_empirical(const DualScoreSet& d, double t_asv, double t_cm) {
    const auto n = require_all_classes(d);
    std::array<std::uint64_t, 3> accepted{};
    for (const auto& t : d.trials()) {
        if (t.asv >= t_asv && t.cm >= t_cm) ++accepted[index_of(t.label)];
    }
    return {Rate{n[0] - accepted[0], n[0]}.value(), Rate{accepted[1], n[1]}.value(),
            Rate{accepted[2], n[2]}.value()};
}

TandemRates tandem_rates_analytic(const ErrorRates& asv, const CmRates& cm) {
    check_rate(asv.p_miss, "p_miss_asv");
    check_rate(asv.p_fa_non, "p_fa_non_asv");
    check_rate(asv.p_fa_spf, "p_fa_spf_asv");
    check_rate(cm.p_miss, "p_miss_cm");
    check_rate(cm.p_fa, "p_fa_cm");
    return {asv.p_miss + (1.0 - asv.p_miss) * cm.p_miss, asv.p_fa_non * (1.0 - cm.p_miss),
            asv.p_fa_spf * cm.p_fa};
}

ErrorRates asv_marginal_rates(const DualScoreSet& d, double t_asv) {
    const auto n = require_all_classes(d);
    std::array<std::uint64_t, 3> accepted{};
    for (const auto& t : d.trials()) {
        if (t.asv >= t_asv) ++accepted[index_of(t.label)];
    }
    return {Rate{n[0] - accepted[0], n[0]}.value(), Rate{accepted[1], n[1]}.value(),
            Rate{accepted[2], n[2]}.value()};
}

CmRates cm_marginal_rates(const DualScoreSet& d, double t_cm) {
    const auto n = require_all_classes(d);
    std::uint64_t bonafide_rejected = 0;
    std::uint64_t spoof_accepted = 0;
    for (const auto& t : d.trials()) {
        const bool accept = t.cm >= t_cm;
        if (t.label == TrialClass::Spoof) {
            spoof_accepted += accept ? 1 : 0;
        } else {
            bonafide_rejected += accept ? 0 : 1;
        }
    }
    return {Rate{bonafide_rejected, n[0] + n[1]}.value(), Rate{spoof_accepted, n[2]}.value()};
}

double tdcf_unconstrained(const CostModel& m, const TandemRates& r) {
    check_rate(r.p_miss_tar, "p_miss_tar");
    check_rate(r.p_fa_non, "p_fa_non");
    check_rate(r.p_fa_spf, "p_fa_spf");
    return detail::weighted_errors(m.c_miss * m.pi_tar, r.p_miss_tar, m.c_fa_non * m.pi_non, r.p_fa_non,
                                   m.c_fa_spf * m.pi_spf, r.p_fa_spf);
}

ConstrainedCoeffs constrained_coeffs(const CostModel& m, const ErrorRates& frozen_asv) {
    check_rate(frozen_asv.p_miss, "p_miss_asv");
    check_rate(frozen_asv.p_fa_non, "p_fa_non_asv");
    check_rate(frozen_asv.p_fa_spf, "p_fa_spf_asv");
    const double w_miss = m.c_miss * m.pi_tar;
    const double w_non = m.c_fa_non * m.pi_non;
    const double w_spf = m.c_fa_spf * m.pi_spf;
    return {w_miss * frozen_asv.p_miss + w_non * frozen_asv.p_fa_non,
            w_miss * (1.0 - frozen_asv.p_miss) - w_non * frozen_asv.p_fa_non, w_spf * frozen_asv.p_fa_spf};
}

double tdcf_constrained(const ConstrainedCoeffs& c, double p_miss_cm, double p_fa_cm) {
    check_rate(p_miss_cm, "p_miss_cm");
    check_rate(p_fa_cm, "p_fa_cm");
    return c.c0 + c.c1 * p_miss_cm + c.c2 * p_fa_cm;
}

std::vector<TdcfResult> min_tdcf(std::span<const CostModel> models, const DualScoreSet& d,
                                 std::optional<double> frozen_t_asv, bool keep_curve) {
    std::vector<GridTracker> trackers;
    trackers.reserve(models.size());
    for (const auto& m : models) {
        const auto& v = validate_cost_model(m);
        GridTracker g{detail::CostWeights{v.c_miss * v.pi_tar, v.c_fa_non * v.pi_non, v.c_fa_spf * v.pi_spf},
                      {}};
        g.result.default_cost = adcf_default(v);
        g.result.min_norm_tdcf = std::numeric_limits<double>::infinity();
        if (keep_curve) g.result.curve.emplace();
        trackers.push_back(std::move(g));
    }
    const auto n = require_all_classes(d);
    const auto& trials = d.trials();

    std::vector<double> asv_values, cm_values;
    asv_values.reserve(trials.size());
    cm_values.reserve(trials.size());
    for (const auto& t : trials) {
        asv_values.push_back(t.asv);
        cm_values.push_back(t.cm);
    }
    const auto asv_candidates = frozen_t_asv ? std::vector<double>{*frozen_t_asv} : candidates_of(asv_values);
    const auto cm_candidates = candidates_of(cm_values);

    // Trials ordered by CM score, walked once per ASV threshold.
    std::vector<std::size_t> by_cm(trials.size());
    std::iota(by_cm.begin(), by_cm.end(), std::size_t{0});
    std::stable_sort(by_cm.begin(), by_cm.end(),
                     [&](std::size_t a, std::size_t b) { return trials[a].cm < trials[b].cm; });

    for (const double t_asv : asv_candidates) {
        std::array<std::uint64_t, 3> asv_accepted{};
        for (const auto& t : trials) {
            if (t.asv >= t_asv) ++asv_accepted[index_of(t.label)];
        }
        std::array<std::uint64_t, 3> gated_below{};  // ASV-accepted, CM score < t_cm
        std::size_t pos = 0;
        for (const double t_cm : cm_candidates) {
            while (pos < by_cm.size() && trials[by_cm[pos]].cm < t_cm) {
                const auto& t = trials[by_cm[pos]];
                if (t.asv >= t_asv) ++gated_below[index_of(t.label)];
                ++pos;
            }
            const double p_miss = Rate{n[0] - (asv_accepted[0] - gated_below[0]), n[0]}.value();
            const double p_fa_non = Rate{asv_accepted[1] - gated_below[1], n[1]}.value();
            const double p_fa_spf = Rate{asv_accepted[2] - gated_below[2], n[2]}.value();
            for (auto& g : trackers) {
                const double cost =
                    detail::weighted_errors(g.w.miss, p_miss, g.w.fa_non, p_fa_non, g.w.fa_spf, p_fa_spf);
                const double norm = cost / g.result.default_cost;
                if (norm < g.result.min_norm_tdcf) {
                    g.result.min_norm_tdcf = norm;
                    g.result.t_asv = t_asv;
                    g.result.t_cm = t_cm;
                }
                if (g.result.curve) g.result.curve->push_back({t_asv, t_cm, norm});
            }
        }
    }

    std::vector<TdcfResult> out;
    out.reserve(trackers.size());
    for (auto& g : trackers) out.push_back(std::move(g.result));
    return out;
}

TdcfResult min_tdcf(const CostModel& m, const DualScoreSet& d, std::optional<double> frozen_t_asv,
                    bool keep_curve) {
    return std::move(min_tdcf(std::span<const CostModel>(&m, 1), d, frozen_t_asv, keep_curve).front());
}

void write_tdcf_curve_csv(std::ostream& out, std::span<const TdcfCurveRow> rows) {
    out << "t_asv,t_cm,tdcf_norm\n";
    for (const auto& r : rows) {
        out << format_real(r.t_asv) << ',' << format_real(r.t_cm) << ',' << format_sig(r.tdcf_norm, 12) << '\n';
    }
}

double gate_score(double asv, double cm, GateOrder order, double t_gate) noexcept {
    const double gate = order == GateOrder::CmFirst ? cm : asv;
    const double pass = order == GateOrder::CmFirst ? asv : cm;
    return gate >= t_gate ? pass : kNegInf;
}

ScoreSet gate_scores(const DualScoreSet& d, GateOrder order, double t_gate) {
    std::vector<double> tar, non, spf;
    for (const auto& t : d.trials()) {
        const double s = gate_score(t.asv, t.cm, order, t_gate);
        switch (t.label) {
        case TrialClass::Target: tar.push_back(s); break;
        case TrialClass::NonTarget: non.push_back(s); break;
        case TrialClass::Spoof: spf.push_back(s); break;
        }
    }
    return ScoreSet(std::move(tar), std::move(non), std::move(spf));
}

} // namespace sasv
