#pragma once

#include "sasv/errcurves.hpp"
#include "sasv/trialdata.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace sasv {

/// Miss, non-target false-alarm and spoof false-alarm rates of a single
/// accept/reject decision rule.
struct ErrorRates {
    double p_miss = 0.0;
    double p_fa_non = 0.0;
    double p_fa_spf = 0.0;
};

/// Unnormalised architecture-agnostic detection cost at one operating point:
/// c_miss*pi_tar*p_miss + c_fa_non*pi_non*p_fa_non + c_fa_spf*pi_spf*p_fa_spf.
/// Throws RangeError when a rate is outside [0, 1].
double adcf_at(const CostModel& m, const ErrorRates& r);

/// Cost of the cheaper of the two default systems (reject everything,
/// accept everything): min{c_miss*pi_tar, c_fa_non*pi_non + c_fa_spf*pi_spf}.
/// Throws DegenerateModelError when it is zero.
double adcf_default(const CostModel& m);

/// adcf_at / adcf_default. Not bounded above by one at arbitrary thresholds.
double adcf_norm_at(const CostModel& m, const ErrorRates& r);

struct AdcfCurveRow {
    double threshold;
    double adcf;
    double adcf_norm;
};

struct AdcfResult {
    double min_norm_adcf = 0.0;
    double argmin_threshold = 0.0;  ///< smallest candidate threshold attaining the minimum
    double default_cost = 0.0;
    std::optional<std::vector<AdcfCurveRow>> curve;
};

/// Minimum normalised a-DCF over the candidate thresholds of `s`.
///
/// Each class with a positive prior needs at least one score; a zero-prior
/// class may be empty (e.g. pi_spf = 0 reduces the metric to the two-class
/// DCF). The model is validated first.
AdcfResult min_adcf(const CostModel& m, const ScoreSet& s, bool keep_curve = false);

/// Same sweep shared by several cost models; results in model order.
std::vector<AdcfResult> min_adcf(std::span<const CostModel> models, const ScoreSet& s, bool keep_curve = false);

/// Minimum over a prebuilt rate curve.
AdcfResult min_adcf(const CostModel& m, const RateCurve& curve, bool keep_curve = false);

/// CSV `threshold,adcf,adcf_norm` with 12 significant digits.
void write_cost_curve_csv(std::ostream& out, std::span<const AdcfCurveRow> rows);

} // namespace sasv
