#pragma once

#include "sasv/adcf.hpp"
#include "sasv/trialdata.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace sasv {

/// Error rates of an ASV + CM cascade whose decisions are combined with an
/// AND gate (accept iff both sub-systems accept).
struct TandemRates {
    double p_miss_tar = 0.0;
    double p_fa_non = 0.0;
    double p_fa_spf = 0.0;
};

/// Marginal rates of a spoof detector: misses counted on bona fide trials
/// (targets and non-targets), false alarms on spoofs.
struct CmRates {
    double p_miss = 0.0;
    double p_fa = 0.0;
};

/// Coefficients of the ASV-constrained t-DCF, c0 + c1*P_miss_cm + c2*P_fa_cm.
/// c1 is negative when the frozen ASV falsely accepts more non-target cost
/// than it correctly accepts target cost; it is reported as is.
struct ConstrainedCoeffs {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

/// Per-trial AND-gate counting; no independence assumption.
/// Throws EmptyClassError unless all three classes are present.
TandemRates tandem_rates_empirical(const DualScoreSet& d, double t_asv, double t_cm);

/// Composition of marginal ASV and CM rates assuming the two decisions are
/// class-conditionally independent.
TandemRates tandem_rates_analytic(const ErrorRates& asv, const CmRates& cm);

/// Marginal rates of one column of a dual-score set.
ErrorRates asv_marginal_rates(const DualScoreSet& d, double t_asv);
CmRates cm_marginal_rates(const DualScoreSet& d, double t_cm);

double tdcf_unconstrained(const CostModel& m, const TandemRates& r);

ConstrainedCoeffs constrained_coeffs(const CostModel& m, const ErrorRates& frozen_asv);

double tdcf_constrained(const ConstrainedCoeffs& c, double p_miss_cm, double p_fa_cm);

struct TdcfCurveRow {
    double t_asv;
    double t_cm;
    double tdcf_norm;
};

struct TdcfResult {
    double min_norm_tdcf = 0.0;
    double t_asv = 0.0;
    double t_cm = 0.0;
    double default_cost = 0.0;
    std::optional<std::vector<TdcfCurveRow>> curve;
};

/// Minimum of the unconstrained t-DCF over candidate thresholds, normalised
/// by the a-DCF default-system cost. With `frozen_t_asv` the ASV threshold is
/// fixed and only the CM threshold varies; otherwise the full grid of ASV x
/// CM candidates is searched. Ties go to the lexicographically smallest
/// (t_asv, t_cm).
TdcfResult min_tdcf(const CostModel& m, const DualScoreSet& d, std::optional<double> frozen_t_asv = std::nullopt,
                    bool keep_curve = false);

std::vector<TdcfResult> min_tdcf(std::span<const CostModel> models, const DualScoreSet& d,
                                 std::optional<double> frozen_t_asv = std::nullopt, bool keep_curve = false);

void write_tdcf_curve_csv(std::ostream& out, std::span<const TdcfCurveRow> rows);

enum class GateOrder {
    CmFirst,  ///< emit the ASV score when the CM score passes the gate
    AsvFirst  ///< emit the CM score when the ASV score passes the gate
};

/// Score emitted by the gate for one trial.
double gate_score(double asv, double cm, GateOrder order, double t_gate) noexcept;

/// Turns a two-score cascade into a single-score system: trials failing the
/// gate score -inf, the rest keep the second sub-system's score.
ScoreSet gate_scores(const DualScoreSet& d, GateOrder order, double t_gate);

} // namespace sasv
