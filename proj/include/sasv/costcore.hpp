#pragma once

#include "sasv/errcurves.hpp"
#include "sasv/trialdata.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sasv {

/// Class-conditional decision probabilities: entry (q, k) is the probability
/// of deciding class q when the truth is class k. Every column sums to one.
class ConditionalMatrix {
public:
    /// Row-major K x K entries; throws RangeError on entries outside [0,1]
    /// or columns not summing to one within 1e-9.
    ConditionalMatrix(std::size_t k, std::vector<double> entries);

    std::size_t k() const noexcept { return k_; }
    double operator()(std::size_t q, std::size_t k) const { return entries_.at(q * k_ + k); }

private:
    std::size_t k_;
    std::vector<double> entries_;
};

/// Entry (q, k) = counts(q, k) / totals(k), counts row-major.
/// Throws ZeroClassCountError, CountMismatchError, DimensionMismatchError.
ConditionalMatrix empirical_conditional_matrix(std::span<const std::uint64_t> counts,
                                               std::span<const std::uint64_t> totals);

/// Expected decision cost: sum over q, k of c_qk * p_qk * pi_k.
double total_cost(const GeneralCostSpec& spec, const ConditionalMatrix& p);

/// Two-class NIST detection cost c_miss*pi_tar*p_miss + c_fa*(1-pi_tar)*p_fa.
double dcf(double c_miss, double c_fa, double pi_tar, double p_miss, double p_fa);

/// Minimum normalised two-class DCF over all thresholds of a target /
/// non-target score pair. Normaliser: min{c_miss*pi_tar, c_fa*(1-pi_tar)}.
struct DcfResult {
    double min_norm_dcf;
    double argmin_threshold;
    double default_cost;
};
DcfResult min_dcf(double c_miss, double c_fa, double pi_tar, std::span<const double> tar,
                  std::span<const double> non);

/// Three-class cost matrix equivalent to a CostModel: missing a target costs
/// c_miss whichever negative class is decided, non-target/spoof confusions
/// cost nothing. Class order target, nontarget, spoof.
GeneralCostSpec three_class_spec(const CostModel& m);

/// 3 x 3 conditional matrix of an accept/reject classifier at threshold t.
/// A binary detector cannot tell the two negative classes apart, so every
/// rejection is placed in the "decide nontarget" row and the "decide spoof"
/// row is zero.
ConditionalMatrix binary_conditional_matrix(const OperatingPoint& op);

} // namespace sasv
