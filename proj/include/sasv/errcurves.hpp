#pragma once

#include "sasv/trialdata.hpp"

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace sasv {

/// Exact empirical rate num/den. A rate over an empty class (den == 0)
/// evaluates to 0; such curves only arise for zero-prior classes.
struct Rate {
    std::uint64_t num = 0;
    std::uint64_t den = 0;

    double value() const noexcept {
        return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
    }
    friend bool operator==(const Rate&, const Rate&) = default;
};

enum class RateKind {
    Miss,       ///< fraction of scores rejected (s < t)
    FalseAlarm  ///< fraction of scores accepted (s >= t)
};

/// Rate of one class at threshold t under accept-iff-s>=t.
/// Throws EmptyClassError on an empty list.
Rate rate_at(std::span<const double> scores, RateKind kind, double t);

/// -inf, every distinct finite pooled score ascending, then one value past
/// the maximum. Throws EmptyClassError when the pooled set is empty.
std::vector<double> candidate_thresholds(const ScoreSet& s);

struct OperatingPoint {
    double threshold;
    Rate miss;
    Rate fa_non;
    Rate fa_spf;
};

/// Step-function error rates of a single-score system at every candidate
/// threshold, stored as integer counts.
class RateCurve {
public:
    std::size_t size() const noexcept { return thresholds_.size(); }
    const std::vector<double>& thresholds() const noexcept { return thresholds_; }

    Rate p_miss(std::size_t i) const { return {miss_[i], n_tar_}; }
    Rate p_fa_non(std::size_t i) const { return {accepted_non_[i], n_non_}; }
    Rate p_fa_spf(std::size_t i) const { return {accepted_spf_[i], n_spf_}; }
    OperatingPoint at(std::size_t i) const { return {thresholds_[i], p_miss(i), p_fa_non(i), p_fa_spf(i)}; }

    std::uint64_t n_tar() const noexcept { return n_tar_; }
    std::uint64_t n_non() const noexcept { return n_non_; }
    std::uint64_t n_spf() const noexcept { return n_spf_; }

private:
    friend RateCurve build_curve(const ScoreSet&, std::initializer_list<TrialClass>);

    std::vector<double> thresholds_;
    std::vector<std::uint64_t> miss_;
    std::vector<std::uint64_t> accepted_non_;
    std::vector<std::uint64_t> accepted_spf_;
    std::uint64_t n_tar_ = 0;
    std::uint64_t n_non_ = 0;
    std::uint64_t n_spf_ = 0;
};

/// Sorts once and sweeps once. Every class listed in `required` must be
/// non-empty (EmptyClassError names the first one that is not).
RateCurve build_curve(const ScoreSet& s,
                      std::initializer_list<TrialClass> required = {TrialClass::Target, TrialClass::NonTarget,
                                                                    TrialClass::Spoof});

void require_nonempty(const ScoreSet& s, std::initializer_list<TrialClass> classes);

/// CSV `threshold,p_miss,p_fa_non,p_fa_spf`; rates with 12 significant digits.
void write_curve_csv(std::ostream& out, const RateCurve& curve);

} // namespace sasv
