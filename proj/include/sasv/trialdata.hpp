#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sasv {

enum class TrialClass { Target = 0, NonTarget = 1, Spoof = 2 };

inline constexpr std::array<TrialClass, 3> kAllClasses = {
    TrialClass::Target, TrialClass::NonTarget, TrialClass::Spoof};

/// Canonical lower-case token: "target", "nontarget" or "spoof".
std::string_view to_string(TrialClass c) noexcept;

/// Case-insensitive parse of a class token. Throws ParseError on anything else.
TrialClass parse_trial_class(std::string_view token);

struct Trial {
    std::string id;
    TrialClass label;
};

/// Per-class score samples of a single-score system.
///
/// Scores are finite reals, except for negative infinity which is admitted
/// as the "gated out" sentinel. NaN and +inf are rejected at construction.
class ScoreSet {
public:
    ScoreSet(std::vector<double> tar, std::vector<double> non, std::vector<double> spf);

    const std::vector<double>& tar() const noexcept { return tar_; }
    const std::vector<double>& non() const noexcept { return non_; }
    const std::vector<double>& spf() const noexcept { return spf_; }
    const std::vector<double>& of(TrialClass c) const noexcept;

    std::size_t size() const noexcept { return tar_.size() + non_.size() + spf_.size(); }

    friend bool operator==(const ScoreSet&, const ScoreSet&) = default;

private:
    std::vector<double> tar_;
    std::vector<double> non_;
    std::vector<double> spf_;
};

struct DualScore {
    TrialClass label;
    double asv;
    double cm;

    friend bool operator==(const DualScore&, const DualScore&) = default;
};

/// Paired (ASV, CM) scores per trial for tandem systems. Both scores finite.
class DualScoreSet {
public:
    explicit DualScoreSet(std::vector<DualScore> trials);

    const std::vector<DualScore>& trials() const noexcept { return trials_; }
    std::size_t size() const noexcept { return trials_.size(); }
    std::size_t count(TrialClass c) const noexcept;

    /// Single-score view on the ASV column.
    ScoreSet asv_scores() const;
    ScoreSet cm_scores() const;

private:
    std::vector<DualScore> trials_;
};

/// Prior/cost bundle of the three-class detection cost.
struct CostModel {
    double pi_tar = 0.0;
    double pi_non = 0.0;
    double pi_spf = 0.0;
    double c_miss = 0.0;
    double c_fa_non = 0.0;
    double c_fa_spf = 0.0;

    friend bool operator==(const CostModel&, const CostModel&) = default;
};

inline constexpr double kPriorSumTolerance = 1e-9;

/// Returns `m` unchanged when its priors are non-negative and sum to one
/// (within kPriorSumTolerance) and its costs are non-negative and not all
/// zero. Throws PriorSumError, NegativeValueError or AllZeroCostError.
CostModel validate_cost_model(const CostModel& m);

/// Built-in presets "adcf1" and "adcf2".
std::optional<CostModel> find_preset(std::string_view name);
std::vector<std::string> preset_names();

/// Flat `key=value` text; parse_cost_config(to_config_text(m)) == m bit-for-bit.
std::string to_config_text(const CostModel& m);
CostModel parse_cost_config(std::string_view text, std::string_view origin = "<config>");

/// K-class prior vector and K x K cost matrix (row q = decided class,
/// column k = true class), stored row-major.
class GeneralCostSpec {
public:
    GeneralCostSpec(std::vector<double> priors, std::vector<double> costs);

    std::size_t k() const noexcept { return priors_.size(); }
    const std::vector<double>& priors() const noexcept { return priors_; }
    double prior(std::size_t k) const { return priors_.at(k); }
    double cost(std::size_t q, std::size_t k) const { return costs_.at(q * this->k() + k); }

private:
    std::vector<double> priors_;
    std::vector<double> costs_;
};

/// Routes every keyed trial's score into the list of its class.
/// Throws DuplicateTrialError, MissingScoreError, UnknownTrialError.
ScoreSet partition_scores(std::span<const Trial> trials,
                          const std::unordered_map<std::string, double>& scores);

} // namespace sasv
