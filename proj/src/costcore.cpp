#include "sasv/costcore.hpp"

#include "sasv/detail/cost_terms.hpp"
#include "sasv/detail/sweep.hpp"
#include "sasv/error.hpp"
#include "sasv/numfmt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sasv {

namespace {

constexpr double kColumnSumTolerance = 1e-9;

void check_rate(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw RangeError(std::string(what) + " = " + format_real(v) + " is outside [0, 1]");
    }
}

} // namespace

ConditionalMatrix::ConditionalMatrix(std::size_t k, std::vector<double> entries)
    : k_(k), entries_(std::move(entries)) {
    if (k_ < 2 || entries_.size() != k_ * k_) {
        throw DimensionMismatchError("conditional matrix must be K x K with K >= 2");
    }
    for (std::size_t col = 0; col < k_; ++col) {
        double sum = 0.0;
        for (std::size_t row = 0; row < k_; ++row) {
            const double p = entries_[row * k_ + col];
            check_rate(p, "conditional probability");
            sum += p;
        }
        if (std::fabs(sum - 1.0) > kColumnSumTolerance) {
            throw RangeError("column " + std::to_string(col) + " sums to " + format_real(sum) + ", expected 1");
        }
    }
}

ConditionalMatrix empirical_conditional_matrix(std::span<const std::uint64_t> counts,
                                               std::span<const std::uint64_t> totals) {
    const auto k = totals.size();
    if (counts.size() != k * k) {
        throw DimensionMismatchError("count matrix has " + std::to_string(counts.size()) + " entries, expected " +
                                     std::to_string(k * k));
    }
    std::vector<double> entries(k * k);
    for (std::size_t col = 0; col < k; ++col) {
        if (totals[col] == 0) {
            throw ZeroClassCountError("class " + std::to_string(col) + " has no trials");
        }
        std::uint64_t sum = 0;
        for (std::size_t row = 0; row < k; ++row) sum += counts[row * k + col];
        if (sum != totals[col]) {
            throw CountMismatchError("counts of class " + std::to_string(col) + " sum to " + std::to_string(sum) +
                                     ", expected " + std::to_string(totals[col]));
        }
        for (std::size_t row = 0; row < k; ++row) {
            entries[row * k + col] =
                static_cast<double>(counts[row * k + col]) / static_cast<double>(totals[col]);
        }
    }
    return ConditionalMatrix(k, std::move(entries));
}

double total_cost(const GeneralCostSpec& spec, const ConditionalMatrix& p) {
    if (spec.k() != p.k()) {
        throw DimensionMismatchError("cost specification has " + std::to_string(spec.k()) +
                                     " classes, conditional matrix has " + std::to_string(p.k()));
    }
    double total = 0.0;
    for (std::size_t q = 0; q < spec.k(); ++q) {
        for (std::size_t k = 0; k < spec.k(); ++k) {
            total += spec.cost(q, k) * p(q, k) * spec.prior(k);
        }
    }
    return total;
}

double dcf(double c_miss, double c_fa, double pi_tar, double p_miss, double p_fa) {
    check_rate(pi_tar, "pi_tar");
    check_rate(p_miss, "p_miss");
    check_rate(p_fa, "p_fa");
    if (!(c_miss >= 0.0) || !(c_fa >= 0.0)) throw RangeError("costs must be non-negative");
    return detail::weighted_errors(c_miss * pi_tar, p_miss, c_fa * (1.0 - pi_tar), p_fa);
}

DcfResult min_dcf(double c_miss, double c_fa, double pi_tar, std::span<const double> tar,
                  std::span<const double> non) {
    check_rate(pi_tar, "pi_tar");
    if (tar.empty()) throw EmptyClassError("no target scores");
    if (non.empty()) throw EmptyClassError("no nontarget scores");
    const double w_miss = c_miss * pi_tar;
    const double w_fa = c_fa * (1.0 - pi_tar);
    const double def = std::min(w_miss, w_fa);
    if (!(def > 0.0)) throw DegenerateModelError("default DCF is zero; normalisation undefined");

    const auto st = detail::sorted_copy(tar);
    const auto sn = detail::sorted_copy(non);
    const auto n_tar = static_cast<std::uint64_t>(st.size());
    const auto n_non = static_cast<std::uint64_t>(sn.size());
    DcfResult best{std::numeric_limits<double>::infinity(), 0.0, def};
    detail::sweep_sorted<2>({st, sn}, [&](double t, const auto& below) {
        const double p_miss = Rate{below[0], n_tar}.value();
        const double p_fa = Rate{n_non - below[1], n_non}.value();
        const double norm = detail::weighted_errors(w_miss, p_miss, w_fa, p_fa) / def;
        if (norm < best.min_norm_dcf) {
            best.min_norm_dcf = norm;
            best.argmin_threshold = t;
        }
    });
    return best;
}

GeneralCostSpec three_class_spec(const CostModel& m) {
    // Rows: decided class, columns: true class (target, nontarget, spoof).
    return GeneralCostSpec({m.pi_tar, m.pi_non, m.pi_spf},
                           {0.0, m.c_fa_non, m.c_fa_spf,
                            m.c_miss, 0.0, 0.0,
                            m.c_miss, 0.0, 0.0});
}

ConditionalMatrix binary_conditional_matrix(const OperatingPoint& op) {
    const double miss = op.miss.value();
    const double fa_non = op.fa_non.value();
    const double fa_spf = op.fa_spf.value();
    return ConditionalMatrix(3, {1.0 - miss, fa_non, fa_spf,
                                 miss, 1.0 - fa_non, 1.0 - fa_spf,
                                 0.0, 0.0, 0.0});
}

} // namespace sasv
