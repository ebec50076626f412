#pragma once

namespace sasv::detail {

// Prior-times-cost weight of each error type.
struct CostWeights {
    double miss;
    double fa_non;
    double fa_spf;
};

// Shared evaluation order for prior-and-cost weighted error sums, so that
// the two-class DCF and its three-class generalisations agree bit-for-bit
// when the extra weight is zero.

inline double weighted_errors(double w_miss, double p_miss, double w_fa, double p_fa) noexcept {
    return w_miss * p_miss + w_fa * p_fa;
}

inline double weighted_errors(double w_miss, double p_miss, double w_fa_non, double p_fa_non, double w_fa_spf,
                              double p_fa_spf) noexcept {
    return w_miss * p_miss + w_fa_non * p_fa_non + w_fa_spf * p_fa_spf;
}

} // namespace sasv::detail
