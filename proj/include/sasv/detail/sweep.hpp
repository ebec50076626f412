#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace sasv::detail {

/// Threshold strictly above `max_score` (max + 1, or the next representable
/// double when +1 is absorbed by rounding).
inline double past_max_threshold(double max_score) {
    const double t = max_score + 1.0;
    return t > max_score ? t : std::nextafter(max_score, std::numeric_limits<double>::infinity());
}

inline std::vector<double> sorted_copy(std::span<const double> xs) {
    std::vector<double> v(xs.begin(), xs.end());
    std::sort(v.begin(), v.end());
    return v;
}

/// Visits every candidate threshold over N ascending-sorted score lists:
/// -inf, each distinct finite score in increasing order, then one value past
/// the largest finite score (0 if there is none). For each threshold t,
/// `fn(t, below)` receives, per list, the number of scores strictly below t.
/// Under the accept-iff-score>=t rule, `below[i]` is the rejected count.
template <std::size_t N, typename Fn>
void sweep_sorted(const std::array<std::span<const double>, N>& sorted, Fn&& fn) {
    std::array<std::uint64_t, N> below{};
    double t = -std::numeric_limits<double>::infinity();
    double max_finite = -std::numeric_limits<double>::infinity();
    for (const auto& list : sorted) {
        if (!list.empty() && std::isfinite(list.back())) max_finite = std::max(max_finite, list.back());
    }
    fn(t, std::as_const(below));

    for (;;) {
        double next = std::numeric_limits<double>::infinity();
        bool found = false;
        for (std::size_t i = 0; i < N; ++i) {
            std::size_t q = below[i];
            while (q < sorted[i].size() && sorted[i][q] <= t) ++q;
            below[i] = q;
            if (q < sorted[i].size()) {
                next = found ? std::min(next, sorted[i][q]) : sorted[i][q];
                found = true;
            }
        }
        if (!found) break;
        t = next;
        fn(t, std::as_const(below));
    }

    for (std::size_t i = 0; i < N; ++i) below[i] = sorted[i].size();
    fn(std::isfinite(max_finite) ? past_max_threshold(max_finite) : 0.0, std::as_const(below));
}

} // namespace sasv::detail
