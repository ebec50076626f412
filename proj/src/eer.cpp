#include "sasv/eer.hpp"

#include "sasv/detail/sweep.hpp"
#include "sasv/errcurves.hpp"
#include "sasv/error.hpp"

#include <cmath>

namespace sasv {

EerResult eer_two_class(std::span<const double> pos, std::span<const double> neg) {
    if (pos.empty()) throw EmptyClassError("no positive-class scores for EER");
    if (neg.empty()) throw EmptyClassError("no negative-class scores for EER");
    const auto sp = detail::sorted_copy(pos);
    const auto sn = detail::sorted_copy(neg);
    const auto n_pos = static_cast<std::uint64_t>(sp.size());
    const auto n_neg = static_cast<std::uint64_t>(sn.size());

    struct Point {
        double t;
        std::uint64_t miss;  // positives below t
        std::uint64_t fa;    // negatives at or above t
    };
    Point prev{};
    bool have_prev = false;
    bool done = false;
    EerResult result;

    detail::sweep_sorted<2>({sp, sn}, [&](double t, const auto& below) {
        if (done) return;
        const Point cur{t, below[0], n_neg - below[1]};
        // Sign of P_miss - P_fa in exact integer arithmetic.
        const auto lhs = static_cast<unsigned __int128>(cur.miss) * n_neg;
        const auto rhs = static_cast<unsigned __int128>(cur.fa) * n_pos;
        if (lhs < rhs) {
            prev = cur;
            have_prev = true;
            return;
        }
        done = true;
        const double m1 = Rate{cur.miss, n_pos}.value();
        if (lhs == rhs || !have_prev) {
            result = {m1, t};
            return;
        }
        const double m0 = Rate{prev.miss, n_pos}.value();
        const double f0 = Rate{prev.fa, n_neg}.value();
        const double f1 = Rate{cur.fa, n_neg}.value();
        const double d0 = m0 - f0;  // < 0
        const double d1 = m1 - f1;  // > 0
        const double lambda = -d0 / (d1 - d0);
        result.eer = m0 + lambda * (m1 - m0);
        result.threshold = std::isfinite(prev.t) ? prev.t + lambda * (t - prev.t) : t;
    });
    return result;
}

EerResult sv_eer(const ScoreSet& s) {
    require_nonempty(s, {TrialClass::Target, TrialClass::NonTarget});
    return eer_two_class(s.tar(), s.non());
}

EerResult spf_eer(const ScoreSet& s) {
    require_nonempty(s, {TrialClass::Target, TrialClass::Spoof});
    return eer_two_class(s.tar(), s.spf());
}

EerResult sasv_eer(const ScoreSet& s) {
    require_nonempty(s, {TrialClass::Target});
    std::vector<double> negatives;
    negatives.reserve(s.non().size() + s.spf().size());
    negatives.insert(negatives.end(), s.non().begin(), s.non().end());
    negatives.insert(negatives.end(), s.spf().begin(), s.spf().end());
    if (negatives.empty()) throw EmptyClassError("no nontarget or spoof scores");
    return eer_two_class(s.tar(), negatives);
}

} // namespace sasv
