#include "sasv/errcurves.hpp"

#include "sasv/detail/sweep.hpp"
#include "sasv/error.hpp"
#include "sasv/numfmt.hpp"

#include <ostream>
#include <string>

namespace sasv {

Rate rate_at(std::span<const double> scores, RateKind kind, double t) {
    if (scores.empty()) throw EmptyClassError("cannot compute a rate over an empty score list");
    std::uint64_t accepted = 0;
    for (double s : scores) {
        if (s >= t) ++accepted;
    }
    const auto n = static_cast<std::uint64_t>(scores.size());
    return kind == RateKind::FalseAlarm ? Rate{accepted, n} : Rate{n - accepted, n};
}

void require_nonempty(const ScoreSet& s, std::initializer_list<TrialClass> classes) {
    for (auto c : classes) {
        if (s.of(c).empty()) {
            throw EmptyClassError("no " + std::string(to_string(c)) + " scores");
        }
    }
}

std::vector<double> candidate_thresholds(const ScoreSet& s) {
    std::vector<double> out;
    const auto tar = detail::sorted_copy(s.tar());
    const auto non = detail::sorted_copy(s.non());
    const auto spf = detail::sorted_copy(s.spf());
    detail::sweep_sorted<3>({tar, non, spf}, [&](double t, const auto&) { out.push_back(t); });
    return out;
}

RateCurve build_curve(const ScoreSet& s, std::initializer_list<TrialClass> required) {
    require_nonempty(s, required);
    const auto tar = detail::sorted_copy(s.tar());
    const auto non = detail::sorted_copy(s.non());
    const auto spf = detail::sorted_copy(s.spf());

    RateCurve c;
    c.n_tar_ = tar.size();
    c.n_non_ = non.size();
    c.n_spf_ = spf.size();
    detail::sweep_sorted<3>({tar, non, spf}, [&](double t, const auto& below) {
        c.thresholds_.push_back(t);
        c.miss_.push_back(below[0]);
        c.accepted_non_.push_back(c.n_non_ - below[1]);
        c.accepted_spf_.push_back(c.n_spf_ - below[2]);
    });
    return c;
}

void write_curve_csv(std::ostream& out, const RateCurve& curve) {
    out << "threshold,p_miss,p_fa_non,p_fa_spf\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        out << format_real(curve.thresholds()[i]) << ',' << format_sig(curve.p_miss(i).value(), 12) << ','
            << format_sig(curve.p_fa_non(i).value(), 12) << ',' << format_sig(curve.p_fa_spf(i).value(), 12)
            << '\n';
    }
}

} // namespace sasv
