#pragma once

#include "sasv/trialdata.hpp"

#include <span>

namespace sasv {

struct EerResult {
    double eer = 0.0;
    double threshold = 0.0;
};

/// Equal error rate of a positive-vs-negative score pair.
///
/// The operating points (P_fa(t), P_miss(t)) are taken at every candidate
/// threshold in increasing order, with accept-iff-score>=t. The first point
/// where P_miss - P_fa >= 0 is located: if the difference is exactly zero
/// there, that point's rate is the EER; otherwise the EER is read off the
/// straight segment joining it to the previous point, and the threshold is
/// interpolated linearly on the same segment (or the later threshold when
/// the earlier one is -inf). The EER depends on the rate sequence only, so
/// it is invariant under strictly increasing score transforms.
EerResult eer_two_class(std::span<const double> pos, std::span<const double> neg);

/// Target vs non-target. Spoof scores are ignored.
EerResult sv_eer(const ScoreSet& s);

/// Target vs spoof. Non-target scores are ignored.
EerResult spf_eer(const ScoreSet& s);

/// Target vs the pooled non-target and spoof scores. The pooled negative
/// class mixes the two in their empirical proportions, so the value depends
/// on how many trials of each kind the dataset happens to hold; report it
/// only when explicitly asked for.
EerResult sasv_eer(const ScoreSet& s);

} // namespace sasv
