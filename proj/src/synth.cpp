#include "sasv/synth.hpp"

#include "sasv/error.hpp"

#include <cmath>
#include <string>

namespace sasv::synth {

double portable_log(double x) noexcept {
    if (!(x > 0.0)) return x == 0.0 ? -HUGE_VAL : std::nan("");
    if (std::isinf(x)) return x;

    // x = m * 2^e with m in [sqrt(1/2), sqrt(2)).
    int e = 0;
    double m = std::frexp(x, &e);
    if (m < 0.70710678118654752440) {
        m *= 2.0;
        --e;
    }
    // log(m) = 2 atanh(s), s = (m - 1) / (m + 1), |s| < 0.1716.
    const double s = (m - 1.0) / (m + 1.0);
    const double s2 = s * s;
    double series = 1.0 / 23.0;
    for (int k = 21; k >= 1; k -= 2) series = series * s2 + 1.0 / k;
    const double log_m = 2.0 * s * series;

    // ln 2 split so that e * kLn2Hi is exact.
    constexpr double kLn2Hi = 6.93147180369123816490e-01;
    constexpr double kLn2Lo = 1.90821492927058770002e-10;
    const double de = static_cast<double>(e);
    return de * kLn2Hi + (log_m + de * kLn2Lo);
}

double GaussianSource::next() noexcept {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    for (;;) {
        const double u = 2.0 * rng_.uniform() - 1.0;
        const double v = 2.0 * rng_.uniform() - 1.0;
        const double s = u * u + v * v;
        if (s >= 1.0 || s == 0.0) continue;
        const double f = std::sqrt(-2.0 * portable_log(s) / s);
        spare_ = v * f;
        return u * f;
    }
}

void validate(const ClassDistribution& d) {
    if (!std::isfinite(d.mean)) throw InvalidDistributionError("mean must be finite");
    if (!(d.stddev > 0.0) || !std::isfinite(d.stddev)) {
        throw InvalidDistributionError("stddev must be positive and finite");
    }
    if (d.count < 1) throw InvalidDistributionError("count must be at least 1");
}

void validate(const DualClassDistribution& d) {
    validate(ClassDistribution{d.asv_mean, d.asv_stddev, d.count});
    validate(ClassDistribution{d.cm_mean, d.cm_stddev, d.count});
    if (!(d.correlation >= -1.0 && d.correlation <= 1.0)) {
        throw InvalidDistributionError("correlation must lie in [-1, 1]");
    }
}

ScoreSet generate_single(std::uint64_t seed, const ClassDistribution& tar, const ClassDistribution& non,
                         const ClassDistribution& spf) {
    validate(tar);
    validate(non);
    validate(spf);
    GaussianSource g(seed);
    auto draw = [&](const ClassDistribution& d) {
        std::vector<double> out(d.count);
        for (auto& x : out) x = d.mean + d.stddev * g.next();
        return out;
    };
    auto t = draw(tar);
    auto n = draw(non);
    auto s = draw(spf);
    return ScoreSet(std::move(t), std::move(n), std::move(s));
}

DualScoreSet generate_dual(std::uint64_t seed, const DualClassDistribution& tar, const DualClassDistribution& non,
                           const DualClassDistribution& spf, bool independent) {
    validate(tar);
    validate(non);
    validate(spf);
    GaussianSource g(seed);
    std::vector<DualScore> trials;
    trials.reserve(tar.count + non.count + spf.count);
    auto draw = [&](TrialClass label, const DualClassDistribution& d) {
        const double rho = independent ? 0.0 : d.correlation;
        const double rest = std::sqrt(1.0 - rho * rho);
        for (std::size_t i = 0; i < d.count; ++i) {
            const double z_asv = g.next();
            const double z_cm = g.next();
            const double cm_noise = independent ? z_cm : rho * z_asv + rest * z_cm;
            trials.push_back({label, d.asv_mean + d.asv_stddev * z_asv, d.cm_mean + d.cm_stddev * cm_noise});
        }
    };
    draw(TrialClass::Target, tar);
    draw(TrialClass::NonTarget, non);
    draw(TrialClass::Spoof, spf);
    return DualScoreSet(std::move(trials));
}

} // namespace sasv::synth
