#pragma once

#include "sasv/trialdata.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace sasv::synth {

/// SplitMix64 (Steele, Lea & Flood): state advances by the golden-ratio
/// increment 0x9E3779B97F4A7C15 and each output is mixed with the
/// multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB (shifts 30, 27, 31).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on the open interval (0, 1) from the top 53 bits.
    double uniform() noexcept {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Natural logarithm built from IEEE-exact operations only (frexp, +, *, /),
/// so that it yields the same bits on every conforming platform. Accurate to
/// about one ulp for positive finite input.
double portable_log(double x) noexcept;

/// Standard normal samples by the Marsaglia polar method over SplitMix64
/// uniforms, using portable_log and std::sqrt (correctly rounded by IEEE 754).
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) noexcept : rng_(seed) {}
    double next() noexcept;

private:
    SplitMix64 rng_;
    std::optional<double> spare_;
};

struct ClassDistribution {
    double mean = 0.0;
    double stddev = 1.0;
    std::size_t count = 1;
};

/// Throws InvalidDistributionError unless stddev > 0, count >= 1, all finite.
void validate(const ClassDistribution& d);

/// Gaussian scores per class, drawn target first, then non-target, then
/// spoof from one stream seeded with `seed`.
ScoreSet generate_single(std::uint64_t seed, const ClassDistribution& tar, const ClassDistribution& non,
                         const ClassDistribution& spf);

struct DualClassDistribution {
    double asv_mean = 0.0;
    double asv_stddev = 1.0;
    double cm_mean = 0.0;
    double cm_stddev = 1.0;
    std::size_t count = 1;
    double correlation = 0.0;  ///< used only when the columns are not independent
};

void validate(const DualClassDistribution& d);

/// Paired (ASV, CM) Gaussian scores; trials ordered target, non-target,
/// spoof. When `independent` the two columns use separate normal draws,
/// otherwise the CM draw is mixed with the ASV draw at `correlation`.
DualScoreSet generate_dual(std::uint64_t seed, const DualClassDistribution& tar, const DualClassDistribution& non,
                           const DualClassDistribution& spf, bool independent = true);

} // namespace sasv::synth
