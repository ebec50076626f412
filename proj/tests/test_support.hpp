#pragma once

// Random inputs for property-style tests.

#include "sasv/synth.hpp"
#include "sasv/trialdata.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace sasv::testkit {

class RandomInputs {
public:
    explicit RandomInputs(std::uint64_t seed) : rng_(seed), gauss_(seed ^ 0x5DEECE66DULL) {}

    std::size_t size_in(std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(rng_.next() % (hi - lo + 1));
    }

    double uniform() { return rng_.uniform(); }

    /// Gaussian class scores; with `discrete`, scores are rounded to a coarse
    /// grid so that ties within and across classes are common.
    std::vector<double> scores(std::size_t n, double mean, bool discrete) {
        std::vector<double> out(n);
        for (auto& x : out) {
            x = mean + gauss_.next();
            if (discrete) x = std::round(x * 4.0) / 4.0;
        }
        return out;
    }

    ScoreSet score_set(std::size_t max_per_class, bool discrete) {
        auto tar = scores(size_in(1, max_per_class), 1.0 + 2.0 * uniform(), discrete);
        auto non = scores(size_in(1, max_per_class), 0.0, discrete);
        auto spf = scores(size_in(1, max_per_class), 2.0 * uniform(), discrete);
        return ScoreSet(std::move(tar), std::move(non), std::move(spf));
    }

    DualScoreSet dual_set(std::size_t max_per_class, bool discrete) {
        std::vector<DualScore> trials;
        auto add = [&](TrialClass c, double asv_mean, double cm_mean) {
            const auto n = size_in(1, max_per_class);
            const auto a = scores(n, asv_mean, discrete);
            const auto m = scores(n, cm_mean, discrete);
            for (std::size_t i = 0; i < n; ++i) trials.push_back({c, a[i], m[i]});
        };
        add(TrialClass::Target, 2.0, 1.5);
        add(TrialClass::NonTarget, 0.0, 1.5);
        add(TrialClass::Spoof, 1.5 * uniform(), -0.5);
        return DualScoreSet(std::move(trials));
    }

    /// Random valid cost model with strictly positive priors and costs.
    CostModel cost_model() {
        const double a = 0.05 + uniform();
        const double b = 0.05 + uniform();
        const double c = 0.05 + uniform();
        const double sum = a + b + c;
        CostModel m;
        m.pi_tar = a / sum;
        m.pi_non = b / sum;
        m.pi_spf = 1.0 - m.pi_tar - m.pi_non;
        m.c_miss = 0.1 + 10.0 * uniform();
        m.c_fa_non = 0.1 + 10.0 * uniform();
        m.c_fa_spf = 0.1 + 10.0 * uniform();
        return m;
    }

private:
    synth::SplitMix64 rng_;
    synth::GaussianSource gauss_;
};

/// Strictly increasing maps used for invariance checks.
inline std::vector<std::function<double(double)>> increasing_transforms() {
    return {
        [](double x) { return 3.0 * x - 7.0; },
        [](double x) { return std::exp(x / 4.0); },
        [](double x) { return x * x * x + x; },
        [](double x) { return std::atan(x / 8.0); },
        [](double x) { return std::sinh(x / 3.0); },
        [](double x) { return 0.5 * x + 100.0; },
        [](double x) { return std::cbrt(x); },
        [](double x) { return x < 0 ? x : 10.0 * x; },
        [](double x) { return std::log1p(std::exp(x)); },
        [](double x) { return -1.0 / (x + 50.0); },
    };
}

/// Strictly increasing map drawn from a few parametric families with random
/// parameters.
inline std::function<double(double)> random_increasing_transform(RandomInputs& in) {
    const double a = 0.05 + in.uniform();
    const double b = 20.0 * in.uniform() - 10.0;
    switch (in.size_in(0, 6)) {
    case 0: return [=](double x) { return 10.0 * a * x + b; };
    case 1: return [=](double x) { return std::exp(a * x); };
    case 2: return [=](double x) { return x * x * x + a * x + b; };
    case 3: return [=](double x) { return std::atan(a * x / 4.0); };
    case 4: return [=](double x) { return x < b / 5.0 ? x : b / 5.0 + 20.0 * a * (x - b / 5.0); };
    case 5: return [=](double x) { return std::sinh(a * x); };
    default: return [=](double x) { return std::log1p(std::exp(a * x + b / 10.0)); };
    }
}

inline std::vector<double> mapped(const std::vector<double>& xs, const std::function<double(double)>& f) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(std::isfinite(x) ? f(x) : x);
    return out;
}

inline ScoreSet mapped(const ScoreSet& s, const std::function<double(double)>& f) {
    return ScoreSet(mapped(s.tar(), f), mapped(s.non(), f), mapped(s.spf(), f));
}

/// True when f keeps the distinct finite pooled scores of `s` strictly ordered
/// in floating point (rounding can merge very close values).
inline bool preserves_order(const ScoreSet& s, const std::function<double(double)>& f) {
    std::vector<double> all;
    for (auto* l : {&s.tar(), &s.non(), &s.spf()}) all.insert(all.end(), l->begin(), l->end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::size_t i = 1; i < all.size(); ++i) {
        if (!(f(all[i - 1]) < f(all[i]))) return false;
    }
    return true;
}

} // namespace sasv::testkit
