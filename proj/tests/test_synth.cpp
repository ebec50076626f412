#include "sasv/adcf.hpp"
#include "sasv/error.hpp"
#include "sasv/synth.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace sasv;
using namespace sasv::synth;

namespace {

double correlation(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

void split(const DualScoreSet& d, TrialClass c, std::vector<double>& asv, std::vector<double>& cm) {
    for (const auto& t : d.trials()) {
        if (t.label != c) continue;
        asv.push_back(t.asv);
        cm.push_back(t.cm);
    }
}

} // namespace

TEST(SplitMix64, ReferenceOutputs) {
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
}

TEST(SplitMix64, UniformIsInsideOpenInterval) {
    SplitMix64 rng(5);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(PortableLog, AgreesWithLibm) {
    for (double x : {1e-300, 1e-10, 0.1, 0.5, 0.7, 1.0, 1.5, 2.0, 3.14159, 1e5, 1e300}) {
        EXPECT_NEAR(portable_log(x), std::log(x), 4e-16 * std::max(1.0, std::fabs(std::log(x)))) << x;
    }
    SplitMix64 rng(9);
    for (int i = 0; i < 10000; ++i) {
        const double x = rng.uniform();
        ASSERT_NEAR(portable_log(x), std::log(x), 4e-16 * std::max(1.0, std::fabs(std::log(x))));
    }
    EXPECT_EQ(portable_log(1.0), 0.0);
}

TEST(GaussianSource, MomentsAreStandard) {
    GaussianSource g(3);
    const int n = 200000;
    double sum = 0, sq = 0;
    for (int i = 0; i < n; ++i) {
        const double z = g.next();
        sum += z;
        sq += z * z;
    }
    EXPECT_NEAR(sum / n, 0.0, 0.01);
    EXPECT_NEAR(sq / n, 1.0, 0.01);
}

TEST(GenerateSingle, DeterministicWithRequestedCounts) {
    const ClassDistribution tar{2.0, 1.0, 10}, non{0.0, 1.0, 20}, spf{1.0, 0.5, 30};
    const auto a = generate_single(7, tar, non, spf);
    const auto b = generate_single(7, tar, non, spf);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.tar().size(), 10u);
    EXPECT_EQ(a.non().size(), 20u);
    EXPECT_EQ(a.spf().size(), 30u);
    EXPECT_FALSE(a == generate_single(8, tar, non, spf));
}

TEST(GenerateSingle, FrozenStreamValues) {
    const auto s = generate_single(42, {0.0, 1.0, 2}, {0.0, 1.0, 1}, {0.0, 1.0, 1});
    GaussianSource g(42);
    EXPECT_EQ(s.tar()[0], g.next());
    EXPECT_EQ(s.tar()[1], g.next());
    EXPECT_EQ(s.non()[0], g.next());
    EXPECT_EQ(s.spf()[0], g.next());
}

TEST(GenerateSingle, RejectsInvalidDistributions) {
    EXPECT_THROW(generate_single(1, {0.0, 0.0, 5}, {0, 1, 1}, {0, 1, 1}), InvalidDistributionError);
    EXPECT_THROW(generate_single(1, {0.0, 1.0, 0}, {0, 1, 1}, {0, 1, 1}), InvalidDistributionError);
    EXPECT_THROW(generate_single(1, {std::nan(""), 1.0, 1}, {0, 1, 1}, {0, 1, 1}), InvalidDistributionError);
    EXPECT_THROW(generate_dual(1, {0, 1, 0, 0, 1}, {0, 1, 0, 1, 1}, {0, 1, 0, 1, 1}), InvalidDistributionError);
    EXPECT_THROW(generate_dual(1, {0, 1, 0, 1, 1, 1.5}, {0, 1, 0, 1, 1}, {0, 1, 0, 1, 1}, false),
                 InvalidDistributionError);
}

TEST(GenerateSingle, WellSeparatedClassesGiveZeroCost) {
    const auto s = generate_single(11, {100.0, 0.01, 50}, {0.0, 0.01, 50}, {1.0, 0.01, 50});
    const CostModel adcf1{0.94, 0.01, 0.05, 1, 10, 10};
    EXPECT_EQ(min_adcf(adcf1, s).min_norm_adcf, 0.0);
}

TEST(GenerateDual, DeterministicAndIndependentColumns) {
    const std::size_t n = 4000;
    const DualClassDistribution tar{2, 1, 1, 1, n}, non{0, 1, 1, 1, n}, spf{1, 1, -1, 1, n};
    const auto a = generate_dual(5, tar, non, spf);
    const auto b = generate_dual(5, tar, non, spf);
    ASSERT_EQ(a.size(), 3 * n);
    EXPECT_EQ(a.trials(), b.trials());
    for (auto c : kAllClasses) {
        std::vector<double> asv, cm;
        split(a, c, asv, cm);
        ASSERT_EQ(asv.size(), n);
        EXPECT_LT(std::fabs(correlation(asv, cm)), 5.0 / std::sqrt(static_cast<double>(n)));
    }
}

TEST(GenerateDual, CorrelatedColumnsFollowRequestedCorrelation) {
    const std::size_t n = 20000;
    const DualClassDistribution tar{0, 1, 0, 2, n, 0.8}, non{0, 1, 0, 1, n, -0.5}, spf{0, 1, 0, 1, n, 0.0};
    const auto d = generate_dual(6, tar, non, spf, false);
    const double expected[3] = {0.8, -0.5, 0.0};
    for (auto c : kAllClasses) {
        std::vector<double> asv, cm;
        split(d, c, asv, cm);
        EXPECT_NEAR(correlation(asv, cm), expected[static_cast<int>(c)], 5.0 / std::sqrt(static_cast<double>(n)));
    }
}
