#include "sasv/adcf.hpp"
#include "sasv/error.hpp"
#include "sasv/synth.hpp"
#include "sasv/tandem.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

using namespace sasv;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
const CostModel kAdcf1{0.94, 0.01, 0.05, 1, 10, 10};
const CostModel kAdcf2{0.98, 0.01, 0.01, 1, 10, 10};

DualScoreSet hand_example() {
    return DualScoreSet({{TrialClass::Target, 1, 1},
                         {TrialClass::Target, -1, 1},
                         {TrialClass::NonTarget, 1, 1},
                         {TrialClass::Spoof, 1, -1}});
}

DualScoreSet with_constant_cm(const DualScoreSet& d, double cm) {
    std::vector<DualScore> out;
    for (auto t : d.trials()) {
        t.cm = cm;
        out.push_back(t);
    }
    return DualScoreSet(std::move(out));
}
} // namespace

TEST(TandemRates, EmpiricalAndGate) {
    const DualScoreSet full({{TrialClass::Target, 1, 1}, {TrialClass::NonTarget, -1, 1}, {TrialClass::Spoof, 1, -1}});
    EXPECT_EQ(tandem_rates_empirical(full, 0, 0).p_miss_tar, 0.0);
    const DualScoreSet cm_rejects({{TrialClass::Target, 1, -0.5}, {TrialClass::NonTarget, -1, 1}, {TrialClass::Spoof, 1, -1}});
    EXPECT_EQ(tandem_rates_empirical(cm_rejects, 0, 0).p_miss_tar, 1.0);

    const auto r = tandem_rates_empirical(hand_example(), 0, 0);
    EXPECT_EQ(r.p_miss_tar, 0.5);
    EXPECT_EQ(r.p_fa_non, 1.0);
    EXPECT_EQ(r.p_fa_spf, 0.0);

    EXPECT_THROW(tandem_rates_empirical(DualScoreSet({{TrialClass::Target, 1, 1}}), 0, 0), EmptyClassError);
}

TEST(TandemRates, AnalyticComposition) {
    const ErrorRates asv{0.1, 0.3, 0.4};
    const auto perfect = tandem_rates_analytic(asv, {0, 0});
    EXPECT_EQ(perfect.p_miss_tar, 0.1);
    EXPECT_EQ(perfect.p_fa_non, 0.3);
    EXPECT_EQ(perfect.p_fa_spf, 0.0);
    const auto dummy = tandem_rates_analytic(asv, {0, 1});
    EXPECT_EQ(dummy.p_miss_tar, 0.1);
    EXPECT_EQ(dummy.p_fa_non, 0.3);
    EXPECT_EQ(dummy.p_fa_spf, 0.4);
    const auto r = tandem_rates_analytic(asv, {0.2, 0.5});
    EXPECT_NEAR(r.p_miss_tar, 0.28, 1e-15);
    EXPECT_NEAR(r.p_fa_non, 0.24, 1e-15);
    EXPECT_NEAR(r.p_fa_spf, 0.20, 1e-15);
    EXPECT_THROW(tandem_rates_analytic({1.2, 0, 0}, {0, 0}), RangeError);
}

TEST(TandemRates, AnalyticAgreesWithMonteCarloUnderIndependence) {
    // Uniform scores placed so that thresholds of 0.5 give ASV rates
    // (0.1, 0.3, 0.4) and CM rates (0.2, 0.5), with independent draws.
    synth::SplitMix64 rng(2024);
    const std::size_t n = 20000;
    std::vector<DualScore> trials;
    for (std::size_t i = 0; i < n; ++i) trials.push_back({TrialClass::Target, rng.uniform() + 0.4, rng.uniform() + 0.3});
    for (std::size_t i = 0; i < n; ++i) trials.push_back({TrialClass::NonTarget, rng.uniform() - 0.2, rng.uniform() + 0.3});
    for (std::size_t i = 0; i < n; ++i) trials.push_back({TrialClass::Spoof, rng.uniform() - 0.1, rng.uniform()});
    const auto mc = tandem_rates_empirical(DualScoreSet(std::move(trials)), 0.5, 0.5);
    const auto expected = tandem_rates_analytic({0.1, 0.3, 0.4}, {0.2, 0.5});
    auto se = [&](double p) { return std::sqrt(p * (1.0 - p) / static_cast<double>(n)); };
    EXPECT_NEAR(mc.p_miss_tar, expected.p_miss_tar, 3.0 * se(expected.p_miss_tar));
    EXPECT_NEAR(mc.p_fa_non, expected.p_fa_non, 3.0 * se(expected.p_fa_non));
    EXPECT_NEAR(mc.p_fa_spf, expected.p_fa_spf, 3.0 * se(expected.p_fa_spf));
}

TEST(TandemRates, EmpiricalEqualsAnalyticWhenCmIsConstant) {
    testkit::RandomInputs in(51);
    for (int rep = 0; rep < 20; ++rep) {
        const auto d = with_constant_cm(in.dual_set(30, rep % 2 == 0), 0.25);
        for (double t_asv : {-kInf, -0.5, 0.0, 1.0, 2.5}) {
            for (double t_cm : {-kInf, 0.25, 1.0}) {
                const auto e = tandem_rates_empirical(d, t_asv, t_cm);
                const auto a = tandem_rates_analytic(asv_marginal_rates(d, t_asv), cm_marginal_rates(d, t_cm));
                EXPECT_EQ(e.p_miss_tar, a.p_miss_tar);
                EXPECT_EQ(e.p_fa_non, a.p_fa_non);
                EXPECT_EQ(e.p_fa_spf, a.p_fa_spf);
            }
        }
    }
}

TEST(Tdcf, UnconstrainedExamples) {
    EXPECT_EQ(tdcf_unconstrained(kAdcf1, {0, 0, 0}), 0.0);
    EXPECT_DOUBLE_EQ(tdcf_unconstrained(kAdcf1, {0, 1, 1}), 0.6);
    EXPECT_THROW(tdcf_unconstrained(kAdcf1, {0, 2, 0}), RangeError);
}

TEST(Tdcf, ConstrainedCoefficients) {
    const auto perfect = constrained_coeffs(kAdcf1, {0, 0, 0});
    EXPECT_EQ(perfect.c0, 0.0);
    EXPECT_EQ(perfect.c1, 0.94);
    EXPECT_EQ(perfect.c2, 0.0);

    const auto c = constrained_coeffs(kAdcf1, {0.1, 0.05, 0.6});
    EXPECT_NEAR(c.c0, 0.099, 1e-15);
    EXPECT_NEAR(c.c1, 0.841, 1e-15);
    EXPECT_NEAR(c.c2, 0.30, 1e-15);
    EXPECT_NEAR(tdcf_constrained(c, 0.2, 0.1), 0.2972, 1e-15);
    EXPECT_EQ(tdcf_constrained(c, 1, 0), c.c0 + c.c1);
    EXPECT_EQ(tdcf_constrained({0, 1, 0}, 0, 0.7), 0.0);

    const auto worst = constrained_coeffs(kAdcf1, {1, 1, 1});
    EXPECT_NEAR(worst.c0, 0.94 + 0.1, 1e-15);
    EXPECT_NEAR(worst.c1, -0.1, 1e-15);
    EXPECT_NEAR(worst.c2, 0.5, 1e-15);
    EXPECT_THROW(tdcf_constrained(c, -0.1, 0), RangeError);
}

TEST(Tdcf, ConstrainedEqualsUnconstrainedOverRateGrid) {
    testkit::RandomInputs in(52);
    for (int rep = 0; rep < 20; ++rep) {
        const auto m = validate_cost_model(in.cost_model());
        const ErrorRates asv{in.uniform(), in.uniform(), in.uniform()};
        const auto c = constrained_coeffs(m, asv);
        for (int i = 0; i <= 10; ++i) {
            for (int j = 0; j <= 10; ++j) {
                const CmRates cm{i / 10.0, j / 10.0};
                EXPECT_NEAR(tdcf_constrained(c, cm.p_miss, cm.p_fa),
                            tdcf_unconstrained(m, tandem_rates_analytic(asv, cm)), 1e-12);
            }
        }
    }
}

TEST(MinTdcf, SeparableDataCostsNothing) {
    const DualScoreSet d({{TrialClass::Target, 3, 3},
                          {TrialClass::Target, 4, 2},
                          {TrialClass::NonTarget, 0, 3},
                          {TrialClass::Spoof, 3.5, -1}});
    EXPECT_EQ(min_tdcf(kAdcf1, d).min_norm_tdcf, 0.0);
}

TEST(MinTdcf, DummyCmCollapsesToAdcf) {
    testkit::RandomInputs in(53);
    for (int rep = 0; rep < 20; ++rep) {
        const auto d = with_constant_cm(in.dual_set(40, rep % 2 == 0), 1e300);
        for (const auto& m : {kAdcf1, kAdcf2}) {
            EXPECT_EQ(min_tdcf(m, d).min_norm_tdcf, min_adcf(m, d.asv_scores()).min_norm_adcf);
        }
    }
}

TEST(MinTdcf, CmAtMinusInfinityReproducesAdcfAtEveryAsvThreshold) {
    testkit::RandomInputs in(54);
    for (int rep = 0; rep < 10; ++rep) {
        const auto d = in.dual_set(30, rep % 2 == 1);
        const auto asv = d.asv_scores();
        const auto single = min_adcf(kAdcf1, asv, true);
        for (const auto& row : *single.curve) {
            const auto frozen = min_tdcf(kAdcf1, d, row.threshold, true);
            const auto& rows = *frozen.curve;
            ASSERT_EQ(rows.front().t_cm, -kInf);
            EXPECT_EQ(rows.front().tdcf_norm, row.adcf_norm);
        }
    }
}

TEST(MinTdcf, GridMinimumMatchesOracleAndBoundsFrozenSearch) {
    testkit::RandomInputs in(55);
    for (int rep = 0; rep < 20; ++rep) {
        const auto d = in.dual_set(12, rep % 2 == 0);
        const auto m = validate_cost_model(in.cost_model());
        const auto grid = min_tdcf(m, d);
        EXPECT_NEAR(grid.min_norm_tdcf, oracle::min_tdcf(m, d), 1e-12);
        EXPECT_LE(grid.min_norm_tdcf, 1.0);
        for (double t : candidate_thresholds(d.asv_scores())) {
            EXPECT_LE(grid.min_norm_tdcf, min_tdcf(m, d, t).min_norm_tdcf);
        }
        EXPECT_EQ(min_tdcf(m, d, grid.t_asv).min_norm_tdcf, grid.min_norm_tdcf);
    }
}

TEST(MinTdcf, SharedSweepEqualsSeparateCallsAndCurveIsComplete) {
    testkit::RandomInputs in(56);
    const auto d = in.dual_set(15, true);
    const std::vector<CostModel> models{kAdcf1, kAdcf2};
    const auto many = min_tdcf(models, d, std::nullopt, true);
    for (std::size_t i = 0; i < models.size(); ++i) {
        const auto one = min_tdcf(models[i], d, std::nullopt, true);
        EXPECT_EQ(many[i].min_norm_tdcf, one.min_norm_tdcf);
        EXPECT_EQ(many[i].t_asv, one.t_asv);
        EXPECT_EQ(many[i].t_cm, one.t_cm);
        EXPECT_EQ(one.curve->size(),
                  candidate_thresholds(d.asv_scores()).size() * candidate_thresholds(d.cm_scores()).size());
    }
    std::ostringstream out;
    write_tdcf_curve_csv(out, *many[0].curve);
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "t_asv,t_cm,tdcf_norm");
}

TEST(Gate, Examples) {
    const DualScoreSet d({{TrialClass::Target, 1.0, 0.9}, {TrialClass::NonTarget, 0.8, 0.2}});
    EXPECT_EQ(gate_scores(d, GateOrder::CmFirst, 0.5), ScoreSet({1.0}, {-kInf}, {}));
    EXPECT_EQ(gate_scores(d, GateOrder::CmFirst, 0.1), d.asv_scores());
    EXPECT_EQ(gate_scores(d, GateOrder::CmFirst, -kInf), d.asv_scores());
    EXPECT_EQ(gate_scores(d, GateOrder::AsvFirst, 0.9), ScoreSet({0.9}, {-kInf}, {}));
    EXPECT_EQ(gate_score(1.0, 0.5, GateOrder::CmFirst, 0.5), 1.0);
    EXPECT_EQ(gate_score(1.0, 0.5, GateOrder::AsvFirst, 1.5), -kInf);
}

TEST(Gate, RaisingGateNeverAdmitsMoreSpoofs) {
    testkit::RandomInputs in(57);
    for (int rep = 0; rep < 20; ++rep) {
        const auto d = in.dual_set(40, rep % 2 == 0);
        for (auto order : {GateOrder::CmFirst, GateOrder::AsvFirst}) {
            for (double t : {-1.0, 0.0, 1.0}) {
                std::uint64_t prev_rejected = 0;
                for (double gate : {-kInf, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, kInf}) {
                    const auto s = gate_scores(d, order, gate);
                    const auto rejected = s.spf().size() - rate_at(s.spf(), RateKind::FalseAlarm, t).num;
                    EXPECT_GE(rejected, prev_rejected);
                    prev_rejected = rejected;
                }
            }
        }
    }
}
