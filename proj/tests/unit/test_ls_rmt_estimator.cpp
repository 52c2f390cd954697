#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "lsrmt/ls_rmt_estimator.hpp"

using namespace lsrmt;

TEST(LsRmtEstimate, FlatSpectrumIsNoise) {
    const EigenSpectrum s(std::vector<double>(32, 1.0), 64);
    const auto r = ls_rmt_run(s, 0.005, 1.0);
    EXPECT_EQ(r.trace.q_hat, 0);
    ASSERT_EQ(r.steps.size(), 1u);
    EXPECT_EQ(r.steps[0].indicator, 0);
    EXPECT_EQ(r.steps[0].nu_ls_hat, 0.0);
}

TEST(LsRmtStep, FirstStepBiasWithKnownNoise) {
    const auto s = simulate_spectrum({40, 80, {5.0}, 1.0}, 21);
    const auto rec = ls_rmt_step(s, 1, 0.005, 1.0);
    EXPECT_EQ(rec.v_hat, 0.0);
    EXPECT_EQ(rec.sigma2_null, 1.0);
    EXPECT_EQ(rec.sigma2_signal, 1.0);
    ASSERT_EQ(rec.indicator, 1);
    EXPECT_LT(rec.P, 1.0);
    EXPECT_NEAR(rec.nu_ls_hat, (1.0 - rec.P) * 1.0, 1e-15);
    EXPECT_GT(rec.nu_ls_hat, 0.0);
    EXPECT_NEAR(rec.threshold, detection_threshold(1.0, 80, 40, 0.005), 1e-15);
}

TEST(LsRmtStep, AcceptanceInvariant) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto s = simulate_spectrum({24, 48, {6.0, 3.0, 1.5}, 1.0}, seed);
        const auto run = ls_rmt_run(s, 0.005);
        for (std::size_t i = 0; i < run.steps.size(); ++i) {
            const auto& r = run.steps[i];
            EXPECT_EQ(r.accepted, r.l_k - r.nu_ls_hat > r.threshold);
            EXPECT_GT(r.threshold, 0.0);
            EXPECT_GT(r.sigma2_null, 0.0);
            EXPECT_EQ(r.accepted, i + 1 < run.steps.size() || run.trace.loop_bound_hit);
            EXPECT_EQ(run.trace.per_k[i].accepted, r.accepted);
        }
        EXPECT_EQ(run.trace.q_hat, static_cast<int>(run.steps.size()) - 1);
    }
}

TEST(LsRmtStep, HandDecision) {
    // l_1 = 5 with nu = 0.4 against phi = 3.08: 4.6 > 3.08
    LsRmtStepRecord rec;
    rec.l_k = 5.0;
    rec.nu_ls_hat = 0.4;
    rec.threshold = 3.08;
    EXPECT_TRUE(rec.l_k - rec.nu_ls_hat > rec.threshold);
}

TEST(LsRmtStep, NullSideNoiseAtFirstStepIsGrandMean) {
    const auto s = simulate_spectrum({30, 60, {4.0}, 1.0}, 4);
    const auto rec = ls_rmt_step(s, 1, 0.005);
    const double mean = std::accumulate(s.values.begin(), s.values.end(), 0.0) / s.p;
    EXPECT_DOUBLE_EQ(rec.sigma2_null, mean);
    EXPECT_DOUBLE_EQ(rec.sigma2_signal, solve_rho_sigma(s, 1).sigma2_hat);
}

TEST(LsRmtStep, InteractionBiasFromEarlierSignals) {
    const auto s = simulate_spectrum({30, 60, {20.0, 8.0}, 1.0}, 6);
    const auto rec = ls_rmt_step(s, 2, 0.005);
    const auto fit = solve_rho_sigma(s, 2);
    EXPECT_NEAR(rec.v_hat, fit.rho_hats[1] / 60.0 * fit.rho_hats[0] / (fit.rho_hats[1] - fit.rho_hats[0]), 1e-14);
    EXPECT_LT(rec.v_hat, 0.0);
    EXPECT_DOUBLE_EQ(rec.sigma2_null, solve_rho_sigma(s, 1).sigma2_hat);
}

TEST(LsRmtStep, SignalFloorKeepsKappaFinite) {
    // l_k barely above the bulk: rho_hat - sigma2 can collapse
    std::vector<double> v(10, 1.0);
    v[0] = 1.0001;
    const EigenSpectrum s(v, 20);
    const auto rec = ls_rmt_step(s, 1, 0.005, 1.0);
    EXPECT_TRUE(std::isfinite(rec.kappa_hat));
    EXPECT_LE(rec.kappa_hat, 1.0 + 9.0 / (20.0 * lambda_hat_floor) * (1.0 + 1e-12));
}

TEST(LsRmtStep, RangeChecked) {
    const EigenSpectrum s({3.0, 2.0, 1.0}, 10);
    EXPECT_THROW(ls_rmt_step(s, 0, 0.005), InvalidInput);
    EXPECT_THROW(ls_rmt_step(s, 3, 0.005), InvalidInput);
    EXPECT_THROW(ls_rmt_step(s, 1, 0.005, -1.0), InvalidInput);
    EXPECT_THROW(ls_rmt_run(s, 1.2), InvalidInput);
}

TEST(LsRmtEstimate, Deterministic) {
    const auto s = simulate_spectrum({48, 96, {10, 9, 8, 2.5}, 1.0}, 12);
    const auto a = ls_rmt_run(s, 0.005), b = ls_rmt_run(s, 0.005);
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        EXPECT_EQ(a.steps[i].nu_ls_hat, b.steps[i].nu_ls_hat);
        EXPECT_EQ(a.steps[i].threshold, b.steps[i].threshold);
    }
    EXPECT_EQ(a.trace.q_hat, b.trace.q_hat);
}

TEST(LsRmtEstimate, ShrinkageOffMatchesNullSideRmt) {
    // near-flat spectra keep the indicator off at k = 1, so nu_1 = 0 and the
    // decision must coincide with the p - k + 1 dimension RMT test
    int accepted = 0, rejected = 0;
    for (double x = 1.01; x < 4.0; x += 0.01) {
        std::vector<double> v(20, 1.0);
        v[0] = x;
        const EigenSpectrum s(v, 40);
        const auto rec = ls_rmt_step(s, 1, 0.005, 1.0);
        if (rec.indicator != 0) continue;
        EXPECT_EQ(rec.nu_ls_hat, 0.0);
        const auto rmt = rmt_estimate(s, 0.005, 1.0, {ThresholdDimension::null_side});
        EXPECT_EQ(rec.threshold, rmt.per_k[0].threshold);
        EXPECT_EQ(rec.accepted, rmt.per_k[0].accepted) << "x=" << x;
        (rec.accepted ? accepted : rejected) += 1;
    }
    EXPECT_GT(accepted, 0);
    EXPECT_GT(rejected, 0);
}

TEST(LsRmtEstimate, NestedInAlphaWithKnownNoise) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto s = simulate_spectrum({32, 64, {4.0, 2.0, 1.2}, 1.0}, seed);
        int prev = 0;
        for (double a : {1e-4, 1e-3, 0.005, 0.05, 0.2}) {
            const int q = ls_rmt_estimate(s, a, 1.0).q_hat;
            EXPECT_LE(prev, q);
            prev = q;
        }
    }
}

TEST(LsRmtEstimate, FindsStrongSignals) {
    const auto s = simulate_spectrum({64, 128, {150, 120, 100}, 1.0}, 9);
    EXPECT_EQ(ls_rmt_estimate(s, 0.005).q_hat, 3);
    EXPECT_EQ(ls_rmt_estimate(s, 0.005, 1.0).q_hat, 3);
}
