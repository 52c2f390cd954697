#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "lsrmt/lawley_bias.hpp"
#include "lsrmt/shrinkage.hpp"

using namespace lsrmt;

TEST(ShrinkageCoefficient, HandBlock) {
    const EigenSpectrum s({5.0, 2.0, 1.0, 1.0}, 100);
    const auto c = shrinkage_coefficient(s, 2);
    EXPECT_NEAR(c.alpha_ls, 22.0 / (101.0 * (6.0 - 16.0 / 3.0)), 1e-14);
    EXPECT_NEAR(c.alpha_ls, 0.32673267326732663, 1e-14);
    EXPECT_DOUBLE_EQ(c.beta_ls, c.alpha_ls);
    EXPECT_EQ(c.indicator, 1);
    EXPECT_NEAR(c.z, 1.125, 1e-15);
    EXPECT_NEAR(c.tau_hat, 4.0 / 3.0, 1e-15);
}

TEST(ShrinkageCoefficient, FlatBlockIsGuarded) {
    const EigenSpectrum s({9.0, 2.0, 2.0, 2.0, 2.0}, 50);
    const auto c = shrinkage_coefficient(s, 2);
    EXPECT_TRUE(std::isinf(c.alpha_ls));
    EXPECT_EQ(c.beta_ls, 1.0);
    EXPECT_EQ(c.indicator, 0);
    EXPECT_DOUBLE_EQ(c.tau_hat, 2.0);
}

TEST(ShrinkageCoefficient, ZeroBlockIsDegenerate) {
    const EigenSpectrum s({3.0, 0.0, 0.0}, 10);
    EXPECT_THROW(shrinkage_coefficient(s, 2), DegenerateSpectrum);
    EXPECT_THROW(shrinkage_coefficient(s, 0), InvalidInput);
    EXPECT_THROW(shrinkage_coefficient(s, 4), InvalidInput);
}

TEST(ShrinkageCoefficient, ScaleInvariant) {
    const auto base = simulate_spectrum({30, 60, {5.0, 2.0}, 1.0}, 77);
    for (double c : {1e-3, 0.37, 4.0, 1e5}) {
        std::vector<double> v;
        for (double l : base.values) v.push_back(c * l);
        const EigenSpectrum scaled(v, base.n);
        for (int k : {1, 2, 5, 29}) {
            const auto a = shrinkage_coefficient(base, k), b = shrinkage_coefficient(scaled, k);
            EXPECT_NEAR(b.alpha_ls, a.alpha_ls, 1e-10 * a.alpha_ls);
            EXPECT_NEAR(b.beta_ls, a.beta_ls, 1e-10);
            EXPECT_EQ(b.indicator, a.indicator);
            EXPECT_NEAR(b.z, a.z, 1e-12 * a.z);
        }
    }
}

TEST(ShrinkageCoefficient, BetaAndIndicatorAgree) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = simulate_spectrum({20, 15, {3.0}, 1.0}, seed);
        for (int k = 1; k <= 20; ++k) {
            if (s.l(k) == 0.0) break;
            const auto c = shrinkage_coefficient(s, k);
            EXPECT_GT(c.beta_ls, 0.0);
            EXPECT_LE(c.beta_ls, 1.0);
            EXPECT_EQ(c.indicator == 0, c.beta_ls == 1.0);
        }
    }
}

TEST(Taylor, ClosedForms) {
    const auto t = taylor_coefficients(98, 51, 2);
    EXPECT_NEAR(t.gamma, 50.0 / 99.0, 1e-15);
    EXPECT_NEAR(t.h0, -0.01, 1e-15);
    EXPECT_NEAR(t.z0, 1.0 + 50.0 / 99.0, 1e-15);
}

TEST(CorrectionFactors, HandValue) {
    const auto f = compute_correction_factors(98, 51, 2, 1);
    EXPECT_NEAR(f.P, 1.0 - 0.01 - 2.0 * 99.0 * 99.0 / (1e6 * 2500.0), 1e-15);
    EXPECT_NEAR(f.P, 0.9899921592, 1e-10);
    EXPECT_NEAR(f.G, (51.0 / 98.0) / 2500.0, 1e-18);
}

TEST(CorrectionFactors, IndicatorOff) {
    const auto f = compute_correction_factors(40, 30, 3, 0);
    EXPECT_EQ(f.P, 1.0);
    EXPECT_EQ(f.Q, 1.0);
    EXPECT_EQ(f.B, 0.0);
    EXPECT_GT(f.G, 0.0);
}

TEST(CorrectionFactors, AgreeWithTaylorMoments) {
    // P = E[1 + h], Q = E[(1 + h)^2] from the second-order expansion with
    // Var(z) = 2 gamma^2 / m^2
    for (int n : {5, 40, 200, 3000})
        for (int p : {4, 33, 150})
            for (int k : {1, 2, p / 2, p}) {
                const auto t = taylor_coefficients(n, p, k);
                const double m = p - k + 1.0;
                const double var = 2.0 * t.gamma * t.gamma / (m * m);
                const double eh = t.h0 + 0.5 * t.h2 * var;
                const double eh2 = t.h0 * t.h0 + t.h1 * t.h1 * var + t.h0 * t.h2 * var;
                const auto f = compute_correction_factors(n, p, k, 1);
                EXPECT_NEAR(f.P, 1.0 + eh, 1e-13);
                EXPECT_NEAR(f.Q, 1.0 + 2.0 * eh + eh2, 1e-13);
            }
}

TEST(CorrectionFactors, VarianceNonNegativeOverGrid) {
    for (int n = 4; n <= 10000; n = n * 3 / 2 + 1)
        for (int p = 2; p <= 1000; p = p * 3 / 2 + 1)
            for (int k : {1, std::max(1, p / 3), std::max(1, p - 1), p}) {
                const auto f = compute_correction_factors(n, p, k, 1);
                const double m = p - k + 1.0, r = (n + 1.0) / (n + 2.0), a = 1.0 / (n + 2.0);
                const double closed = 2.0 * std::pow(r, 4) / (m * m) * (1.0 - 2.0 * a * a / (m * m));
                ASSERT_GE(f.B, 0.0) << n << ' ' << p << ' ' << k;
                EXPECT_NEAR(f.B, closed, 1e-12 + 1e-9 * closed);
            }
}

TEST(CorrectedMean, Reductions) {
    auto m = corrected_mean_params(1.3, 0.2, 1.0, 1.0);
    EXPECT_DOUBLE_EQ(m.kappa_ls, 1.3);
    EXPECT_DOUBLE_EQ(m.nu_ls, 0.2);
    m = corrected_mean_params(1.3, 1.7, 1.7, 0.42);
    EXPECT_DOUBLE_EQ(m.nu_ls, 1.7);
    m = corrected_mean_params(1.0, 0.06, 1.0, 0.99);
    EXPECT_NEAR(m.nu_ls, 0.0694, 1e-15);
    EXPECT_THROW(corrected_mean_params(1.0, 0.0, 1.0, 0.0), InvalidInput);
}

TEST(CorrectedMean, AffineInP) {
    const double v = -0.3, s2 = 1.4;
    for (double P : {1e-9, 0.25, 0.5, 1.0}) {
        EXPECT_NEAR(corrected_mean_params(1.0, v, s2, P).nu_ls, P * v + (1.0 - P) * s2, 1e-14);
    }
}

TEST(CorrectedVariance, HandValues) {
    EXPECT_NEAR(corrected_variance(0.1414, 2.0, 1.0, 0.99, 1e-4, 4e-4), 0.020398079592, 1e-14);
    EXPECT_NEAR(corrected_variance(0.0, 0.0, 2.0, 0.0, 0.0, 3e-3), 4.0 * 3e-3, 1e-16);
    EXPECT_NEAR(corrected_variance(0.3, 5.0, 1.0, 1.0, 0.0, 1e-3), 0.09 + 1e-3, 1e-16);
    EXPECT_THROW(corrected_variance(-0.1, 0.0, 1.0, 1.0, 0.0, 1e-3), InvalidInput);
    EXPECT_THROW(corrected_variance(0.1, 0.0, 1.0, 1.0, -1e-9, 1e-3), InvalidInput);
    EXPECT_THROW(corrected_variance(0.1, 0.0, 1.0, 1.0, 0.0, 0.0), InvalidInput);
}

TEST(TestStatistic, Identities) {
    EXPECT_NEAR(test_statistic(0.4 + 1.2 * 1.5, 0.4, 1.2, 1.5), 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(test_statistic(3.0, 0.0, 1.0, 1.0), 2.0);
    EXPECT_THROW(test_statistic(3.0, 0.0, 0.0, 1.0), InvalidInput);
}

TEST(ShrinkageStats, IndicatorOffCollapses) {
    // flat trailing block switches the shrinkage off
    const EigenSpectrum s({6.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 40);
    const SpikedScenario sc{6, 40, {5.0}, 1.0};
    const auto b = bias_terms(sc, 1);
    const SignalModel model{6.0, b.kappa, b.v, b.delta, 1.0};
    const auto st = compute_shrinkage_stats(s, 2, model);
    EXPECT_EQ(st.indicator, 0);
    EXPECT_EQ(st.kappa_ls, b.kappa);
    EXPECT_EQ(st.nu_ls, b.v);
    EXPECT_NEAR(st.zeta * st.zeta, b.delta * b.delta + st.G, 1e-15);
    EXPECT_NEAR(st.omega_ls, st.zeta / st.kappa_ls, 1e-15);
}

TEST(ShrinkageStats, InvariantsOnSimulatedSpectra) {
    const SpikedScenario sc{40, 80, {6.0}, 1.0};
    const auto b = bias_terms(sc, 1);
    const SignalModel model{7.0, b.kappa, b.v, b.delta, 1.0};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto st = compute_shrinkage_stats(simulate_spectrum(sc, seed), 1, model);
        EXPECT_GE(st.B, 0.0);
        EXPECT_GT(st.G, 0.0);
        EXPECT_GE(st.zeta, 0.0);
        EXPECT_GT(st.beta_ls, 0.0);
        EXPECT_LE(st.beta_ls, 1.0);
    }
}
