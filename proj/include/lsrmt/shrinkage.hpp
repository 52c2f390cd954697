#pragma once

/** @file
 * Linear-shrinkage correction of the eigenvalue under test.
 *
 * Everything is indexed by the 1-based test index k. The trailing block is
 * l_k, ..., l_p, of length m = p - k + 1, and that block length is used in
 * every dimension-dependent denominator.
 */

#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"
#include "spectrum_model.hpp"

namespace lsrmt {

struct ShrinkageCoefficient {
    double alpha_ls = 0.0;  ///< raw optimal coefficient, may be +inf
    double beta_ls = 1.0;   ///< min(alpha_ls, 1)
    double tau_hat = 0.0;   ///< trailing-block mean
    int indicator = 0;      ///< 1 when beta_ls < 1
    double z = 1.0;         ///< second moment over squared first moment of the block
};

/// Below this fraction of the numerator the dispersion counts as zero.
inline constexpr double shrinkage_dispersion_floor = 1e-12;

inline ShrinkageCoefficient shrinkage_coefficient(const EigenSpectrum& spectrum, int k) {
    if (k < 1 || k > spectrum.p)
        throw InvalidInput("shrinkage_coefficient: k=" + std::to_string(k) + " outside [1, p]");
    const auto m = static_cast<double>(spectrum.p - k + 1);
    double sum = 0.0, sum_sq = 0.0;
    for (int i = k; i <= spectrum.p; ++i) {
        sum += spectrum.l(i);
        sum_sq += spectrum.l(i) * spectrum.l(i);
    }
    if (!(sum > 0.0)) throw DegenerateSpectrum("shrinkage_coefficient: trailing block is all zero");
    const double mean = sum / m;
    double dispersion = 0.0;  // sum_sq - sum^2 / m, without the cancellation
    for (int i = k; i <= spectrum.p; ++i) dispersion += (spectrum.l(i) - mean) * (spectrum.l(i) - mean);

    ShrinkageCoefficient out;
    out.tau_hat = mean;
    out.z = (sum_sq / m) / (mean * mean);
    const double numerator = sum_sq + sum * sum;
    if (dispersion <= shrinkage_dispersion_floor * numerator) {
        out.alpha_ls = std::numeric_limits<double>::infinity();
    } else {
        out.alpha_ls = numerator / ((spectrum.n + 1.0) * dispersion);
    }
    out.beta_ls = std::min(out.alpha_ls, 1.0);
    out.indicator = out.beta_ls < 1.0 ? 1 : 0;
    return out;
}

/// Second-order expansion of h(z) = 1/alpha_LS - 1 around z0 = 1 + gamma.
struct TaylorCoefficients {
    double gamma = 0.0;  ///< (p - k + 1) / (n + 1)
    double z0 = 1.0;
    double h0 = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
};

inline TaylorCoefficients taylor_coefficients(int n, int p, int k) {
    const double n1 = n + 1.0, n2 = n + 2.0;
    TaylorCoefficients c;
    c.gamma = static_cast<double>(p - k + 1) / n1;
    c.z0 = 1.0 + c.gamma;
    c.h0 = -1.0 / n2;
    c.h1 = n1 * n1 / (c.gamma * n2 * n2);
    c.h2 = -2.0 * n1 * n1 / (c.gamma * c.gamma * n2 * n2 * n2);
    return c;
}

struct CorrectionFactors {
    double P = 1.0;  ///< mean of the shrinkage inflation
    double Q = 1.0;  ///< its second moment
    double B = 0.0;  ///< its variance, Q - P^2
    double G = 0.0;  ///< variance factor of the trailing mean
};

inline CorrectionFactors compute_correction_factors(int n, int p, int k, int indicator) {
    if (n < 2 || p < 2 || k < 1 || k > p)
        throw InvalidInput("compute_correction_factors: need n >= 2, p >= 2, 1 <= k <= p");
    const double n1 = n + 1.0, n2 = n + 2.0;
    const double m = p - k + 1.0;
    const double m2 = m * m;
    const double ind = indicator != 0 ? 1.0 : 0.0;

    CorrectionFactors f;
    f.P = 1.0 + (-1.0 / n2 - 2.0 * n1 * n1 / (n2 * n2 * n2 * m2)) * ind;
    f.Q = 1.0 + (-2.0 / n2 - 4.0 * n1 * n1 / (n2 * n2 * n2 * m2) + 1.0 / (n2 * n2) +
                 2.0 * std::pow(n1, 4) / (std::pow(n2, 4) * m2) + 4.0 * n1 * n1 / (std::pow(n2, 4) * m2)) *
                    ind;
    f.B = f.Q - f.P * f.P;
    f.G = (static_cast<double>(p) / n) / m2;
    return f;
}

struct CorrectedMean {
    double kappa_ls = 1.0;
    double nu_ls = 0.0;
};

/// kappa_ls = P kappa, nu_ls = P (v - sigma2_null) + sigma2_null.
inline CorrectedMean corrected_mean_params(double kappa, double v, double sigma2_null, double P) {
    if (!(P > 0.0)) throw InvalidInput("corrected_mean_params: P must be > 0");
    return {P * kappa, P * (v - sigma2_null) + sigma2_null};
}

/// zeta^2 = B delta^2 + delta^2 P^2 + B mean_core^2 + sigma2^2 G.
inline double corrected_variance(double delta, double mean_core, double sigma2, double P, double B, double G) {
    if (!(delta >= 0.0) || !(B >= 0.0) || !(G > 0.0))
        throw InvalidInput("corrected_variance: need delta >= 0, B >= 0, G > 0");
    const double d2 = delta * delta;
    const double zeta2 = B * d2 + d2 * P * P + B * mean_core * mean_core + sigma2 * sigma2 * G;
    if (zeta2 < 0.0) throw NumericError("corrected_variance: negative variance");
    return zeta2;
}

/// z = (l_k - nu_ls) / kappa_ls - sigma2_null, approximately N(lambda_k, omega_ls^2).
inline double test_statistic(double l_k, double nu_ls, double kappa_ls, double sigma2_null) {
    if (!(kappa_ls > 0.0)) throw InvalidInput("test_statistic: kappa_ls must be > 0");
    return (l_k - nu_ls) / kappa_ls - sigma2_null;
}

/// Population-side inputs for the full correction chain at one index.
struct SignalModel {
    double rho = 0.0;     ///< population eigenvalue at the test index
    double kappa = 1.0;   ///< inflation factor
    double v = 0.0;       ///< interaction bias
    double delta = 0.0;   ///< asymptotic spread of l_k
    double sigma2 = 1.0;  ///< noise variance (null side)
};

struct ShrinkageStats {
    int k = 0;
    double alpha_ls = 0.0;
    double beta_ls = 1.0;
    double tau_hat = 0.0;
    int indicator = 0;
    double z = 1.0;
    double P = 1.0, Q = 1.0, B = 0.0, G = 0.0;
    double kappa_ls = 1.0;
    double nu_ls = 0.0;
    double zeta = 0.0;
    double omega_ls = 0.0;
    double delta_rho = 0.0;
};

inline ShrinkageStats compute_shrinkage_stats(const EigenSpectrum& spectrum, int k, const SignalModel& model) {
    const auto coef = shrinkage_coefficient(spectrum, k);
    const auto f = compute_correction_factors(spectrum.n, spectrum.p, k, coef.indicator);
    const auto mean = corrected_mean_params(model.kappa, model.v, model.sigma2, f.P);
    const double mean_core = model.rho * model.kappa + model.v - model.sigma2;

    ShrinkageStats s;
    s.k = k;
    s.alpha_ls = coef.alpha_ls;
    s.beta_ls = coef.beta_ls;
    s.tau_hat = coef.tau_hat;
    s.indicator = coef.indicator;
    s.z = coef.z;
    s.P = f.P;
    s.Q = f.Q;
    s.B = f.B;
    s.G = f.G;
    s.kappa_ls = mean.kappa_ls;
    s.nu_ls = mean.nu_ls;
    s.zeta = std::sqrt(corrected_variance(model.delta, mean_core, model.sigma2, f.P, f.B, f.G));
    s.omega_ls = s.zeta / s.kappa_ls;
    s.delta_rho = (coef.tau_hat - model.sigma2) -
                  (1.0 - coef.beta_ls) * (coef.tau_hat - spectrum.l(k)) * coef.indicator;
    return s;
}

}  // namespace lsrmt
