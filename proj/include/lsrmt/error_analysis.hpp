#pragma once

/** @file
 * Closed-form under/over/mis-estimation probabilities for the RMT and LS-RMT
 * decisions at the true signal count q, plus the classic AIC/MDL baselines.
 */

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "lawley_bias.hpp"
#include "shrinkage.hpp"
#include "spectrum_model.hpp"
#include "tracy_widom.hpp"

namespace lsrmt {

/// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

inline double clip01(double x) { return std::clamp(x, 0.0, 1.0); }

/// Pr{eta < ((phi + nu_ls)/kappa_ls - sigma2 - lambda_q) / omega_ls}.
inline double p_ue_ls_rmt(double omega_ls, double kappa_ls, double lambda_q, double sigma2, double phi,
                          double nu_ls) {
    if (!(omega_ls > 0.0) || !(kappa_ls > 0.0))
        throw InvalidInput("p_ue_ls_rmt: omega_ls and kappa_ls must be > 0");
    return normal_cdf(((phi + nu_ls) / kappa_ls - sigma2 - lambda_q) / omega_ls);
}

/// alpha + P_UE, clipped to [0, 1].
inline double p_e_ls_rmt(double alpha, double p_ue) { return clip01(alpha + p_ue); }

/// The LS-RMT formula with the bias term dropped.
inline double p_ue_rmt(double omega_ls, double kappa_ls, double lambda_q, double sigma2, double phi) {
    return p_ue_ls_rmt(omega_ls, kappa_ls, lambda_q, sigma2, phi, 0.0);
}

/// 1 - F_1(s(alpha) - nu_ls / (sigma2 sigma_np)).
inline double p_oe_rmt(double sigma_np, double sigma2, double nu_ls, double alpha,
                       const TwQuantileTable& table = TwQuantileTable::builtin()) {
    if (!(sigma_np > 0.0) || !(sigma2 > 0.0)) throw InvalidInput("p_oe_rmt: sigma_np and sigma2 must be > 0");
    const double s = tw_quantile(alpha, FieldType::real, table);
    return 1.0 - table.cdf(s - nu_ls / (sigma2 * sigma_np));
}

struct ErrorProbabilities {
    double p_ue = 0.0;
    double p_oe = 0.0;
    double p_e = 0.0;
    double delta_inc_ue = 0.0;  ///< P_E(RMT) - P_E(LS-RMT)
};

/// Parameters of the decision at the true signal index q.
struct ErrorModel {
    double omega_ls = 0.0;
    double kappa_ls = 1.0;
    double lambda_q = 0.0;  ///< 0 when q = 0 (no signal to miss)
    double sigma2 = 1.0;
    double phi = 0.0;       ///< threshold at effective dimension p - q + 1
    double nu_ls = 0.0;
    double sigma_np = 0.0;  ///< scaling constant at p - q + 1
    double alpha = 0.005;
    bool has_signal = true;
};

struct ErrorComparison {
    ErrorProbabilities rmt;
    ErrorProbabilities ls_rmt;
};

/// Both estimators' probabilities, and the increase of RMT over LS-RMT.
inline ErrorComparison delta_increased_ue(const ErrorModel& m,
                                          const TwQuantileTable& table = TwQuantileTable::builtin()) {
    ErrorComparison out;
    const double ue_ls = m.has_signal ? p_ue_ls_rmt(m.omega_ls, m.kappa_ls, m.lambda_q, m.sigma2, m.phi, m.nu_ls) : 0.0;
    const double ue_rmt = m.has_signal ? p_ue_rmt(m.omega_ls, m.kappa_ls, m.lambda_q, m.sigma2, m.phi) : 0.0;

    out.ls_rmt.p_ue = ue_ls;
    out.ls_rmt.p_e = p_e_ls_rmt(m.alpha, ue_ls);
    out.ls_rmt.p_oe = out.ls_rmt.p_e - ue_ls;  // alpha unless clipped

    out.rmt.p_ue = ue_rmt;
    out.rmt.p_oe = p_oe_rmt(m.sigma_np, m.sigma2, m.nu_ls, m.alpha, table);
    out.rmt.p_e = clip01(out.rmt.p_oe + out.rmt.p_ue);
    out.rmt.p_oe = out.rmt.p_e - out.rmt.p_ue;

    const double delta = out.rmt.p_e - out.ls_rmt.p_e;
    out.rmt.delta_inc_ue = delta;
    out.ls_rmt.delta_inc_ue = delta;
    return out;
}

/// Population-parameter error model for a scenario, evaluated at index q
/// (index 1 when q = 0). The shrinkage indicator is taken as given.
inline ErrorModel error_model(const SpikedScenario& s, double alpha, int indicator = 1,
                              const TwQuantileTable& table = TwQuantileTable::builtin()) {
    s.validate();
    const int q = s.q();
    const int k = std::max(q, 1);
    ErrorModel m;
    m.alpha = alpha;
    m.sigma2 = s.sigma2;
    m.has_signal = q > 0;
    const auto tw = threshold_params(s.n, s.p - k + 1, alpha, s.beta, table);
    m.phi = s.sigma2 * (tw.mu + tw.s_alpha * tw.sigma);
    m.sigma_np = tw.sigma;

    const auto f = compute_correction_factors(s.n, s.p, k, indicator);
    if (q == 0) {
        const auto mean = corrected_mean_params(1.0, 0.0, s.sigma2, f.P);
        m.kappa_ls = mean.kappa_ls;
        m.nu_ls = mean.nu_ls;
        return m;
    }
    const auto bias = bias_terms(s, q);
    const double rho = s.lambdas.back() + s.sigma2;
    const auto mean = corrected_mean_params(bias.kappa, bias.v, s.sigma2, f.P);
    const double mean_core = rho * bias.kappa + bias.v - s.sigma2;
    const double zeta = std::sqrt(corrected_variance(bias.delta, mean_core, s.sigma2, f.P, f.B, f.G));
    m.lambda_q = s.lambdas.back();
    m.kappa_ls = mean.kappa_ls;
    m.nu_ls = mean.nu_ls;
    m.omega_ls = zeta / mean.kappa_ls;
    return m;
}

enum class InformationCriterion { aic, mdl };

/**
 * Classic information-criterion order estimate: minimises
 * -n (p - k) log(geometric / arithmetic mean of l_{k+1..p}) + penalty(k)
 * over k in [0, min(p, n) - 1].
 */
inline int aic_mdl_baseline(const EigenSpectrum& spectrum, InformationCriterion criterion) {
    const int p = spectrum.p, n = spectrum.n;
    if (p < 2) throw InvalidInput("aic_mdl_baseline: p must be >= 2");
    const int last = std::min(p, n) - 1;
    double best = std::numeric_limits<double>::infinity();
    int best_k = 0;
    for (int k = 0; k <= last; ++k) {
        double sum = 0.0, log_sum = 0.0;
        for (int j = k + 1; j <= p; ++j) {
            const double l = spectrum.l(j);
            if (!(l > 0.0))
                throw DegenerateSpectrum("aic_mdl_baseline: zero eigenvalue at index " + std::to_string(j));
            sum += l;
            log_sum += std::log(l);
        }
        const double m = p - k;
        const double log_ratio = log_sum / m - std::log(sum / m);
        const double free = static_cast<double>(k) * (2.0 * p - k);
        const double penalty = criterion == InformationCriterion::aic ? free : 0.5 * free * std::log(static_cast<double>(n));
        const double value = -static_cast<double>(n) * m * log_ratio + penalty;
        if (value < best) {
            best = value;
            best_k = k;
        }
    }
    return best_k;
}

}  // namespace lsrmt
