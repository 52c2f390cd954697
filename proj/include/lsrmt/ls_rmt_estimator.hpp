#pragma once

/** @file
 * LS-RMT estimator. Each test index k compares the bias-corrected eigenvalue
 * l_k - nu_k^LS against a Tracy-Widom threshold whose noise variance is
 * estimated with l_k counted as noise.
 */

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lawley_bias.hpp"
#include "rmt_estimator.hpp"
#include "shrinkage.hpp"
#include "spectrum_model.hpp"
#include "tracy_widom.hpp"

namespace lsrmt {

struct LsRmtStepRecord {
    int k = 0;
    double l_k = 0.0;
    double nu_ls_hat = 0.0;
    double kappa_ls_hat = 1.0;
    double v_hat = 0.0;
    double kappa_hat = 1.0;
    double sigma2_signal = 0.0;  ///< fit with l_1..l_k as signals
    double sigma2_null = 0.0;    ///< fit with l_1..l_{k-1} as signals
    int indicator = 0;
    double P = 1.0;
    double threshold = 0.0;
    bool accepted = false;
    bool signal_fit_converged = true;
    bool null_fit_converged = true;
};

/// Floor on the estimated signal strength, relative to the noise variance.
inline constexpr double lambda_hat_floor = 1e-6;

inline LsRmtStepRecord ls_rmt_step(const EigenSpectrum& spectrum, int k, double alpha,
                                   std::optional<double> known_sigma2 = std::nullopt,
                                   const TwQuantileTable& table = TwQuantileTable::builtin(),
                                   const SolverOptions& solver = {}) {
    const int p = spectrum.p, n = spectrum.n;
    if (k < 1 || k > std::min(p, n) - 1)
        throw InvalidInput("ls_rmt_step: k=" + std::to_string(k) + " outside [1, min(p,n)-1]");
    if (known_sigma2 && !(*known_sigma2 > 0.0)) throw InvalidInput("ls_rmt_step: known sigma2 must be > 0");

    LsRmtStepRecord rec;
    rec.k = k;
    rec.l_k = spectrum.l(k);

    // signal side
    std::vector<double> rho_hats;
    if (known_sigma2) {
        rec.sigma2_signal = *known_sigma2;
        const double ratio = static_cast<double>(p - k) / n;
        rho_hats.reserve(static_cast<std::size_t>(k));
        for (int j = 1; j <= k; ++j) rho_hats.push_back(rho_from_eigenvalue(spectrum.l(j), *known_sigma2, ratio).rho);
    } else {
        auto fit = solve_rho_sigma(spectrum, k, solver);
        rec.sigma2_signal = fit.sigma2_hat;
        rec.signal_fit_converged = fit.converged;
        rho_hats = std::move(fit.rho_hats);
    }
    rec.v_hat = interaction_bias(rho_hats, k, n);
    const double lambda_hat =
        std::max(rho_hats.back() - rec.sigma2_signal, lambda_hat_floor * rec.sigma2_signal);
    rec.kappa_hat = 1.0 + static_cast<double>(p - k) * rec.sigma2_signal / (n * lambda_hat);

    // null side
    if (known_sigma2) {
        rec.sigma2_null = *known_sigma2;
    } else {
        const auto fit = solve_rho_sigma(spectrum, k - 1, solver);
        rec.sigma2_null = fit.sigma2_hat;
        rec.null_fit_converged = fit.converged;
    }

    const auto coef = shrinkage_coefficient(spectrum, k);
    const auto f = compute_correction_factors(n, p, k, coef.indicator);
    rec.indicator = coef.indicator;
    rec.P = f.P;
    const auto mean = corrected_mean_params(rec.kappa_hat, rec.v_hat, rec.sigma2_null, f.P);
    rec.kappa_ls_hat = mean.kappa_ls;
    rec.nu_ls_hat = mean.nu_ls;

    rec.threshold = detection_threshold(rec.sigma2_null, n, p - k + 1, alpha, spectrum.beta, table);
    rec.accepted = rec.l_k - rec.nu_ls_hat > rec.threshold;
    return rec;
}

struct LsRmtResult {
    EstimateTrace trace;
    std::vector<LsRmtStepRecord> steps;
};

/// Full sequential run keeping the detailed per-k records.
inline LsRmtResult ls_rmt_run(const EigenSpectrum& spectrum, double alpha,
                              std::optional<double> known_sigma2 = std::nullopt,
                              const TwQuantileTable& table = TwQuantileTable::builtin(),
                              const SolverOptions& solver = {}) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("ls_rmt_estimate: alpha must lie in (0, 1)");
    const int last = std::min(spectrum.p, spectrum.n) - 1;
    LsRmtResult out;
    for (int k = 1; k <= last; ++k) {
        const auto rec = ls_rmt_step(spectrum, k, alpha, known_sigma2, table, solver);
        out.steps.push_back(rec);
        out.trace.per_k.push_back({rec.k, rec.l_k, rec.threshold, rec.l_k - rec.nu_ls_hat, rec.accepted,
                                   rec.sigma2_null, rec.nu_ls_hat,
                                   rec.signal_fit_converged && rec.null_fit_converged});
        if (!rec.accepted) {
            out.trace.q_hat = k - 1;
            return out;
        }
    }
    out.trace.q_hat = std::max(last, 0);
    out.trace.loop_bound_hit = true;
    return out;
}

inline EstimateTrace ls_rmt_estimate(const EigenSpectrum& spectrum, double alpha,
                                     std::optional<double> known_sigma2 = std::nullopt,
                                     const TwQuantileTable& table = TwQuantileTable::builtin()) {
    return ls_rmt_run(spectrum, alpha, known_sigma2, table).trace;
}

}  // namespace lsrmt
