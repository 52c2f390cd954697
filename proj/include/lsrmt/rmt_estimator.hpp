#pragma once

/** @file
 * Baseline RMT estimator: joint signal/noise fit by fixed-point iteration
 * and a sequence of Tracy-Widom threshold tests on l_1, l_2, ...
 */

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "spectrum_model.hpp"
#include "tracy_widom.hpp"

namespace lsrmt {

struct SolverOptions {
    double tolerance = 1e-10;  ///< on the relative change of sigma2
    int max_iterations = 200;
};

struct RmtFit {
    int k = 0;
    std::vector<double> rho_hats;  ///< estimated signal population eigenvalues
    double sigma2_hat = 0.0;
    int iterations = 0;
    bool converged = false;  ///< sigma2 settled and every quadratic had a real root
    double residual = 0.0;  ///< last relative change of sigma2_hat
};

/// Larger root of rho^2 - rho [l + (1 - ratio) sigma2] + l sigma2 = 0.
struct RhoRoot {
    double rho = 0.0;
    bool real_roots = true;  ///< false: discriminant < 0, repeated-root value used
};

inline RhoRoot rho_from_eigenvalue(double l, double sigma2, double ratio) {
    const double b = l + (1.0 - ratio) * sigma2;
    const double c = l * sigma2;
    const double disc = b * b - 4.0 * c;
    if (disc < 0.0) return {0.5 * b, false};
    const double root = std::sqrt(disc);
    // both forms give the larger root; pick the one without cancellation
    return {b >= 0.0 ? 0.5 * (b + root) : (root == b ? 0.0 : 2.0 * c / (b - root)), true};
}

/**
 * Solves the coupled system for (rho_1..rho_k, sigma2) assuming l_{k+1..p}
 * are noise. sigma2 starts at the trailing mean; each sweep solves the
 * quadratics for the rhos and then re-averages the noise.
 */
inline RmtFit solve_rho_sigma(const EigenSpectrum& spectrum, int k, const SolverOptions& opt = {}) {
    const int p = spectrum.p, n = spectrum.n;
    if (k < 0 || k > std::min(p, n) - 1)
        throw InvalidInput("solve_rho_sigma: k=" + std::to_string(k) + " outside [0, min(p,n)-1]");

    RmtFit fit;
    fit.k = k;
    double tail = 0.0;
    for (int j = k + 1; j <= p; ++j) tail += spectrum.l(j);
    const double trailing_mean = tail / (p - k);
    if (k == 0) {
        fit.sigma2_hat = trailing_mean;
        fit.converged = fit.sigma2_hat > 0.0;
        return fit;
    }

    const double ratio = static_cast<double>(p - k) / n;
    const double sigma_floor = 1e-12 * trailing_mean;
    fit.rho_hats.assign(static_cast<std::size_t>(k), 0.0);
    double sigma2 = trailing_mean;
    if (!(sigma2 > 0.0)) throw DegenerateSpectrum("solve_rho_sigma: noise block is all zero");

    bool all_real = true;
    auto update_rhos = [&](double s2) {
        all_real = true;
        for (int j = 1; j <= k; ++j) {
            const auto r = rho_from_eigenvalue(spectrum.l(j), s2, ratio);
            fit.rho_hats[static_cast<std::size_t>(j - 1)] = r.rho;
            all_real = all_real && r.real_roots;
        }
    };

    for (int it = 1; it <= opt.max_iterations; ++it) {
        fit.iterations = it;
        update_rhos(sigma2);
        double acc = tail;
        for (int j = 1; j <= k; ++j) acc += spectrum.l(j) - fit.rho_hats[static_cast<std::size_t>(j - 1)];
        double next = acc / (p - k);
        if (!(next > 0.0)) {
            fit.sigma2_hat = sigma_floor;
            fit.converged = false;
            fit.residual = std::abs(next - sigma2) / sigma2;
            update_rhos(fit.sigma2_hat);
            return fit;
        }
        fit.residual = std::abs(next - sigma2) / next;
        sigma2 = next;
        if (fit.residual <= opt.tolerance) {
            fit.converged = true;
            break;
        }
    }
    fit.sigma2_hat = sigma2;
    update_rhos(sigma2);
    // a settled sigma2 with a complex root does not solve the system
    fit.converged = fit.converged && all_real;
    return fit;
}

/// One executed hypothesis test "at least k signals".
struct StepRecord {
    int k = 0;
    double l_k = 0.0;
    double threshold = 0.0;
    double statistic = 0.0;  ///< compared against threshold; accepted <=> statistic > threshold
    bool accepted = false;
    double sigma2 = 0.0;     ///< noise variance that scaled the threshold
    double bias = 0.0;       ///< subtracted from l_k (0 for the plain RMT test)
    bool fit_converged = true;
};

struct EstimateTrace {
    int q_hat = 0;
    bool loop_bound_hit = false;
    std::vector<StepRecord> per_k;
};

/// Which Tracy-Widom dimension enters the threshold at test index k.
enum class ThresholdDimension {
    signal_side,  ///< p - k: l_k assumed to be a signal (the classic test)
    null_side,    ///< p - k + 1: l_k assumed to be noise
};

struct RmtOptions {
    ThresholdDimension dimension = ThresholdDimension::signal_side;
    SolverOptions solver{};
};

/**
 * Sequential test: accept "at least k signals" while
 * l_k > sigma2(k) (mu_{n,p-k} + s(alpha) sigma_{n,p-k}).
 * With known_sigma2 the solver is skipped. A test whose dimension would drop
 * below 2 counts as reaching the loop bound.
 */
inline EstimateTrace rmt_estimate(const EigenSpectrum& spectrum, double alpha,
                                  std::optional<double> known_sigma2 = std::nullopt,
                                  const RmtOptions& options = {},
                                  const TwQuantileTable& table = TwQuantileTable::builtin()) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("rmt_estimate: alpha must lie in (0, 1)");
    if (known_sigma2 && !(*known_sigma2 > 0.0)) throw InvalidInput("rmt_estimate: known sigma2 must be > 0");
    const int p = spectrum.p, n = spectrum.n;
    const int last = std::min(p, n) - 1;

    EstimateTrace trace;
    for (int k = 1; k <= last; ++k) {
        StepRecord rec;
        rec.k = k;
        rec.l_k = spectrum.l(k);
        if (known_sigma2) {
            rec.sigma2 = *known_sigma2;
        } else {
            const auto fit = solve_rho_sigma(spectrum, k, options.solver);
            rec.sigma2 = fit.sigma2_hat;
            rec.fit_converged = fit.converged;
        }
        const int p_eff = options.dimension == ThresholdDimension::signal_side ? p - k : p - k + 1;
        if (p_eff < 2) break;  // no Tracy-Widom test left to run: loop bound
        rec.threshold = detection_threshold(rec.sigma2, n, p_eff, alpha, spectrum.beta, table);
        rec.statistic = rec.l_k;
        rec.accepted = rec.statistic > rec.threshold;
        trace.per_k.push_back(rec);
        if (!rec.accepted) {
            trace.q_hat = k - 1;
            return trace;
        }
    }
    trace.q_hat = std::max(last, 0);
    trace.loop_bound_hit = true;
    return trace;
}

}  // namespace lsrmt
