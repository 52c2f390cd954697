#pragma once

/** @file
 * Finite-sample corrections for signal sample eigenvalues: the interaction
 * bias between population eigenvalues, the multiplicative inflation factor,
 * and the Gaussian asymptotics of a supercritical spike.
 */

#include <cmath>
#include <span>
#include <string>

#include "errors.hpp"
#include "spectrum_model.hpp"

namespace lsrmt {

struct BiasTerms {
    double v = 0.0;      ///< interaction bias
    double kappa = 1.0;  ///< inflation factor
    double tau = 0.0;    ///< asymptotic mean of l_j
    double delta = 0.0;  ///< asymptotic standard deviation of l_j
};

/// Relative gap below which rho_j - rho_i is clamped (sign preserved).
inline constexpr double interaction_clamp = 1e-8;

/**
 * v_j = (rho_j / n) sum_{i != j} rho_i / (rho_j - rho_i) over the given rhos.
 * j is 1-based.
 */
inline double interaction_bias(std::span<const double> rhos, int j, int n) {
    if (j < 1 || static_cast<std::size_t>(j) > rhos.size())
        throw InvalidInput("interaction_bias: index " + std::to_string(j) + " out of range");
    if (n < 1) throw InvalidInput("interaction_bias: n must be >= 1");
    const double rj = rhos[static_cast<std::size_t>(j - 1)];
    const double floor = interaction_clamp * std::abs(rj);
    double sum = 0.0;
    for (std::size_t i = 0; i < rhos.size(); ++i) {
        if (static_cast<int>(i) == j - 1) continue;
        double gap = rj - rhos[i];
        if (std::abs(gap) < floor) gap = gap < 0.0 ? -floor : floor;
        if (gap == 0.0) continue;  // rj == 0: nothing to scale
        sum += rhos[i] / gap;
    }
    return rj / n * sum;
}

/// kappa_j = 1 + (p - q) sigma2 / (n lambda_j).
inline double kappa_factor(double lambda_j, double sigma2, int p, int q, int n) {
    if (!(lambda_j > 0.0)) throw InvalidInput("kappa_factor: lambda_j must be > 0");
    if (n < 1) throw InvalidInput("kappa_factor: n must be >= 1");
    return 1.0 + static_cast<double>(p - q) * sigma2 / (static_cast<double>(n) * lambda_j);
}

/// Mean tau and spread delta of a supercritical signal eigenvalue.
struct SignalAsymptotics {
    double tau = 0.0;
    double delta = 0.0;
};

inline SignalAsymptotics signal_asymptotics(double lambda_j, double sigma2, int p, int q, int n,
                                            FieldType beta = FieldType::real) {
    if (!(lambda_j > 0.0)) throw InvalidInput("signal_asymptotics: lambda_j must be > 0");
    if (n < 1) throw InvalidInput("signal_asymptotics: n must be >= 1");
    const double ratio = static_cast<double>(p - q) / n;
    const double radicand = 1.0 - ratio * sigma2 * sigma2 / (lambda_j * lambda_j);
    if (!(radicand > 0.0))
        throw PhaseTransitionError("signal_asymptotics: lambda=" + std::to_string(lambda_j) +
                                   " is not above the detectability edge sigma2*sqrt((p-q)/n)");
    const double rho = lambda_j + sigma2;
    return {rho * (1.0 + ratio * sigma2 / lambda_j),
            rho * std::sqrt(2.0 / (beta_value(beta) * n) * radicand)};
}

/// E[l_j] ~ rho_j kappa_j + v_j, with q = rhos.size() signals.
inline double expected_eigenvalue(std::span<const double> rhos, int j, double sigma2, int p, int n) {
    const double v = interaction_bias(rhos, j, n);
    const double rho = rhos[static_cast<std::size_t>(j - 1)];
    const double kappa = kappa_factor(rho - sigma2, sigma2, p, static_cast<int>(rhos.size()), n);
    return rho * kappa + v;
}

/// All four terms for signal j of a scenario.
inline BiasTerms bias_terms(const SpikedScenario& s, int j) {
    const auto rho = population_eigenvalues(s);
    const std::span<const double> signal(rho.data(), static_cast<std::size_t>(s.q()));
    const double lambda = s.lambdas.at(static_cast<std::size_t>(j - 1));
    const auto asy = signal_asymptotics(lambda, s.sigma2, s.p, s.q(), s.n, s.beta);
    return {interaction_bias(signal, j, s.n), kappa_factor(lambda, s.sigma2, s.p, s.q(), s.n), asy.tau,
            asy.delta};
}

}  // namespace lsrmt
