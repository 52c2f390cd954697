#pragma once

/** @file
 * Spiked covariance data model: scenario description, snapshot generation,
 * sample covariance and its sorted eigen-spectrum.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "rng.hpp"

namespace lsrmt {

/// Real (1) or complex (2) data. Only real data is implemented end to end.
enum class FieldType : int { real = 1, complex = 2 };

constexpr double beta_value(FieldType b) noexcept { return static_cast<double>(b); }

/**
 * Ground truth for simulation: p sensors, n snapshots, q = lambdas.size()
 * signals of strength lambdas (noise-free variance) over white noise sigma2.
 */
struct SpikedScenario {
    int p = 0;
    int n = 0;
    std::vector<double> lambdas;
    double sigma2 = 1.0;
    FieldType beta = FieldType::real;

    int q() const noexcept { return static_cast<int>(lambdas.size()); }
    double gamma() const noexcept { return static_cast<double>(p) / static_cast<double>(n); }

    void validate() const {
        if (p < 1 || n < 1) throw InvalidInput("scenario: p and n must be positive");
        if (!(sigma2 > 0.0)) throw InvalidInput("scenario: sigma2 must be > 0");
        if (q() >= std::min(p, n))
            throw InvalidInput("scenario: q must be < min(p, n), got q=" + std::to_string(q()));
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            if (!(lambdas[i] > 0.0)) throw InvalidInput("scenario: lambdas must be > 0");
            if (i > 0 && lambdas[i] > lambdas[i - 1])
                throw InvalidInput("scenario: lambdas must be non-increasing");
        }
    }
};

/// Sorted sample eigenvalues l_1 >= ... >= l_p >= 0 together with (p, n).
struct EigenSpectrum {
    std::vector<double> values;
    int p = 0;
    int n = 0;
    FieldType beta = FieldType::real;

    EigenSpectrum() = default;
    EigenSpectrum(std::vector<double> v, int samples, FieldType b = FieldType::real)
        : values(std::move(v)), p(static_cast<int>(values.size())), n(samples), beta(b) {
        validate();
    }

    /// 1-based access, l(1) is the largest eigenvalue.
    double l(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }

    void validate() const {
        if (p < 1 || static_cast<std::size_t>(p) != values.size())
            throw InvalidInput("spectrum: p must equal the number of eigenvalues");
        if (n < 1) throw InvalidInput("spectrum: n must be positive");
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!(values[i] >= 0.0) || !std::isfinite(values[i]))
                throw InvalidInput("spectrum: eigenvalues must be finite and non-negative");
            if (i > 0 && values[i] > values[i - 1])
                throw InvalidInput("spectrum: eigenvalues must be sorted non-increasing");
        }
    }
};

/// [lambda_1 + sigma2, ..., lambda_q + sigma2, sigma2, ..., sigma2], length p.
inline std::vector<double> population_eigenvalues(const SpikedScenario& s) {
    s.validate();
    std::vector<double> rho(static_cast<std::size_t>(s.p), s.sigma2);
    for (int j = 0; j < s.q(); ++j) rho[static_cast<std::size_t>(j)] += s.lambdas[static_cast<std::size_t>(j)];
    return rho;
}

enum class Mixing {
    diagonal,           ///< covariance diag(rho); eigenvalues have the same law
    random_orthogonal,  ///< covariance U diag(rho) U^T with Haar-random U
};

/**
 * n zero-mean Gaussian snapshots as the columns of a p x n matrix.
 * Real data only.
 */
inline Eigen::MatrixXd draw_snapshots(const SpikedScenario& s, std::uint64_t seed,
                                      Mixing mixing = Mixing::diagonal) {
    s.validate();
    if (s.beta != FieldType::real) throw Unsupported("draw_snapshots: complex data not implemented");
    auto engine = make_engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    const auto rho = population_eigenvalues(s);
    Eigen::MatrixXd x(s.p, s.n);
    for (int t = 0; t < s.n; ++t)
        for (int i = 0; i < s.p; ++i) x(i, t) = std::sqrt(rho[static_cast<std::size_t>(i)]) * normal(engine);

    if (mixing == Mixing::random_orthogonal) {
        Eigen::MatrixXd g(s.p, s.p);
        for (int c = 0; c < s.p; ++c)
            for (int r = 0; r < s.p; ++r) g(r, c) = normal(engine);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd u = qr.householderQ();
        // sign fix so that U is Haar distributed
        const Eigen::MatrixXd rr = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int c = 0; c < s.p; ++c)
            if (rr(c, c) < 0.0) u.col(c) *= -1.0;
        x = u * x;
    }
    return x;
}

/// S = (1/n) X X^T with snapshots as columns; no mean subtraction.
inline Eigen::MatrixXd sample_covariance(const Eigen::MatrixXd& snapshots) {
    if (snapshots.cols() < 1 || snapshots.rows() < 1)
        throw InvalidInput("sample_covariance: need at least one snapshot of positive dimension");
    const auto n = static_cast<double>(snapshots.cols());
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(snapshots.rows(), snapshots.rows());
    s.selfadjointView<Eigen::Lower>().rankUpdate(snapshots, 1.0 / n);
    return s.selfadjointView<Eigen::Lower>();
}

inline Eigen::MatrixXd sample_covariance(std::span<const Eigen::VectorXd> snapshots) {
    if (snapshots.empty()) throw InvalidInput("sample_covariance: no snapshots");
    const auto dim = snapshots.front().size();
    Eigen::MatrixXd x(dim, static_cast<Eigen::Index>(snapshots.size()));
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
        if (snapshots[i].size() != dim)
            throw InvalidInput("sample_covariance: snapshot " + std::to_string(i) +
                               " has dimension " + std::to_string(snapshots[i].size()) +
                               ", expected " + std::to_string(dim));
        x.col(static_cast<Eigen::Index>(i)) = snapshots[i];
    }
    return sample_covariance(x);
}

/// Eigenvalues of a symmetric matrix, descending, round-off negatives clamped to 0.
inline EigenSpectrum eigen_spectrum(const Eigen::MatrixXd& s, int n,
                                    FieldType beta = FieldType::real) {
    if (s.rows() != s.cols() || s.rows() < 1) throw InvalidInput("eigen_spectrum: matrix must be square");
    const double scale = std::max(s.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
    if ((s - s.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw InvalidInput("eigen_spectrum: matrix is not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("eigen_spectrum: eigensolver did not converge");

    const auto& ev = solver.eigenvalues();  // ascending
    std::vector<double> values(static_cast<std::size_t>(ev.size()));
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        values[static_cast<std::size_t>(i)] = std::max(0.0, ev(ev.size() - 1 - i));
    return EigenSpectrum(std::move(values), n, beta);
}

/// Convenience: draw, form S, decompose.
inline EigenSpectrum simulate_spectrum(const SpikedScenario& s, std::uint64_t seed,
                                       Mixing mixing = Mixing::diagonal) {
    return eigen_spectrum(sample_covariance(draw_snapshots(s, seed, mixing)), s.n, s.beta);
}

}  // namespace lsrmt
