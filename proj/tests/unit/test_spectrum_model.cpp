#include <cmath>
#include <numeric>
#include <sstream>

#include <gtest/gtest.h>

#include "lsrmt/spectrum_io.hpp"
#include "lsrmt/spectrum_model.hpp"
#include "oracles.hpp"

using namespace lsrmt;

TEST(PopulationEigenvalues, NoSignals) {
    EXPECT_EQ(population_eigenvalues({4, 10, {}, 1.0}), (std::vector<double>{1, 1, 1, 1}));
}

TEST(PopulationEigenvalues, ThreeStrongSignals) {
    EXPECT_EQ(population_eigenvalues({5, 10, {150, 120, 100}, 1.0}), (std::vector<double>{151, 121, 101, 1, 1}));
}

TEST(PopulationEigenvalues, NonUnitNoise) {
    EXPECT_EQ(population_eigenvalues({3, 10, {2}, 0.5}), (std::vector<double>{2.5, 0.5, 0.5}));
}

TEST(SpikedScenario, RejectsInvalid) {
    EXPECT_THROW((SpikedScenario{4, 3, {1, 1, 1}}.validate()), InvalidInput);  // q >= min(p, n)
    EXPECT_THROW((SpikedScenario{4, 10, {1, 2}}.validate()), InvalidInput);    // increasing
    EXPECT_THROW((SpikedScenario{4, 10, {0.0}}.validate()), InvalidInput);
    EXPECT_THROW((SpikedScenario{4, 10, {}, 0.0}.validate()), InvalidInput);
    EXPECT_THROW((SpikedScenario{0, 10, {}}.validate()), InvalidInput);
    EXPECT_DOUBLE_EQ((SpikedScenario{3, 12, {}}.gamma()), 0.25);
}

TEST(DrawSnapshots, DeterministicForSeed) {
    const SpikedScenario s{6, 20, {3.0}, 1.0};
    EXPECT_EQ(draw_snapshots(s, 42), draw_snapshots(s, 42));
    EXPECT_NE(draw_snapshots(s, 42), draw_snapshots(s, 43));
    EXPECT_EQ(draw_snapshots(s, 7, Mixing::random_orthogonal), draw_snapshots(s, 7, Mixing::random_orthogonal));
}

TEST(DrawSnapshots, SpikedCoordinateVariance) {
    const SpikedScenario s{10, 100000, {8.0}, 1.0};
    const auto x = draw_snapshots(s, 2024);
    const double var0 = x.row(0).squaredNorm() / s.n;
    // Var of the sample variance of N(0, 9) is 2 * 81 / n
    EXPECT_NEAR(var0, 9.0, 3.0 * std::sqrt(2.0 * 81.0 / s.n));
    const double var1 = x.row(1).squaredNorm() / s.n;
    EXPECT_NEAR(var1, 1.0, 3.0 * std::sqrt(2.0 / s.n));
}

TEST(DrawSnapshots, DistinctSeedsUncorrelated) {
    const SpikedScenario s{1, 20000, {}, 1.0};
    const auto a = draw_snapshots(s, 1), b = draw_snapshots(s, 2);
    const double corr = a.row(0).dot(b.row(0)) / std::sqrt(a.row(0).squaredNorm() * b.row(0).squaredNorm());
    EXPECT_LT(std::abs(corr), 4.0 / std::sqrt(20000.0));
}

TEST(SampleCovariance, SingleUnitSnapshot) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(3, 1);
    x(0, 0) = 1.0;
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(3, 3);
    expected(0, 0) = 1.0;
    EXPECT_TRUE(sample_covariance(x).isApprox(expected));
}

TEST(SampleCovariance, ZeroSnapshots) {
    EXPECT_TRUE(sample_covariance(Eigen::MatrixXd::Zero(4, 5)).isZero());
}

TEST(SampleCovariance, HandComputedIdentity) {
    std::vector<Eigen::VectorXd> xs{Eigen::Vector2d(1, 1), Eigen::Vector2d(1, -1)};
    EXPECT_TRUE(sample_covariance(std::span<const Eigen::VectorXd>(xs)).isApprox(Eigen::MatrixXd::Identity(2, 2)));
}

TEST(SampleCovariance, DimensionMismatch) {
    std::vector<Eigen::VectorXd> xs{Eigen::Vector2d(1, 1), Eigen::Vector3d(1, 0, 0)};
    EXPECT_THROW(sample_covariance(std::span<const Eigen::VectorXd>(xs)), InvalidInput);
}

TEST(EigenSpectrum, IdentityAndDiagonal) {
    EXPECT_EQ(eigen_spectrum(Eigen::MatrixXd::Identity(3, 3), 10).values, (std::vector<double>{1, 1, 1}));
    EXPECT_EQ(eigen_spectrum(Eigen::Vector3d(2, 5, 1).asDiagonal().toDenseMatrix(), 10).values,
              (std::vector<double>{5, 2, 1}));
}

TEST(EigenSpectrum, RejectsAsymmetric) {
    Eigen::Matrix2d a;
    a << 1, 0.5, 0.4, 1;
    EXPECT_THROW(eigen_spectrum(a, 5), InvalidInput);
}

TEST(EigenSpectrum, ClampsRoundOffNegatives) {
    // rank-one PSD matrix: exact eigenvalues (3, 0, 0)
    Eigen::Vector3d v(1, 1, 1);
    const auto spec = eigen_spectrum(v * v.transpose(), 1);
    for (double l : spec.values) EXPECT_GE(l, 0.0);
    EXPECT_NEAR(spec.l(1), 3.0, 1e-12);
}

TEST(EigenSpectrum, MatchesInertiaBisectionOracle) {
    const SpikedScenario s{6, 9, {4.0, 1.5}, 1.0};
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        const auto cov = sample_covariance(draw_snapshots(s, seed, Mixing::random_orthogonal));
        const auto got = eigen_spectrum(cov, s.n).values;
        const auto ref = oracle::bisection_eigenvalues(cov);
        for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], ref[i], 1e-8) << "index " << i;
    }
}

TEST(EigenSpectrum, TraceIsPreserved) {
    const SpikedScenario s{40, 60, {5.0, 2.0}, 1.3};
    const auto cov = sample_covariance(draw_snapshots(s, 99));
    const auto spec = eigen_spectrum(cov, s.n);
    const double sum = std::accumulate(spec.values.begin(), spec.values.end(), 0.0);
    EXPECT_NEAR(sum, cov.trace(), 1e-8 * cov.trace());
}

TEST(EigenSpectrum, MarchenkoPasturEdge) {
    // n >= 100 p: l_1 close to (1 + sqrt(p/n))^2
    const SpikedScenario s{10, 1000, {}, 1.0};
    const double edge = std::pow(1.0 + std::sqrt(0.01), 2);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto spec = simulate_spectrum(s, seed);
        EXPECT_NEAR(spec.l(1) / s.sigma2, edge, 0.1 * edge);
    }
}

TEST(EigenSpectrum, RotationDoesNotChangeLaw) {
    // same seed stream is consumed differently, so compare first moments only
    const SpikedScenario s{8, 16, {6.0}, 1.0};
    double a = 0, b = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        a += simulate_spectrum(s, seed).l(1);
        b += simulate_spectrum(s, seed + 100000, Mixing::random_orthogonal).l(1);
    }
    EXPECT_NEAR(a / 400, b / 400, 0.25);
}

TEST(EigenSpectrum, ValidatesOrdering) {
    EXPECT_THROW(EigenSpectrum({1.0, 2.0}, 5), InvalidInput);
    EXPECT_THROW(EigenSpectrum({1.0, -0.5}, 5), InvalidInput);
    EXPECT_THROW(EigenSpectrum({1.0}, 0), InvalidInput);
    EXPECT_DOUBLE_EQ(EigenSpectrum({3.0, 1.0}, 5).l(1), 3.0);
}

TEST(EigenCsv, RoundTrip) {
    const auto spec = simulate_spectrum({12, 30, {4.0}, 1.0}, 5);
    std::stringstream ss;
    write_eigenvalues_csv(ss, spec.values);
    EXPECT_EQ(read_eigenvalues_csv(ss), spec.values);
}

TEST(EigenCsv, ErrorsCarryLineNumbers) {
    auto error_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_eigenvalues_csv(in, "f.csv");
        } catch (const InvalidInput& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(error_of("index,eigenvalue\n1,2\n2,3\n").find("f.csv:3"), std::string::npos);  // unsorted
    EXPECT_NE(error_of("index,eigenvalue\n1,abc\n").find("f.csv:2"), std::string::npos);
    EXPECT_NE(error_of("idx,value\n1,2\n").find("f.csv:1"), std::string::npos);
    EXPECT_NE(error_of("index,eigenvalue\n1,2\n3,1\n").find("out of sequence"), std::string::npos);
    EXPECT_NE(error_of("index,eigenvalue\n").find("no eigenvalues"), std::string::npos);
    EXPECT_EQ(error_of("index,eigenvalue\r\n1,2.5\r\n2,1e-3\r\n"), "no error");
}
