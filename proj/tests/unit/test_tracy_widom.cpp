#include <cmath>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "lsrmt/tracy_widom.hpp"

using namespace lsrmt;

namespace {
const TwQuantileTable& table() { return TwQuantileTable::builtin(); }
}  // namespace

TEST(Centering, ClosedForms) {
    EXPECT_DOUBLE_EQ(centering_mu(100, 100), 3.98);
    EXPECT_NEAR(centering_mu(200, 100), 2.903909152500615, 1e-12);
    EXPECT_NEAR(centering_mu(1000000, 1), 1.0, 2e-3);
    EXPECT_THROW(centering_mu(0, 5), InvalidInput);
}

TEST(Scaling, ClosedForms) {
    EXPECT_NEAR(scaling_sigma(100, 100), 0.11676544921628006, 1e-12);
    EXPECT_NEAR(scaling_sigma(200, 100), 0.06688843297647645, 1e-12);
}

TEST(Scaling, ShrinksAlongDoublingSequence) {
    double prev = scaling_sigma(20, 10);
    for (int p = 20; p <= 5120; p *= 2) {
        const double s = scaling_sigma(2 * p, p);
        EXPECT_LT(s, prev);
        prev = s;
    }
}

TEST(TwTable, EmbeddedMatchesDataFile) {
    std::ifstream in(std::string(LSRMT_DATA_DIR) + "/tw1_cdf.txt");
    ASSERT_TRUE(in.good());
    const auto file = TwQuantileTable::parse(in);
    ASSERT_EQ(file.xs().size(), table().xs().size());
    for (std::size_t i = 0; i < file.xs().size(); ++i) {
        EXPECT_NEAR(file.xs()[i], table().xs()[i], 1e-12);
        EXPECT_EQ(file.fs()[i], table().fs()[i]);
    }
    EXPECT_EQ(file.provenance(), table().provenance());
    EXPECT_NE(table().provenance().find("Fredholm"), std::string::npos);
}

TEST(TwTable, CoversRequiredProbabilities) {
    EXPECT_LE(table().fs().front(), 1e-6);
    EXPECT_GE(table().fs().back(), 1.0 - 1e-6);
}

TEST(TwTable, PublishedMomentsOfTw1) {
    // trapezoid integrals of x dF and x^2 dF over the table
    const auto& x = table().xs();
    const auto& f = table().fs();
    double m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double mid = 0.5 * (x[i] + x[i - 1]), df = f[i] - f[i - 1];
        m1 += mid * df;
        m2 += mid * mid * df;
    }
    EXPECT_NEAR(m1, -1.2065335745820, 1e-4);
    EXPECT_NEAR(m2 - m1 * m1, 1.607781034581, 1e-4);
}

TEST(TwQuantile, OracleValues) {
    EXPECT_NEAR(tw_quantile(0.5), -1.268575, 1e-3);
    EXPECT_NEAR(tw_quantile(0.05), 0.979316, 1e-3);
    EXPECT_NEAR(tw_quantile(0.01), 2.023449, 1e-3);
    EXPECT_NEAR(tw_quantile(0.005), 2.422327, 1e-3);
}

TEST(TwQuantile, InvertsCdf) {
    for (double a : {1e-4, 3e-4, 1e-3, 0.005, 0.01, 0.05, 0.1, 0.2, 0.3, 0.5}) {
        EXPECT_NEAR(table().cdf(tw_quantile(a)), 1.0 - a, 1e-4) << "alpha " << a;
    }
}

TEST(TwQuantile, StrictlyDecreasingInAlpha) {
    double prev = tw_quantile(1e-4);
    for (double a = 2e-4; a < 0.99; a *= 1.3) {
        const double s = tw_quantile(a);
        EXPECT_LT(s, prev);
        prev = s;
    }
}

TEST(TwQuantile, Errors) {
    EXPECT_THROW(tw_quantile(0.0), OutOfRange);
    EXPECT_THROW(tw_quantile(1.0), OutOfRange);
    EXPECT_THROW(tw_quantile(1.5), OutOfRange);
    EXPECT_THROW(tw_quantile(1e-12), OutOfRange);  // beyond table coverage
    EXPECT_THROW(tw_quantile(0.05, FieldType::complex), Unsupported);
}

TEST(TwCdf, StrictInsideExtendedOutside) {
    EXPECT_THROW(table().cdf(9.0), OutOfRange);
    EXPECT_THROW(table().cdf(-11.0), OutOfRange);
    EXPECT_GT(table().cdf_extended(9.0), table().fs().back());
    EXPECT_LT(table().cdf_extended(9.0), 1.0);
    EXPECT_LT(table().cdf_extended(-11.0), table().fs().front());
    EXPECT_EQ(table().cdf_extended(0.3), table().cdf(0.3));
}

TEST(TwCdf, InterpolantIsMonotoneBetweenNodes) {
    double prev = 0.0;
    for (double x = -9.999; x < 7.99; x += 0.0037) {
        const double f = table().cdf(x);
        EXPECT_GE(f, prev);
        prev = f;
    }
}

TEST(TwTable, ParseRejectsMalformed) {
    std::istringstream bad("# header\n-1 0.1\nxyz\n");
    EXPECT_THROW(TwQuantileTable::parse(bad), InvalidInput);
    std::istringstream narrow("# header\n-1 0.1\n0 0.5\n1 0.8\n2 0.9\n");
    EXPECT_THROW(TwQuantileTable::parse(narrow), InvalidInput);  // coverage
    std::istringstream unsorted("# h\n-9 1e-7\n0 0.5\n-1 0.6\n8 0.9999999\n");
    EXPECT_THROW(TwQuantileTable::parse(unsorted), InvalidInput);
}

TEST(Threshold, Composition) {
    const double phi = detection_threshold(1.0, 200, 100, 0.005);
    EXPECT_NEAR(phi, 2.903909152500615 + tw_quantile(0.005) * 0.06688843297647645, 1e-12);
    EXPECT_NEAR(phi, 3.06594, 1e-4);
}

TEST(Threshold, ZeroAndHomogeneous) {
    EXPECT_EQ(detection_threshold(0.0, 200, 100, 0.005), 0.0);
    EXPECT_NEAR(detection_threshold(2.0, 200, 100, 0.005), 2.0 * detection_threshold(1.0, 200, 100, 0.005), 1e-12);
}

TEST(Threshold, MonotoneInSigmaAndAlpha) {
    EXPECT_LT(detection_threshold(1.0, 128, 64, 0.005), detection_threshold(1.1, 128, 64, 0.005));
    EXPECT_GT(detection_threshold(1.0, 128, 64, 0.001), detection_threshold(1.0, 128, 64, 0.005));
}

TEST(Threshold, RejectsTinyDimension) {
    EXPECT_THROW(detection_threshold(1.0, 100, 1, 0.005), InvalidInput);
    EXPECT_THROW(detection_threshold(-1.0, 100, 10, 0.005), InvalidInput);
    const auto t = threshold_params(200, 100, 0.005);
    EXPECT_GT(t.mu, 0.0);
    EXPECT_GT(t.sigma, 0.0);
}
