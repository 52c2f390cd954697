#pragma once

/** @file
 * Tracy-Widom (beta = 1) distribution of the largest white-Wishart eigenvalue:
 * tabulated CDF with monotone cubic interpolation, quantiles, and the
 * finite-(n, p) centering and scaling constants for real data.
 */

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "detail/tw1_table.hpp"
#include "errors.hpp"
#include "spectrum_model.hpp"

namespace lsrmt {

/**
 * CDF samples (x, F(x)) on an ascending grid plus Fritsch-Carlson slopes.
 * Immutable once built; the builtin instance is shared read-only.
 */
class TwQuantileTable {
public:
    TwQuantileTable(std::vector<double> x, std::vector<double> f, std::string provenance)
        : x_(std::move(x)), f_(std::move(f)), provenance_(std::move(provenance)) {
        if (x_.size() != f_.size() || x_.size() < 4) throw InvalidInput("tw table: need >= 4 (x, F) pairs");
        for (std::size_t i = 0; i < x_.size(); ++i) {
            if (!(f_[i] > 0.0 && f_[i] < 1.0)) throw InvalidInput("tw table: F must lie in (0, 1)");
            if (i > 0 && !(x_[i] > x_[i - 1] && f_[i] > f_[i - 1]))
                throw InvalidInput("tw table: x and F must be strictly increasing");
        }
        if (f_.front() > 1e-6 || f_.back() < 1.0 - 1e-6)
            throw InvalidInput("tw table: grid must cover F in [1e-6, 1 - 1e-6]");
        build_slopes();
    }

    /// Table compiled into the library.
    static const TwQuantileTable& builtin() {
        static const TwQuantileTable table = [] {
            std::vector<double> x(detail::tw1_cdf.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                x[i] = detail::tw1_x_min + detail::tw1_step * static_cast<double>(i);
            return TwQuantileTable(std::move(x), {detail::tw1_cdf.begin(), detail::tw1_cdf.end()},
                                   std::string(detail::tw1_provenance));
        }();
        return table;
    }

    /// Reads the two-column "x F" text format; lines starting with '#' are comments.
    static TwQuantileTable parse(std::istream& in) {
        std::vector<double> x, f;
        std::string line, provenance;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            if (line[0] == '#') {
                if (provenance.empty()) provenance = line.substr(line.find_first_not_of("# "));
                continue;
            }
            std::istringstream ss(line);
            double a = 0.0, b = 0.0;
            if (!(ss >> a >> b)) throw InvalidInput("tw table: malformed line " + std::to_string(lineno));
            x.push_back(a);
            f.push_back(b);
        }
        return TwQuantileTable(std::move(x), std::move(f), std::move(provenance));
    }

    double x_min() const noexcept { return x_.front(); }
    double x_max() const noexcept { return x_.back(); }
    const std::vector<double>& xs() const noexcept { return x_; }
    const std::vector<double>& fs() const noexcept { return f_; }
    const std::string& provenance() const noexcept { return provenance_; }

    /// F(x) inside the tabulated range; throws OutOfRange outside it.
    double cdf(double x) const {
        if (!(x >= x_.front() && x <= x_.back()))
            throw OutOfRange("tw cdf: x=" + std::to_string(x) + " outside table range");
        return interpolate(x);
    }

    /**
     * F(x) with asymptotic tail extrapolation outside the table. For display
     * only: decisions go through cdf() and quantile().
     */
    double cdf_extended(double x) const {
        if (x < x_.front()) {
            const double a = std::abs(x), a0 = std::abs(x_.front());
            return f_.front() * std::exp(-(a * a * a - a0 * a0 * a0) / 24.0);
        }
        if (x > x_.back()) {
            const double tail = (1.0 - f_.back()) *
                                std::exp(-(2.0 / 3.0) * (std::pow(x, 1.5) - std::pow(x_.back(), 1.5)));
            return 1.0 - tail;
        }
        return interpolate(x);
    }

    /// s with F(s) = prob, by bisection on the monotone interpolant.
    double quantile(double prob) const {
        if (!(prob >= f_.front() && prob <= f_.back()))
            throw OutOfRange("tw quantile: probability " + std::to_string(prob) + " outside table coverage");
        const auto it = std::lower_bound(f_.begin(), f_.end(), prob);
        std::size_t hi = static_cast<std::size_t>(it - f_.begin());
        if (hi == 0) return x_.front();
        double a = x_[hi - 1], b = x_[hi];
        for (int iter = 0; iter < 200 && b - a > 1e-14; ++iter) {
            const double mid = 0.5 * (a + b);
            (interpolate(mid) < prob ? a : b) = mid;
        }
        return 0.5 * (a + b);
    }

private:
    void build_slopes() {
        const std::size_t m = x_.size();
        std::vector<double> h(m - 1), delta(m - 1);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            h[i] = x_[i + 1] - x_[i];
            delta[i] = (f_[i + 1] - f_[i]) / h[i];
        }
        d_.assign(m, 0.0);
        for (std::size_t i = 1; i + 1 < m; ++i) {
            // weighted harmonic mean keeps the interpolant monotone
            const double w1 = 2.0 * h[i] + h[i - 1], w2 = h[i] + 2.0 * h[i - 1];
            d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
        d_[0] = end_slope(h[0], h[1], delta[0], delta[1]);
        d_[m - 1] = end_slope(h[m - 2], h[m - 3], delta[m - 2], delta[m - 3]);
    }

    static double end_slope(double h0, double h1, double d0, double d1) {
        double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (d * d0 <= 0.0) return 0.0;
        if (d0 * d1 <= 0.0 && std::abs(d) > std::abs(3.0 * d0)) return 3.0 * d0;
        return d;
    }

    double interpolate(double x) const {
        auto it = std::upper_bound(x_.begin(), x_.end(), x);
        std::size_t i = static_cast<std::size_t>(it - x_.begin());
        i = std::clamp<std::size_t>(i, 1, x_.size() - 1) - 1;
        const double h = x_[i + 1] - x_[i];
        const double t = (x - x_[i]) / h;
        const double t2 = t * t, t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
        return h00 * f_[i] + h10 * h * d_[i] + h01 * f_[i + 1] + h11 * h * d_[i + 1];
    }

    std::vector<double> x_, f_, d_;
    std::string provenance_;
};

/// Centering constant mu_{n,p} for real data, (1/n)(sqrt(n - 1/2) + sqrt(p - 1/2))^2.
inline double centering_mu(int n, int p) {
    if (n < 1 || p < 1) throw InvalidInput("centering_mu: n and p must be >= 1");
    const double a = std::sqrt(n - 0.5), b = std::sqrt(p - 0.5);
    return (a + b) * (a + b) / n;
}

/// Scaling constant sigma_{n,p} for real data.
inline double scaling_sigma(int n, int p) {
    if (n < 1 || p < 1) throw InvalidInput("scaling_sigma: n and p must be >= 1");
    const double a = std::sqrt(n - 0.5), b = std::sqrt(p - 0.5);
    return std::sqrt(centering_mu(n, p) / n) * std::cbrt(1.0 / a + 1.0 / b);
}

/// s(alpha) with F_beta(s) = 1 - alpha.
inline double tw_quantile(double alpha, FieldType beta = FieldType::real,
                          const TwQuantileTable& table = TwQuantileTable::builtin()) {
    if (beta != FieldType::real) throw Unsupported("tw_quantile: only beta = 1 is tabulated");
    if (!(alpha > 0.0 && alpha < 1.0)) throw OutOfRange("tw_quantile: alpha must lie in (0, 1)");
    return table.quantile(1.0 - alpha);
}

struct TwThresholdParams {
    double mu = 0.0;
    double sigma = 0.0;
    double s_alpha = 0.0;
    double alpha = 0.0;
    FieldType beta = FieldType::real;
};

inline TwThresholdParams threshold_params(int n, int p_eff, double alpha,
                                          FieldType beta = FieldType::real,
                                          const TwQuantileTable& table = TwQuantileTable::builtin()) {
    if (p_eff < 2) throw InvalidInput("threshold: effective dimension must be >= 2");
    return {centering_mu(n, p_eff), scaling_sigma(n, p_eff), tw_quantile(alpha, beta, table), alpha, beta};
}

/// phi = sigma2 (mu_{n,p_eff} + s(alpha) sigma_{n,p_eff}).
inline double detection_threshold(double sigma2, int n, int p_eff, double alpha,
                                  FieldType beta = FieldType::real,
                                  const TwQuantileTable& table = TwQuantileTable::builtin()) {
    if (!(sigma2 >= 0.0)) throw InvalidInput("detection_threshold: sigma2 must be >= 0");
    const auto t = threshold_params(n, p_eff, alpha, beta, table);
    return sigma2 * (t.mu + t.s_alpha * t.sigma);
}

}  // namespace lsrmt
