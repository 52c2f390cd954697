#pragma once

/** @file
 * Seeded Monte-Carlo sweeps: for each grid point and trial one spectrum is
 * drawn and every configured estimator runs on it, so comparisons between
 * estimators are paired.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "error_analysis.hpp"
#include "errors.hpp"
#include "ls_rmt_estimator.hpp"
#include "rmt_estimator.hpp"
#include "rng.hpp"
#include "spectrum_io.hpp"
#include "spectrum_model.hpp"

namespace lsrmt {

struct TrialContext {
    int point = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    const SpikedScenario* scenario = nullptr;
};

/// Returns q_hat for one spectrum. Exceptions are tallied as errors.
using EstimatorFn = std::function<int(const EigenSpectrum&, const TrialContext&)>;
using SpectrumSource = std::function<EigenSpectrum(const SpikedScenario&, std::uint64_t)>;

struct EstimatorEntry {
    std::string name;
    EstimatorFn run;
};

inline const std::vector<std::string>& builtin_estimators() {
    static const std::vector<std::string> names{"ls-rmt", "rmt", "aic", "mdl"};
    return names;
}

/// Built-in estimator by name. known_sigma2 passes the scenario's sigma2 to
/// the RMT-type estimators; AIC and MDL ignore it.
inline EstimatorFn make_estimator(const std::string& name, double alpha, bool known_sigma2) {
    auto sigma = [known_sigma2](const TrialContext& c) -> std::optional<double> {
        if (known_sigma2 && c.scenario) return c.scenario->sigma2;
        return std::nullopt;
    };
    if (name == "ls-rmt")
        return [=](const EigenSpectrum& s, const TrialContext& c) { return ls_rmt_estimate(s, alpha, sigma(c)).q_hat; };
    if (name == "rmt")
        return [=](const EigenSpectrum& s, const TrialContext& c) { return rmt_estimate(s, alpha, sigma(c)).q_hat; };
    if (name == "aic")
        return [](const EigenSpectrum& s, const TrialContext&) { return aic_mdl_baseline(s, InformationCriterion::aic); };
    if (name == "mdl")
        return [](const EigenSpectrum& s, const TrialContext&) { return aic_mdl_baseline(s, InformationCriterion::mdl); };
    throw InvalidInput("unknown estimator '" + name + "' (expected ls-rmt, rmt, aic or mdl)");
}

struct SweepConfig {
    std::string preset = "custom";
    std::string swept = "p";  ///< p, n or lambda1; informational
    std::vector<SpikedScenario> grid;
    std::vector<std::string> estimators{"ls-rmt", "rmt"};
    std::vector<EstimatorEntry> custom_estimators;  ///< run after the named ones
    double alpha = 0.005;
    int trials = 2000;
    std::uint64_t seed = 1;
    bool known_sigma2 = false;
    int threads = 0;  ///< 0: hardware concurrency
    std::string output_path;
    SpectrumSource spectrum_source;  ///< default: simulate_spectrum

    void validate() const {
        if (trials < 1) throw InvalidInput("sweep: trials must be >= 1");
        if (grid.empty()) throw InvalidInput("sweep: grid is empty");
        if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("sweep: alpha must lie in (0, 1)");
        if (estimators.empty() && custom_estimators.empty()) throw InvalidInput("sweep: no estimators");
        if (threads < 0) throw InvalidInput("sweep: threads must be >= 0");
        for (const auto& s : grid) s.validate();
        for (const auto& e : estimators) (void)make_estimator(e, alpha, known_sigma2);
    }
};

/// Tallies for one (grid point, estimator).
struct PointResult {
    int point = 0;
    SpikedScenario scenario;
    std::string estimator;
    int trials = 0;
    int under = 0;
    int correct = 0;
    int over = 0;
    int errors = 0;
    double wall_seconds = 0.0;  ///< whole grid point, shared by its estimators

    double p_under() const { return static_cast<double>(under) / trials; }
    double p_correct() const { return static_cast<double>(correct) / trials; }
    double p_over() const { return static_cast<double>(over) / trials; }
    double p_mis() const { return static_cast<double>(under + over) / trials; }
};

struct SweepResult {
    std::string preset;
    double alpha = 0.0;
    std::uint64_t seed = 0;
    std::vector<PointResult> rows;  ///< grid order, then estimator order
    double wall_seconds = 0.0;

    const PointResult& at(int point, const std::string& estimator) const {
        for (const auto& r : rows)
            if (r.point == point && r.estimator == estimator) return r;
        throw OutOfRange("sweep result: no row for point " + std::to_string(point) + ", estimator " + estimator);
    }
};

namespace detail {

/// Runs body(i) for i in [0, count) on up to `threads` workers.
inline void parallel_for(int count, int threads, const std::function<void(int)>& body) {
    const int workers = std::max(1, std::min(threads, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int i = next++; i < count && !failed; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        if (!failed.exchange(true)) failure = std::current_exception();
                    }
                }
            });
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/**
 * Trial t at grid point i uses seed derive_seed(master, {i, t}). Per-trial
 * outcomes are stored by index and reduced in order, so the result does not
 * depend on the thread count.
 */
inline SweepResult run_sweep(const SweepConfig& config) {
    config.validate();
    std::vector<EstimatorEntry> ests;
    for (const auto& name : config.estimators) ests.push_back({name, make_estimator(name, config.alpha, config.known_sigma2)});
    for (const auto& c : config.custom_estimators) ests.push_back(c);
    const SpectrumSource source = config.spectrum_source
                                      ? config.spectrum_source
                                      : SpectrumSource([](const SpikedScenario& s, std::uint64_t seed) {
                                            return simulate_spectrum(s, seed);
                                        });
    const int threads =
        config.threads > 0 ? config.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    SweepResult result;
    result.preset = config.preset;
    result.alpha = config.alpha;
    result.seed = config.seed;
    const auto sweep_start = std::chrono::steady_clock::now();

    constexpr int failed = -1;
    const auto n_est = ests.size();
    for (std::size_t point = 0; point < config.grid.size(); ++point) {
        const auto& scenario = config.grid[point];
        const auto start = std::chrono::steady_clock::now();
        std::vector<int> outcome(static_cast<std::size_t>(config.trials) * n_est, failed);

        detail::parallel_for(config.trials, threads, [&](int t) {
            TrialContext ctx{static_cast<int>(point), t,
                             derive_seed(config.seed, {static_cast<std::uint64_t>(point), static_cast<std::uint64_t>(t)}),
                             &scenario};
            std::optional<EigenSpectrum> spectrum;
            try {
                spectrum = source(scenario, ctx.seed);
            } catch (const std::exception&) {
                return;  // every estimator errors on this trial
            }
            for (std::size_t e = 0; e < n_est; ++e) {
                try {
                    outcome[static_cast<std::size_t>(t) * n_est + e] = ests[e].run(*spectrum, ctx);
                } catch (const std::exception&) {
                }
            }
        });

        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        for (std::size_t e = 0; e < n_est; ++e) {
            PointResult r;
            r.point = static_cast<int>(point);
            r.scenario = scenario;
            r.estimator = ests[e].name;
            r.trials = config.trials;
            r.wall_seconds = seconds;
            for (int t = 0; t < config.trials; ++t) {
                const int q_hat = outcome[static_cast<std::size_t>(t) * n_est + e];
                if (q_hat == failed) ++r.errors;
                else if (q_hat < scenario.q()) ++r.under;
                else if (q_hat == scenario.q()) ++r.correct;
                else ++r.over;
            }
            result.rows.push_back(std::move(r));
        }
    }
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - sweep_start).count();
    return result;
}

// ---------------------------------------------------------------- presets

inline const std::vector<std::string>& figure_preset_names() {
    static const std::vector<std::string> names{"fig1a", "fig1b", "fig2a", "fig2b", "fig3",
                                                "fig4",  "fig5",  "fig6",  "fig7"};
    return names;
}

/// Detectability edge sqrt(p/n) sigma2.
inline double detection_edge(int p, int n, double sigma2 = 1.0) {
    return std::sqrt(static_cast<double>(p) / n) * sigma2;
}

inline std::vector<double> fig7_lambda_grid() {
    const double edge = detection_edge(160, 320);
    constexpr int points = 24;
    std::vector<double> grid(points);
    const double lo = std::log(0.1), hi = std::log(8.0);
    for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = edge * std::exp(lo + (hi - lo) * i / (points - 1));
    return grid;
}

inline SweepConfig figure_preset(const std::string& name) {
    const std::vector<int> p_grid{16, 24, 32, 48, 64, 96, 128};
    const std::vector<double> strong{150, 120, 100};
    const std::vector<double> nine{10, 10, 9, 8, 7, 6, 5, 4, 2.5};

    SweepConfig c;
    c.preset = name;
    c.alpha = 0.005;
    c.trials = 2000;
    c.estimators = builtin_estimators();
    auto sweep_p = [&](const std::vector<double>& lambdas, const std::vector<int>& ps, int n_per_p_num,
                       int n_per_p_den) {
        c.swept = "p";
        for (int p : ps) c.grid.push_back({p, p * n_per_p_num / n_per_p_den, lambdas});
    };

    if (name == "fig1a" || name == "fig1b" || name == "fig2a" || name == "fig2b") {
        c.known_sigma2 = name.starts_with("fig1");
        c.estimators = {"ls-rmt", "rmt"};
        sweep_p(name.ends_with('a') ? std::vector<double>{} : strong, p_grid, 2, 1);
    } else if (name == "fig3") {
        sweep_p({}, p_grid, 2, 1);
    } else if (name == "fig4") {
        sweep_p(nine, p_grid, 2, 1);
    } else if (name == "fig5") {
        // n = p/2 must exceed q = 9
        sweep_p({16, 15, 12, 12, 12, 10, 10, 8, 6}, {24, 32, 48, 64, 96, 128}, 1, 2);
    } else if (name == "fig6") {
        c.swept = "n";
        for (int n : {20, 30, 40, 50, 75, 100, 150, 200})
            c.grid.push_back({50, n, {12, 10, 9, 8, 7, 7, 6, 6, 5, 4, 2.5}});
    } else if (name == "fig7") {
        c.swept = "lambda1";
        for (double l : fig7_lambda_grid()) c.grid.push_back({160, 320, {l}});
    } else {
        throw InvalidInput("unknown preset '" + name + "' (expected fig1a..fig2b or fig3..fig7)");
    }
    return c;
}

// ---------------------------------------------------------------- CSV

inline constexpr std::string_view results_csv_header =
    "preset,p,n,q_true,estimator,alpha,trials,seed,p_under,p_correct,p_over,p_mis,errors";

inline void write_results(std::ostream& out, const SweepResult& result) {
    out << results_csv_header << '\n' << std::setprecision(17);
    for (const auto& r : result.rows)
        out << result.preset << ',' << r.scenario.p << ',' << r.scenario.n << ',' << r.scenario.q() << ','
            << r.estimator << ',' << result.alpha << ',' << r.trials << ',' << result.seed << ',' << r.p_under()
            << ',' << r.p_correct() << ',' << r.p_over() << ',' << r.p_mis() << ',' << r.errors << '\n';
}

inline void write_results(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_results(out, result);
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

/// One parsed CSV row with the counts recovered from the probabilities.
struct ResultRow {
    std::string preset;
    int p = 0, n = 0, q_true = 0;
    std::string estimator;
    double alpha = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    int under = 0, correct = 0, over = 0, errors = 0;
};

inline std::vector<ResultRow> read_results(std::istream& in, const std::string& source = "<stream>") {
    std::string line;
    int line_no = 1;
    auto fail = [&](const std::string& what) {
        throw InvalidInput(source + ":" + std::to_string(line_no) + ": " + what);
    };
    if (!std::getline(in, line) || detail::trim(line) != results_csv_header) fail("unexpected header");

    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        std::vector<std::string_view> f;
        std::string_view rest = line;
        for (auto pos = rest.find(','); pos != std::string_view::npos; pos = rest.find(',')) {
            f.push_back(rest.substr(0, pos));
            rest.remove_prefix(pos + 1);
        }
        f.push_back(rest);
        if (f.size() != 13) fail("expected 13 fields, got " + std::to_string(f.size()));

        ResultRow r;
        r.preset = std::string(detail::trim(f[0]));
        r.estimator = std::string(detail::trim(f[4]));
        double pu = 0, pc = 0, po = 0, pm = 0;
        if (!detail::parse_number(f[1], r.p) || !detail::parse_number(f[2], r.n) ||
            !detail::parse_number(f[3], r.q_true) || !detail::parse_number(f[5], r.alpha) ||
            !detail::parse_number(f[6], r.trials) || !detail::parse_number(f[7], r.seed) ||
            !detail::parse_number(f[8], pu) || !detail::parse_number(f[9], pc) || !detail::parse_number(f[10], po) ||
            !detail::parse_number(f[11], pm) || !detail::parse_number(f[12], r.errors))
            fail("malformed field");
        if (r.trials < 1) fail("trials must be >= 1");
        auto count = [&](double prob) {
            const double c = prob * r.trials;
            const auto rounded = std::llround(c);
            if (std::abs(c - static_cast<double>(rounded)) > 1e-6) fail("probability is not a count / trials");
            return static_cast<int>(rounded);
        };
        r.under = count(pu);
        r.correct = count(pc);
        r.over = count(po);
        if (count(pm) != r.under + r.over) fail("p_mis does not equal p_under + p_over");
        if (r.under + r.correct + r.over + r.errors != r.trials) fail("counts do not sum to trials");
        rows.push_back(std::move(r));
    }
    return rows;
}

inline std::vector<ResultRow> read_results(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_results(in, path);
}

// ---------------------------------------------------------------- config

inline bool parse_bool(std::string_view v) {
    v = detail::trim(v);
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw InvalidInput("expected a boolean, got '" + std::string(v) + "'");
}

inline std::vector<std::string> split_list(std::string_view v) {
    std::vector<std::string> out;
    while (!v.empty()) {
        const auto pos = v.find(',');
        const auto item = detail::trim(v.substr(0, pos));
        if (!item.empty()) out.emplace_back(item);
        if (pos == std::string_view::npos) break;
        v.remove_prefix(pos + 1);
    }
    return out;
}

/**
 * Plain-text `key = value` file, `#` starts a comment. Recognised keys:
 * preset, trials, seed, alpha, estimators, known_sigma2, threads, out.
 * A preset key resets the configuration to that preset before the others apply.
 */
inline SweepConfig read_sweep_config(std::istream& in, const std::string& source = "<stream>") {
    std::map<std::string, std::string> kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto body = detail::trim(std::string_view(line).substr(0, line.find('#')));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos)
            throw InvalidInput(source + ":" + std::to_string(line_no) + ": expected key=value");
        const std::string key(detail::trim(body.substr(0, eq)));
        static const std::vector<std::string> known{"preset",       "trials",  "seed", "alpha", "estimators",
                                                    "known_sigma2", "threads", "out"};
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw InvalidInput(source + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
        kv[key] = std::string(detail::trim(body.substr(eq + 1)));
    }
    if (!kv.contains("preset")) throw InvalidInput(source + ": missing 'preset'");
    SweepConfig c = figure_preset(kv["preset"]);
    auto number = [&](const std::string& key, auto& out) {
        if (kv.contains(key) && !detail::parse_number(kv[key], out))
            throw InvalidInput(source + ": malformed value for '" + key + "'");
    };
    number("trials", c.trials);
    number("seed", c.seed);
    number("alpha", c.alpha);
    number("threads", c.threads);
    if (kv.contains("estimators")) c.estimators = split_list(kv["estimators"]);
    if (kv.contains("known_sigma2")) c.known_sigma2 = parse_bool(kv["known_sigma2"]);
    if (kv.contains("out")) c.output_path = kv["out"];
    return c;
}

inline SweepConfig read_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_sweep_config(in, path);
}

inline constexpr const char* seed_env_var = "LSRMT_SEED";

/// Master seed from the environment, if set.
inline std::optional<std::uint64_t> seed_from_env() {
    const char* v = std::getenv(seed_env_var);
    if (!v) return std::nullopt;
    std::uint64_t seed = 0;
    if (!detail::parse_number(std::string_view(v), seed))
        throw InvalidInput(std::string(seed_env_var) + " is not an unsigned integer: '" + v + "'");
    return seed;
}

}  // namespace lsrmt
