// lsrmt: source enumeration from sample eigenvalues.
//
//   lsrmt estimate --input eigs.csv --n 200 [--estimator ls-rmt] [--alpha 0.005] [--sigma2 1] [--trace out.csv]
//   lsrmt simulate --p 64 --n 128 [--lambdas 10,5] [--sigma2 1] [--seed 1] [--out eigs.csv]
//   lsrmt sweep    --preset fig4 [--trials 2000] [--seed 1] [--out fig4.csv] [--estimators ls-rmt,rmt]
//   lsrmt tw       --alpha 0.005 [--n 200 --p 100] [--sigma2 1]
//   lsrmt analyze  --p 100 --n 200 --lambdas 4 [--alpha 0.005] [--nu-ls 0]
//
// Exit status: 0 success, 1 usage error, 2 runtime error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lsrmt/lsrmt.hpp"

namespace {

constexpr int exit_usage = 1;
constexpr int exit_runtime = 2;

struct EstimateArgs {
    std::string input;
    int n = 0;
    std::string estimator = "ls-rmt";
    double alpha = 0.005;
    std::optional<double> sigma2;
    std::string trace;
};

struct SimulateArgs {
    int p = 0, n = 0;
    std::string lambdas;
    double sigma2 = 1.0;
    std::uint64_t seed = 1;
    std::string mixing = "diagonal";
    std::string out;
};

struct SweepArgs {
    std::string preset;
    std::string config;
    std::optional<int> trials;
    std::optional<std::uint64_t> seed;
    std::optional<double> alpha;
    std::optional<std::string> estimators;
    std::optional<bool> known_sigma2;
    std::optional<int> threads;
    std::string out;
};

struct TwArgs {
    double alpha = 0.0;
    std::optional<int> n, p;
    double sigma2 = 1.0;
};

struct AnalyzeArgs {
    int p = 0, n = 0;
    std::string lambdas;
    double sigma2 = 1.0;
    double alpha = 0.005;
    int indicator = 1;
    std::optional<double> nu_ls;
};

std::vector<double> parse_lambdas(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : lsrmt::split_list(text)) {
        double v = 0.0;
        if (!lsrmt::detail::parse_number(std::string_view(item), v))
            throw lsrmt::InvalidInput("--lambdas: malformed value '" + item + "'");
        out.push_back(v);
    }
    return out;
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw lsrmt::InvalidInput("--alpha must lie in (0, 1)");
}

int run_estimate(const EstimateArgs& a) {
    check_alpha(a.alpha);
    if (a.n < 1) throw lsrmt::InvalidInput("--n must be >= 1");
    if (a.sigma2 && !(*a.sigma2 > 0.0)) throw lsrmt::InvalidInput("--sigma2 must be > 0");
    const lsrmt::EigenSpectrum spectrum(lsrmt::read_eigenvalues_csv(a.input), a.n);

    lsrmt::EstimateTrace trace;
    if (a.estimator == "ls-rmt") {
        trace = lsrmt::ls_rmt_estimate(spectrum, a.alpha, a.sigma2);
    } else if (a.estimator == "rmt") {
        trace = lsrmt::rmt_estimate(spectrum, a.alpha, a.sigma2);
    } else if (a.estimator == "aic" || a.estimator == "mdl") {
        trace.q_hat = lsrmt::aic_mdl_baseline(
            spectrum, a.estimator == "aic" ? lsrmt::InformationCriterion::aic : lsrmt::InformationCriterion::mdl);
    } else {
        throw lsrmt::InvalidInput("--estimator must be one of ls-rmt, rmt, aic, mdl");
    }

    if (!a.trace.empty()) {
        std::ofstream out(a.trace);
        if (!out) throw lsrmt::IoError("cannot open '" + a.trace + "' for writing");
        out << "k,l_k,threshold,accepted\n" << std::setprecision(17);
        for (const auto& r : trace.per_k)
            out << r.k << ',' << r.l_k << ',' << r.threshold << ',' << (r.accepted ? 1 : 0) << '\n';
        if (!out) throw lsrmt::IoError("write failed for '" + a.trace + "'");
    }
    std::cout << "q_hat=" << trace.q_hat << '\n';
    return 0;
}

int run_simulate(const SimulateArgs& a) {
    lsrmt::SpikedScenario s{a.p, a.n, parse_lambdas(a.lambdas), a.sigma2};
    s.validate();
    lsrmt::Mixing mixing = lsrmt::Mixing::diagonal;
    if (a.mixing == "orthogonal") mixing = lsrmt::Mixing::random_orthogonal;
    else if (a.mixing != "diagonal") throw lsrmt::InvalidInput("--mixing must be diagonal or orthogonal");
    const auto spectrum = lsrmt::simulate_spectrum(s, a.seed, mixing);
    if (a.out.empty()) lsrmt::write_eigenvalues_csv(std::cout, spectrum.values);
    else lsrmt::write_eigenvalues_csv(a.out, spectrum);
    return 0;
}

int run_sweep_cmd(const SweepArgs& a) {
    if (a.preset.empty() == a.config.empty()) throw lsrmt::InvalidInput("give exactly one of --preset or --config");
    auto config = a.config.empty() ? lsrmt::figure_preset(a.preset) : lsrmt::read_sweep_config(a.config);
    if (auto env = lsrmt::seed_from_env()) config.seed = *env;
    if (a.trials) config.trials = *a.trials;
    if (a.seed) config.seed = *a.seed;
    if (a.alpha) config.alpha = *a.alpha;
    check_alpha(config.alpha);
    if (a.estimators) config.estimators = lsrmt::split_list(*a.estimators);
    if (a.known_sigma2) config.known_sigma2 = *a.known_sigma2;
    if (a.threads) config.threads = *a.threads;
    if (!a.out.empty()) config.output_path = a.out;

    const auto result = lsrmt::run_sweep(config);
    if (config.output_path.empty()) lsrmt::write_results(std::cout, result);
    else lsrmt::write_results(result, config.output_path);

    std::ostream& log = config.output_path.empty() ? std::cerr : std::cout;
    log << std::setprecision(12);
    for (std::size_t point = 0; point < config.grid.size(); ++point) {
        const auto& s = config.grid[point];
        log << result.preset << " p=" << s.p << " n=" << s.n << " q=" << s.q();
        if (config.swept == "lambda1") log << " lambda1=" << s.lambdas.front();
        for (const auto& r : result.rows)
            if (r.point == static_cast<int>(point))
                log << ' ' << r.estimator << ":P_E=" << r.p_mis() << ",P_OE=" << r.p_over() << ",err=" << r.errors;
        log << '\n';
    }
    return 0;
}

int run_tw(const TwArgs& a) {
    check_alpha(a.alpha);
    if (a.n.has_value() != a.p.has_value()) throw lsrmt::InvalidInput("--n and --p go together");
    std::cout << std::setprecision(15);
    std::cout << "s_alpha=" << lsrmt::tw_quantile(a.alpha) << '\n';
    if (a.n) {
        const auto t = lsrmt::threshold_params(*a.n, *a.p, a.alpha);
        std::cout << "mu=" << t.mu << '\n'
                  << "sigma=" << t.sigma << '\n'
                  << "phi=" << lsrmt::detection_threshold(a.sigma2, *a.n, *a.p, a.alpha) << '\n';
    }
    return 0;
}

int run_analyze(const AnalyzeArgs& a) {
    check_alpha(a.alpha);
    lsrmt::SpikedScenario s{a.p, a.n, parse_lambdas(a.lambdas), a.sigma2};
    auto model = lsrmt::error_model(s, a.alpha, a.indicator);
    if (a.nu_ls) model.nu_ls = *a.nu_ls;
    const auto cmp = lsrmt::delta_increased_ue(model);
    std::cout << std::setprecision(15) << "estimator,p_ue,p_oe,p_e,delta_inc_ue\n";
    for (const auto& [name, e] : {std::pair{"ls-rmt", cmp.ls_rmt}, std::pair{"rmt", cmp.rmt}})
        std::cout << name << ',' << e.p_ue << ',' << e.p_oe << ',' << e.p_e << ',' << e.delta_inc_ue << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Source enumeration from sample covariance eigenvalues"};
    app.require_subcommand(1);

    EstimateArgs est;
    auto* estimate = app.add_subcommand("estimate", "Estimate the number of signals from an eigenvalue CSV");
    estimate->add_option("--input", est.input, "Eigenvalue CSV (index,eigenvalue)")->required();
    estimate->add_option("--n", est.n, "Number of snapshots")->required();
    estimate->add_option("--estimator", est.estimator, "ls-rmt, rmt, aic or mdl")->capture_default_str();
    estimate->add_option("--alpha", est.alpha, "Significance level")->capture_default_str();
    estimate->add_option("--sigma2", est.sigma2, "Known noise variance");
    estimate->add_option("--trace", est.trace, "Write the per-k test trace as CSV");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Draw one spiked-covariance spectrum");
    simulate->add_option("--p", sim.p, "Dimension")->required();
    simulate->add_option("--n", sim.n, "Snapshots")->required();
    simulate->add_option("--lambdas", sim.lambdas, "Comma-separated signal strengths");
    simulate->add_option("--sigma2", sim.sigma2, "Noise variance")->capture_default_str();
    simulate->add_option("--seed", sim.seed, "Seed")->capture_default_str();
    simulate->add_option("--mixing", sim.mixing, "diagonal or orthogonal")->capture_default_str();
    simulate->add_option("--out", sim.out, "Output CSV (default stdout)");

    SweepArgs sw;
    auto* sweep = app.add_subcommand("sweep", "Monte-Carlo sweep of a figure preset");
    sweep->add_option("--preset", sw.preset, "fig1a, fig1b, fig2a, fig2b, fig3 ... fig7");
    sweep->add_option("--config", sw.config, "key=value configuration file");
    sweep->add_option("--trials", sw.trials, "Trials per grid point");
    sweep->add_option("--seed", sw.seed, "Master seed (overrides LSRMT_SEED)");
    sweep->add_option("--alpha", sw.alpha, "Significance level");
    sweep->add_option("--estimators", sw.estimators, "Comma-separated subset of ls-rmt,rmt,aic,mdl");
    sweep->add_option("--known-sigma2", sw.known_sigma2, "Pass the true noise variance (true/false)");
    sweep->add_option("--threads", sw.threads, "Worker threads (0: all cores)");
    sweep->add_option("--out", sw.out, "Output CSV (default stdout)");

    TwArgs tw;
    auto* twc = app.add_subcommand("tw", "Tracy-Widom quantile and threshold constants");
    twc->add_option("--alpha", tw.alpha, "Upper-tail probability")->required();
    twc->add_option("--n", tw.n, "Snapshots");
    twc->add_option("--p", tw.p, "Effective dimension");
    twc->add_option("--sigma2", tw.sigma2, "Noise variance for phi")->capture_default_str();

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "Theoretical error probabilities at the true signal count");
    analyze->add_option("--p", an.p, "Dimension")->required();
    analyze->add_option("--n", an.n, "Snapshots")->required();
    analyze->add_option("--lambdas", an.lambdas, "Comma-separated signal strengths");
    analyze->add_option("--sigma2", an.sigma2, "Noise variance")->capture_default_str();
    analyze->add_option("--alpha", an.alpha, "Significance level")->capture_default_str();
    analyze->add_option("--indicator", an.indicator, "Shrinkage indicator (0 or 1)")->capture_default_str()
        ->check(CLI::IsMember({0, 1}));
    analyze->add_option("--nu-ls", an.nu_ls, "Override the corrected bias");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*estimate) return run_estimate(est);
        if (*simulate) return run_simulate(sim);
        if (*sweep) return run_sweep_cmd(sw);
        if (*twc) return run_tw(tw);
        if (*analyze) return run_analyze(an);
    } catch (const lsrmt::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_runtime;
    }
    return exit_usage;
}
