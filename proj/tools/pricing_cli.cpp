// Command-line front end: parameter sweeps, Monte Carlo trials, CSV and
// curve emission, plus the exhaustive small-instance oracle.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pricing/harness.hpp"
#include "pricing/oracle.hpp"

namespace {

int run_oracle_suite() {
    using namespace pricing;
    bool all_ok = true;
    for (std::int64_t horizon : {4, 8, 16}) {
        for (std::int64_t corruption : {0, 1, 2}) {
            for (AlgorithmId alg : {AlgorithmId::CommitKnown, AlgorithmId::MajorityVote}) {
                auto verdict = oracle::exhaustive_adversary_check(horizon, corruption, alg);
                std::cout << (verdict.ok ? "OK  " : "FAIL") << " T=" << horizon
                          << " C=" << corruption << " " << to_string(alg) << " ("
                          << verdict.cases_checked << " cases)";
                if (!verdict.ok) std::cout << " counterexample: " << verdict.counterexample;
                std::cout << "\n";
                all_ok = all_ok && verdict.ok;
            }
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robust dynamic pricing laboratory"};

    std::string config_path, horizon, budget, valuation, algorithm, adversary;
    std::string out_dir = ".";
    std::string curve_axis;
    std::int64_t trials = -1;
    std::uint64_t seed = 0;
    double delta = -1.0;
    bool parallel = false;
    bool verify = true;
    bool oracle_mode = false;
    bool seed_set = false;

    app.add_option("--config", config_path, "key = value config file");
    app.add_option("--horizon", horizon, "comma-separated list of T values");
    app.add_option("--budget", budget, "comma-separated list of C values");
    app.add_option("--valuation", valuation, "comma-separated v* values (fractions allowed)");
    app.add_option("--algorithm", algorithm,
                   "comma-separated: commit-known, commit-unknown, majority-vote, plain-bsearch");
    app.add_option("--adversary", adversary,
                   "comma-separated: no-corruption, mimic-low[:v:burn], leaf-trap[:idx], "
                   "commit-stall, random-budget[:p]");
    app.add_option("--delta", delta, "confidence parameter for commit-unknown");
    app.add_option("--trials", trials, "episodes per cell");
    app.add_option("--seed", seed, "base seed (episode seed = base + trial)");
    app.add_option("--out-dir", out_dir, "output directory for CSV files");
    app.add_flag("--parallel", parallel, "run episodes concurrently");
    app.add_flag("--verify,!--no-verify", verify, "per-step invariant assertions (default on)");
    app.add_flag("--oracle", oracle_mode, "run the exhaustive small-instance oracle and exit");
    app.add_option("--curve", curve_axis, "also export curve data over this axis: C or T");

    CLI11_PARSE(app, argc, argv);
    seed_set = app.count("--seed") > 0;

    try {
        if (oracle_mode) return run_oracle_suite();

        pricing::SweepSpec spec;
        if (!config_path.empty()) spec = pricing::parse_config_file(config_path);
        if (!horizon.empty()) pricing::apply_config_line(spec, "horizons", horizon);
        if (!budget.empty()) pricing::apply_config_line(spec, "budgets", budget);
        if (!valuation.empty()) pricing::apply_config_line(spec, "valuations", valuation);
        if (!algorithm.empty()) pricing::apply_config_line(spec, "algorithms", algorithm);
        if (!adversary.empty()) pricing::apply_config_line(spec, "adversaries", adversary);
        if (delta > 0.0) spec.delta = delta;
        if (trials > 0) spec.trials_per_cell = trials;
        if (seed_set) spec.base_seed = seed;
        spec.out_dir = out_dir;
        spec.parallel = parallel;
        spec.verify = verify;

        auto rows = pricing::run_sweep(spec);
        std::filesystem::create_directories(spec.out_dir);
        auto results_path = std::filesystem::path(spec.out_dir) / "results.csv";
        auto summary_path = std::filesystem::path(spec.out_dir) / "summary.csv";
        {
            std::ofstream f(results_path, std::ios::binary);
            pricing::write_results_csv(rows, f);
        }
        {
            std::ofstream f(summary_path, std::ios::binary);
            pricing::write_summary_csv(rows, f);
        }
        if (!curve_axis.empty()) {
            auto curve_path = std::filesystem::path(spec.out_dir) / "curve.csv";
            std::ofstream f(curve_path, std::ios::binary);
            pricing::curve_export(rows, curve_axis[0], f);
            std::cout << "wrote " << curve_path.string() << "\n";
        }

        std::int64_t violations = 0;
        for (const auto& r : rows)
            if (!r.deterministic_ok) ++violations;
        std::cout << "episodes: " << rows.size() << "\n"
                  << "deterministic bound violations: " << violations << "\n"
                  << "wrote " << results_path.string() << " and " << summary_path.string() << "\n";
        return (spec.verify && violations > 0) ? 2 : 0;
    } catch (const pricing::VerificationError& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
