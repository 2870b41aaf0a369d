#include "pricing/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

namespace pricing {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string opt_bool(const std::optional<bool>& v) {
    if (!v) return "";
    return *v ? "1" : "0";
}

std::string opt_real(const std::optional<double>& v) { return v ? fmt(*v) : ""; }

struct Cell {
    std::int64_t horizon;
    std::int64_t budget;
    double valuation;
    AlgorithmId algorithm;
    AdversarySpec adversary;
};

ResultRow run_cell_trial(const Cell& cell, std::int64_t trial, const SweepSpec& spec) {
    EpisodeConfig config;
    config.horizon = cell.horizon;
    config.valuation = Valuation::make(cell.valuation);
    config.corruption_budget = cell.budget;
    config.delta = spec.delta;
    config.algorithm = cell.algorithm;
    config.adversary = cell.adversary;
    config.seed = spec.base_seed + static_cast<std::uint64_t>(trial);
    config.verify = spec.verify;

    EpisodeResult result = run_episode(config);

    ResultRow row;
    row.horizon = cell.horizon;
    row.budget = cell.budget;
    row.valuation = cell.valuation;
    row.algorithm = cell.algorithm;
    row.adversary = cell.adversary.label();
    row.trial = trial;
    row.seed = config.seed;
    row.delta = spec.delta;
    row.total_regret = result.total_regret;
    row.corruptions_used = result.corruptions_used;
    row.correct_leaf_fails = result.ledger.correct_leaf_fails;
    row.wrong_leaf_fails = result.ledger.wrong_leaf_fails;
    row.honest_nonleaf = result.ledger.honest_nonleaf;
    row.corrupted_nonleaf = result.ledger.corrupted_nonleaf;
    row.final_potential = result.ledger.potential;
    row.deterministic_ok = result.bounds.deterministic_ok();

    auto flag = [&](const char* name) -> std::optional<bool> {
        const BoundCheck* c = result.bounds.find(name);
        if (!c) return std::nullopt;
        return c->satisfied;
    };
    auto slack = [&](const char* name) -> std::optional<double> {
        const BoundCheck* c = result.bounds.find(name);
        if (!c) return std::nullopt;
        return c->slack();
    };
    row.fail_counter_ok = flag("fail_counter_bound");
    row.regret_decomp_ok = flag("regret_decomposition");
    row.nt_budget_ok = flag("correct_fail_budget");
    row.commit_regret_ok = flag("commit_regret_known");
    row.known_bound_ok = flag("known_regret_bound");
    row.known_bound_slack = slack("known_regret_bound");
    row.plus_regret_ok = flag("plus_leaf_regret");
    row.star_regret_ok = flag("star_leaf_regret");
    row.minus_regret_ok = flag("minus_leaf_regret");
    row.unknown_bound_ok = flag("unknown_regret_bound");
    row.unknown_bound_slack = slack("unknown_regret_bound");
    row.block_stat_ok = flag("minus_block_stat");
    return row;
}

}  // namespace

void SweepSpec::validate() const {
    if (horizons.empty() || budgets.empty() || valuations.empty() || algorithms.empty() ||
        adversaries.empty())
        throw std::invalid_argument("SweepSpec: all lists must be non-empty");
    if (trials_per_cell < 1) throw std::invalid_argument("SweepSpec: trials_per_cell must be >= 1");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("SweepSpec: delta in (0,1)");
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<Cell> cells;
    for (auto t : spec.horizons)
        for (auto c : spec.budgets)
            for (auto v : spec.valuations)
                for (auto alg : spec.algorithms)
                    for (const auto& adv : spec.adversaries) {
                        if (c > t) {
                            std::cerr << "warning: skipping unsatisfiable cell C=" << c
                                      << " > T=" << t << "\n";
                            continue;
                        }
                        cells.push_back(Cell{t, c, v, alg, adv});
                    }

    std::vector<ResultRow> rows(cells.size() * static_cast<std::size_t>(spec.trials_per_cell));
    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            std::size_t cell_idx = j / static_cast<std::size_t>(spec.trials_per_cell);
            std::int64_t trial = static_cast<std::int64_t>(
                j % static_cast<std::size_t>(spec.trials_per_cell));
            rows[j] = run_cell_trial(cells[cell_idx], trial, spec);
        }
    };

    std::size_t total = rows.size();
    unsigned workers = spec.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    if (workers <= 1 || total < 2 * workers) {
        run_range(0, total);
    } else {
        std::vector<std::future<void>> futures;
        std::size_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t begin = w * chunk;
            std::size_t end = std::min(total, begin + chunk);
            if (begin >= end) break;
            futures.push_back(std::async(std::launch::async, run_range, begin, end));
        }
        for (auto& f : futures) f.get();  // rethrows any VerificationError
    }
    return rows;
}

void write_results_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
    out << "T,C,valuation,algorithm,adversary,trial,seed,delta,total_regret,corruptions_used,"
           "N_T,N_F,H,K,final_phi,det_ok,fail_counter_ok,regret_decomp_ok,nt_budget_ok,commit_regret_ok,"
           "known_bound_ok,known_bound_slack,plus_regret_ok,star_regret_ok,minus_regret_ok,unknown_bound_ok,unknown_bound_slack,block_stat_ok\n";
    for (const auto& r : rows) {
        out << r.horizon << ',' << r.budget << ',' << fmt(r.valuation) << ','
            << to_string(r.algorithm) << ',' << r.adversary << ',' << r.trial << ',' << r.seed
            << ',' << fmt(r.delta) << ',' << fmt(r.total_regret) << ',' << r.corruptions_used
            << ',' << r.correct_leaf_fails << ',' << r.wrong_leaf_fails << ',' << r.honest_nonleaf
            << ',' << r.corrupted_nonleaf << ',' << r.final_potential << ','
            << (r.deterministic_ok ? "1" : "0") << ',' << opt_bool(r.fail_counter_ok) << ','
            << opt_bool(r.regret_decomp_ok) << ',' << opt_bool(r.nt_budget_ok) << ','
            << opt_bool(r.commit_regret_ok) << ',' << opt_bool(r.known_bound_ok) << ',' << opt_real(r.known_bound_slack)
            << ',' << opt_bool(r.plus_regret_ok) << ',' << opt_bool(r.star_regret_ok) << ','
            << opt_bool(r.minus_regret_ok) << ',' << opt_bool(r.unknown_bound_ok) << ',' << opt_real(r.unknown_bound_slack)
            << ',' << opt_bool(r.block_stat_ok) << '\n';
    }
}

namespace {

struct CellKey {
    std::int64_t horizon;
    std::int64_t budget;
    double valuation;
    std::string algorithm;
    std::string adversary;

    auto tie() const { return std::tie(horizon, budget, valuation, algorithm, adversary); }
    bool operator<(const CellKey& o) const { return tie() < o.tie(); }
};

struct CellAgg {
    std::int64_t trials = 0;
    double sum_regret = 0.0;
    double max_regret = 0.0;
    std::int64_t det_violations = 0;
    std::int64_t unknown_bound_violations = 0;
    std::int64_t star_regret_violations = 0;
    std::int64_t block_stat_events = 0;
};

std::map<CellKey, CellAgg> aggregate(const std::vector<ResultRow>& rows) {
    std::map<CellKey, CellAgg> cells;
    for (const auto& r : rows) {
        CellKey key{r.horizon, r.budget, r.valuation, to_string(r.algorithm), r.adversary};
        CellAgg& a = cells[key];
        ++a.trials;
        a.sum_regret += r.total_regret;
        a.max_regret = std::max(a.max_regret, r.total_regret);
        if (!r.deterministic_ok) ++a.det_violations;
        if (r.unknown_bound_ok && !*r.unknown_bound_ok) ++a.unknown_bound_violations;
        if (r.star_regret_ok && !*r.star_regret_ok) ++a.star_regret_violations;
        if (r.block_stat_ok && !*r.block_stat_ok) ++a.block_stat_events;
    }
    return cells;
}

}  // namespace

void write_summary_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
    out << "T,C,valuation,algorithm,adversary,trials,mean_regret,max_regret,"
           "det_violations,unknown_bound_viol_freq,star_regret_viol_freq,block_stat_freq\n";
    for (const auto& [key, a] : aggregate(rows)) {
        double n = static_cast<double>(a.trials);
        out << key.horizon << ',' << key.budget << ',' << fmt(key.valuation) << ','
            << key.algorithm << ',' << key.adversary << ',' << a.trials << ','
            << fmt(a.sum_regret / n) << ',' << fmt(a.max_regret) << ',' << a.det_violations << ','
            << fmt(static_cast<double>(a.unknown_bound_violations) / n) << ','
            << fmt(static_cast<double>(a.star_regret_violations) / n) << ','
            << fmt(static_cast<double>(a.block_stat_events) / n) << '\n';
    }
}

void curve_export(const std::vector<ResultRow>& rows, char x_axis, std::ostream& out) {
    if (x_axis != 'C' && x_axis != 'T')
        throw std::invalid_argument("curve_export: x_axis must be 'C' or 'T'");
    out << "algorithm,x,mean_regret,max_regret,bound\n";
    struct Agg {
        std::int64_t n = 0;
        double sum = 0.0;
        double max = 0.0;
        double bound = 0.0;
    };
    std::map<std::pair<std::string, std::int64_t>, Agg> series;
    for (const auto& r : rows) {
        std::int64_t x = (x_axis == 'C') ? r.budget : r.horizon;
        Agg& a = series[{to_string(r.algorithm), x}];
        ++a.n;
        a.sum += r.total_regret;
        a.max = std::max(a.max, r.total_regret);
        double d = std::ceil(std::log2(static_cast<double>(r.horizon)));
        double c = static_cast<double>(r.budget);
        double t = static_cast<double>(r.horizon);
        double bound = 0.0;
        if (r.algorithm == AlgorithmId::CommitKnown) {
            bound = 5.0 * d + 19.0 * c + 3.0;
        } else if (r.algorithm == AlgorithmId::CommitUnknown) {
            bound = 1.0 + 20.0 * std::log(t) * std::log(t / r.delta) + 17.0 * d + 51.0 * c;
        }
        a.bound = std::max(a.bound, bound);
    }
    for (const auto& [key, a] : series) {
        out << key.first << ',' << key.second << ',' << fmt(a.sum / static_cast<double>(a.n))
            << ',' << fmt(a.max) << ',' << (a.bound > 0.0 ? fmt(a.bound) : "") << '\n';
    }
}

SweepOutcome run(const SweepSpec& spec) {
    std::vector<ResultRow> rows = run_sweep(spec);
    std::filesystem::create_directories(spec.out_dir);
    SweepOutcome outcome;
    outcome.results_csv = std::filesystem::path(spec.out_dir) / "results.csv";
    outcome.summary_csv = std::filesystem::path(spec.out_dir) / "summary.csv";
    {
        std::ofstream f(outcome.results_csv, std::ios::binary);
        write_results_csv(rows, f);
    }
    {
        std::ofstream f(outcome.summary_csv, std::ios::binary);
        write_summary_csv(rows, f);
    }
    outcome.episodes = static_cast<std::int64_t>(rows.size());
    for (const auto& r : rows)
        if (!r.deterministic_ok) ++outcome.deterministic_violations;
    return outcome;
}

namespace {

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) {
        // trim
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        parts.push_back(item.substr(b, e - b + 1));
    }
    return parts;
}

double parse_real(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
    return std::stod(text);
}

bool parse_bool(const std::string& text) {
    if (text == "1" || text == "true" || text == "on" || text == "yes") return true;
    if (text == "0" || text == "false" || text == "off" || text == "no") return false;
    throw std::invalid_argument("expected a boolean, got: " + text);
}

}  // namespace

void apply_config_line(SweepSpec& spec, const std::string& key, const std::string& value) {
    if (key == "horizons" || key == "horizon") {
        spec.horizons.clear();
        for (const auto& s : split_list(value)) spec.horizons.push_back(std::stoll(s));
    } else if (key == "budgets" || key == "budget") {
        spec.budgets.clear();
        for (const auto& s : split_list(value)) spec.budgets.push_back(std::stoll(s));
    } else if (key == "valuations" || key == "valuation") {
        spec.valuations.clear();
        for (const auto& s : split_list(value)) spec.valuations.push_back(parse_real(s));
    } else if (key == "algorithms" || key == "algorithm") {
        spec.algorithms.clear();
        for (const auto& s : split_list(value)) spec.algorithms.push_back(algorithm_from_string(s));
    } else if (key == "adversaries" || key == "adversary") {
        spec.adversaries.clear();
        for (const auto& s : split_list(value)) spec.adversaries.push_back(adversary_from_string(s));
    } else if (key == "trials") {
        spec.trials_per_cell = std::stoll(value);
    } else if (key == "seed") {
        spec.base_seed = std::stoull(value);
    } else if (key == "delta") {
        spec.delta = parse_real(value);
    } else if (key == "out_dir") {
        spec.out_dir = value;
    } else if (key == "parallel") {
        spec.parallel = parse_bool(value);
    } else if (key == "verify") {
        spec.verify = parse_bool(value);
    } else {
        throw std::invalid_argument("unknown config key: " + key);
    }
}

SweepSpec parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path.string());
    SweepSpec spec;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        apply_config_line(spec, key, value);
    }
    return spec;
}

}  // namespace pricing
