#ifndef PRICING_HARNESS_HPP
#define PRICING_HARNESS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pricing/core.hpp"
#include "pricing/episode.hpp"

namespace pricing {

struct SweepSpec {
    std::vector<std::int64_t> horizons{256, 1024, 4096, 16384};
    std::vector<std::int64_t> budgets{0, 1, 4, 16, 64};
    std::vector<double> valuations{0.2, 1.0 / 3.0, 0.5, 0.7, 0.999};
    std::vector<AlgorithmId> algorithms{AlgorithmId::CommitKnown, AlgorithmId::CommitUnknown};
    std::vector<AdversarySpec> adversaries{
        AdversarySpec{AdversaryKind::NoCorruption},
        AdversarySpec{AdversaryKind::MimicLowInstance},
        AdversarySpec{AdversaryKind::LeafTrap},
        AdversarySpec{AdversaryKind::CommitStall},
        AdversarySpec{AdversaryKind::RandomBudget},
    };
    std::int64_t trials_per_cell = 100;
    std::uint64_t base_seed = 1;
    double delta = 0.05;
    bool verify = true;
    bool parallel = false;
    std::string out_dir = ".";

    void validate() const;
};

struct ResultRow {
    // cell
    std::int64_t horizon = 0;
    std::int64_t budget = 0;
    double valuation = 0.0;
    AlgorithmId algorithm = AlgorithmId::CommitKnown;
    std::string adversary;
    std::int64_t trial = 0;
    std::uint64_t seed = 0;
    double delta = 0.0;
    // outcome
    double total_regret = 0.0;
    std::int64_t corruptions_used = 0;
    std::int64_t correct_leaf_fails = 0;
    std::int64_t wrong_leaf_fails = 0;
    std::int64_t honest_nonleaf = 0;
    std::int64_t corrupted_nonleaf = 0;
    int final_potential = 0;
    bool deterministic_ok = true;
    // per-bound flags and slacks; empty optionals mean "not applicable"
    std::optional<bool> fail_counter_ok, regret_decomp_ok, nt_budget_ok, commit_regret_ok, known_bound_ok;
    std::optional<bool> plus_regret_ok, star_regret_ok, minus_regret_ok, unknown_bound_ok, block_stat_ok;
    std::optional<double> known_bound_slack, unknown_bound_slack;
};

/// Runs every (T, C, v*, algorithm, adversary) cell for trials_per_cell
/// episodes with seeds base_seed + trial. Cells with C > T are skipped with
/// a warning. Row order is deterministic regardless of parallelism.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

void write_results_csv(const std::vector<ResultRow>& rows, std::ostream& out);
void write_summary_csv(const std::vector<ResultRow>& rows, std::ostream& out);

/// Plot-ready columns (x, mean regret, max regret, theoretical bound) per
/// algorithm, x being either the budget C or the horizon T.
void curve_export(const std::vector<ResultRow>& rows, char x_axis, std::ostream& out);

struct SweepOutcome {
    std::filesystem::path results_csv;
    std::filesystem::path summary_csv;
    std::int64_t episodes = 0;
    std::int64_t deterministic_violations = 0;
};

/// run_sweep + both CSV files under spec.out_dir.
SweepOutcome run(const SweepSpec& spec);

/// Flat key = value config file; list values comma-separated; '#' comments.
SweepSpec parse_config_file(const std::filesystem::path& path);
void apply_config_line(SweepSpec& spec, const std::string& key, const std::string& value);

}  // namespace pricing

#endif  // PRICING_HARNESS_HPP
