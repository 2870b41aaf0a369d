#include "pricing/instrumentation.hpp"

#include <algorithm>
#include <cmath>

namespace pricing {

namespace {

// Absorbs accumulated FP noise in regret sums; the compared quantities are
// O(T) at most, so 1e-9 absolute slack is far below one round of regret.
constexpr double kTol = 1e-9;

}  // namespace

LeafClass classify_leaf(NodeRef leaf, Valuation v) {
    auto [left, right] = endpoints(leaf);
    if (left.value() > v.value) return LeafClass::Plus;
    if (right.value() <= v.value) return LeafClass::Minus;
    return LeafClass::Star;
}

Ledger::Ledger(TreeParams params, Valuation v, bool verify, bool keep_trace)
    : params_(params),
      v_(v),
      leaf_star_(leaf_of(v, params)),
      verify_(verify),
      keep_trace_(keep_trace) {
    snap_.potential = params.depth;  // Phi_0 = D
    if (keep_trace_) trace_.push_back(snap_);
}

void Ledger::record_step(NodeRef before, NodeRef after, const StepOutcome& outcome,
                         std::span<const RoundRecord> rounds) {
    ++snap_.step_index;
    bool corrupted = std::any_of(rounds.begin(), rounds.end(),
                                 [](const RoundRecord& r) { return r.corrupted; });
    bool at_leaf = is_leaf(before, params_);
    int phi_before = snap_.potential;
    int phi_after = tree_distance(after, leaf_star_);

    if (at_leaf) {
        LeafStats& stats = snap_.per_leaf[before.index];
        ++stats.blocks;
        if (corrupted) ++stats.corrupted_blocks;
        for (const auto& r : rounds) stats.regret += v_.value - r.revenue;
    }

    if (!outcome.truncated) {
        if (!at_leaf) {
            if (corrupted)
                ++snap_.corrupted_nonleaf;
            else
                ++snap_.honest_nonleaf;
            if (verify_) {
                if (!corrupted && phi_after != phi_before - 1)
                    throw VerificationError(
                        "potential invariant violated: honest non-leaf step did not decrease "
                        "the potential by exactly one");
                if (corrupted && (phi_after - phi_before > 1 || std::abs(phi_after - phi_before) != 1))
                    throw VerificationError(
                        "potential invariant violated: corrupted non-leaf step changed the "
                        "potential by more than one");
            }
        } else if (outcome.kind == StepKind::CommitFail) {
            bool star = (before == leaf_star_);
            if (star)
                ++snap_.correct_leaf_fails;
            else
                ++snap_.wrong_leaf_fails;
            if (verify_) {
                int expected = star ? 1 : -1;
                if (phi_after - phi_before != expected)
                    throw VerificationError(
                        "potential invariant violated: commit FAIL moved the potential the "
                        "wrong way");
            }
        }
    }

    snap_.potential = phi_after;
    if (keep_trace_) trace_.push_back(snap_);
}

double Ledger::commit_regret_total() const {
    double total = 0.0;
    for (const auto& [index, stats] : snap_.per_leaf) total += stats.regret;
    return total;
}

double Ledger::commit_regret(LeafClass cls) const {
    double total = 0.0;
    for (const auto& [index, stats] : snap_.per_leaf) {
        if (classify_leaf(NodeRef{params_.depth, index}, v_) == cls) total += stats.regret;
    }
    return total;
}

bool Ledger::minus_block_bound_exceeded() const {
    for (const auto& [index, stats] : snap_.per_leaf) {
        if (classify_leaf(NodeRef{params_.depth, index}, v_) != LeafClass::Minus) continue;
        double cap = std::ceil(std::exp(1.0) * static_cast<double>(stats.corrupted_blocks + 1));
        if (static_cast<double>(stats.blocks) > cap) return true;
    }
    return false;
}

bool BoundReport::deterministic_ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const BoundCheck& c) { return !c.deterministic || c.satisfied; });
}

const BoundCheck* BoundReport::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

BoundReport final_report(const Ledger& ledger, const EpisodeConfig& config, double total_regret,
                         std::int64_t corruptions_used) {
    BoundReport report;
    if (config.algorithm != AlgorithmId::CommitKnown &&
        config.algorithm != AlgorithmId::CommitUnknown) {
        return report;  // the potential/counter analysis covers the meta-algorithm only
    }

    const LedgerSnapshot& s = ledger.snapshot();
    const double d = static_cast<double>(ledger.params().depth);
    const double c = static_cast<double>(config.corruption_budget);
    const double n_t = static_cast<double>(s.correct_leaf_fails);
    const double n_f = static_cast<double>(s.wrong_leaf_fails);
    const double t = static_cast<double>(config.horizon);
    const double commit_regret = ledger.commit_regret_total();

    auto add = [&](std::string name, double actual, double bound, bool deterministic) {
        report.checks.push_back(
            {std::move(name), actual, bound, deterministic, actual <= bound + kTol});
    };

    add("fail_counter_bound", n_f, d + c + n_t, true);
    add("regret_decomposition", total_regret, commit_regret + 3.0 * d + 6.0 * c + 3.0 * n_t, true);

    if (config.algorithm == AlgorithmId::CommitKnown) {
        add("correct_fail_budget", n_t, static_cast<double>(corruptions_used), true);
        add("commit_regret_known", commit_regret, 2.0 * n_f + 6.0 * c + 3.0, true);
        add("known_regret_bound", total_regret, 5.0 * d + 19.0 * c + 3.0, true);
    } else {
        double explore_bound = 1.0 + 20.0 * std::log(t) * std::log(t / config.delta);
        add("correct_fail_budget", n_t, static_cast<double>(corruptions_used), true);
        add("plus_leaf_regret", ledger.commit_regret(LeafClass::Plus), 2.0 * n_f + 2.0 * c, true);
        add("star_leaf_regret", ledger.commit_regret(LeafClass::Star), explore_bound, false);
        add("minus_leaf_regret", ledger.commit_regret(LeafClass::Minus),
            12.0 * c + 12.0 * n_f, false);
        add("unknown_regret_bound", total_regret, explore_bound + 17.0 * d + 51.0 * c, false);
        // Tail event behind the minus-leaf regret bound: some visited leaf
        // below v* ran more blocks than ceil(e * (corrupted_blocks + 1)).
        BoundCheck stat;
        stat.name = "minus_block_stat";
        stat.deterministic = false;
        stat.satisfied = !ledger.minus_block_bound_exceeded();
        stat.actual = stat.satisfied ? 0.0 : 1.0;
        stat.bound = 0.0;
        report.checks.push_back(stat);
    }
    return report;
}

}  // namespace pricing
