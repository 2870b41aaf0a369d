#ifndef PRICING_INSTRUMENTATION_HPP
#define PRICING_INSTRUMENTATION_HPP

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pricing/algorithms.hpp"
#include "pricing/core.hpp"
#include "pricing/tree.hpp"

namespace pricing {

enum class LeafClass { Star, Plus, Minus };

/// Star iff v* in [L, R); Plus iff L > v*; Minus iff R <= v*.
LeafClass classify_leaf(NodeRef leaf, Valuation v);

struct LeafStats {
    std::int64_t blocks = 0;            // N_l: commitment blocks run on this leaf
    std::int64_t corrupted_blocks = 0;  // C_l
    double regret = 0.0;                // R(l)
};

struct LedgerSnapshot {
    std::int64_t step_index = 0;
    int potential = 0;                    // Phi = dist(current, l*)
    std::int64_t honest_nonleaf = 0;      // H
    std::int64_t corrupted_nonleaf = 0;   // K
    std::int64_t correct_leaf_fails = 0;  // N_T
    std::int64_t wrong_leaf_fails = 0;    // N_F
    std::map<std::uint64_t, LeafStats> per_leaf;  // keyed by leaf index at depth D
};

/// A per-step invariant violation. Signals an implementation bug, never a
/// legal runtime state.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ground-truth observer: sees v* and corruption flags that the seller never
/// does. Wired alongside the algorithm by the episode runner.
class Ledger {
public:
    Ledger(TreeParams params, Valuation v, bool verify, bool keep_trace);

    void record_step(NodeRef before, NodeRef after, const StepOutcome& outcome,
                     std::span<const RoundRecord> rounds);

    const LedgerSnapshot& snapshot() const { return snap_; }
    const std::vector<LedgerSnapshot>& trace() const { return trace_; }
    NodeRef leaf_star() const { return leaf_star_; }
    TreeParams params() const { return params_; }
    Valuation valuation() const { return v_; }

    double commit_regret_total() const;
    double commit_regret(LeafClass cls) const;
    /// True iff some visited leaf in L- has N_l > ceil(e * (C_l + 1)).
    bool minus_block_bound_exceeded() const;

private:
    TreeParams params_;
    Valuation v_;
    NodeRef leaf_star_;
    bool verify_;
    bool keep_trace_;
    LedgerSnapshot snap_;
    std::vector<LedgerSnapshot> trace_;
};

struct BoundCheck {
    std::string name;
    double actual = 0.0;
    double bound = 0.0;
    bool deterministic = false;  // must never be violated vs. tallied across trials
    bool satisfied = true;

    double slack() const { return bound - actual; }
};

struct BoundReport {
    std::vector<BoundCheck> checks;

    bool deterministic_ok() const;
    const BoundCheck* find(std::string_view name) const;
};

/// Evaluates every bound applicable to the episode's algorithm with the
/// realized counters. Check names are stable CSV identifiers.
BoundReport final_report(const Ledger& ledger, const EpisodeConfig& config, double total_regret,
                         std::int64_t corruptions_used);

}  // namespace pricing

#endif  // PRICING_INSTRUMENTATION_HPP
