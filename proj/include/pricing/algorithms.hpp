#ifndef PRICING_ALGORITHMS_HPP
#define PRICING_ALGORITHMS_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "pricing/core.hpp"
#include "pricing/env.hpp"
#include "pricing/rng.hpp"
#include "pricing/tree.hpp"

namespace pricing {

enum class StepKind {
    DescendLeft,
    DescendRight,
    Backtrack,
    CommitContinue,
    CommitFail,
};

struct StepOutcome {
    StepKind kind = StepKind::CommitContinue;
    int rounds_consumed = 0;
    bool truncated = false;  // horizon ended mid-step; state left unchanged
};

/// Search position plus the never-reset per-leaf counters s_l shared
/// across all commitment calls.
struct SearchState {
    explicit SearchState(TreeParams params) : params(params) { path.push_back(NodeRef{0, 0}); }

    TreeParams params;
    std::vector<NodeRef> path;  // root .. current
    std::unordered_map<std::uint64_t, std::int64_t> leaf_counters;

    NodeRef current() const { return path.back(); }
};

enum class CheckResult { Pass, Fail };

struct CheckOutcome {
    CheckResult result = CheckResult::Pass;
    int rounds_consumed = 0;
    bool truncated = false;
};

/// Posts L then R. FAIL iff sigma_L = 0 or sigma_R = 1, except that the
/// check passes by default at L = 0 and at R = 1 (the posts are still made).
CheckOutcome safety_check(NodeRef node, Environment& env);

class CommitStrategy {
public:
    virtual ~CommitStrategy() = default;
    virtual StepOutcome step(SearchState& state, Environment& env) = 0;
};

class CommitKnownStrategy final : public CommitStrategy {
public:
    explicit CommitKnownStrategy(std::int64_t budget) : budget_(budget) {}

    StepOutcome step(SearchState& state, Environment& env) override;

    /// First leaf on which the s_l > C branch was taken, if any.
    std::optional<NodeRef> true_commit_leaf() const { return true_commit_leaf_; }

private:
    std::int64_t budget_;
    std::optional<NodeRef> true_commit_leaf_;
};

class CommitUnknownStrategy final : public CommitStrategy {
public:
    CommitUnknownStrategy(std::int64_t horizon, double delta, Rng& rng)
        : horizon_(horizon), delta_(delta), rng_(rng) {}

    StepOutcome step(SearchState& state, Environment& env) override;

private:
    std::int64_t horizon_;
    double delta_;
    Rng& rng_;
};

/// One search step of the meta-algorithm: safety check + midpoint descent
/// at a non-leaf, or one commitment block at a leaf. Backtrack pops the path.
StepOutcome meta_step(SearchState& state, Environment& env, CommitStrategy& commit);

/// Smallest Q' with 2^{Q'-C} > n * sum_{i<=C} binom(Q'-C, i), exact
/// arbitrary-precision arithmetic. The predicate is monotone in Q'
/// (the left side doubles, the right side at most doubles), so this
/// uses a bracketed binary search.
std::int64_t rivest_query_budget(std::int64_t n, std::int64_t corruption);

struct BaselineRun {
    NodeRef final_node;
    bool search_completed = false;
};

/// Binary search with each midpoint repeated 2C+1 times, majority descent,
/// then commit to the reached leaf's left endpoint for the remaining rounds.
BaselineRun majority_vote_searcher(TreeParams params, std::int64_t corruption, Environment& env);

/// Unguarded binary search: D midpoint queries, then commit forever.
BaselineRun plain_binary_search(TreeParams params, Environment& env);

}  // namespace pricing

#endif  // PRICING_ALGORITHMS_HPP
