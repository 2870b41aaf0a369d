#ifndef PRICING_EPISODE_HPP
#define PRICING_EPISODE_HPP

#include <optional>
#include <vector>

#include "pricing/adversaries.hpp"
#include "pricing/algorithms.hpp"
#include "pricing/core.hpp"
#include "pricing/instrumentation.hpp"

namespace pricing {

struct EpisodeResult {
    std::vector<RoundRecord> rounds;
    double total_regret = 0.0;
    std::int64_t corruptions_used = 0;
    LedgerSnapshot ledger;
    std::vector<LedgerSnapshot> step_trace;  // populated when config.record_trace
    BoundReport bounds;
    TreeParams params{1};
    NodeRef final_node;
    bool search_completed = false;                // baselines: search phase finished
    std::optional<NodeRef> true_commit_leaf;      // commit-known: s_l > C entered here
};

/// Drives the configured algorithm for exactly T rounds (steps straddling
/// the horizon are truncated after their last affordable round).
EpisodeResult run_episode(const EpisodeConfig& config);

/// Same, with a caller-supplied adversary (used by the exhaustive oracle).
EpisodeResult run_episode_with(const EpisodeConfig& config, Adversary& adversary);

}  // namespace pricing

#endif  // PRICING_EPISODE_HPP
