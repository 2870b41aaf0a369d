#include "pricing/episode.hpp"

#include <memory>

namespace pricing {

EpisodeResult run_episode(const EpisodeConfig& config) {
    config.validate();
    TreeParams params = TreeParams::for_horizon(config.horizon);
    auto adversary = make_adversary(config, params);
    return run_episode_with(config, *adversary);
}

EpisodeResult run_episode_with(const EpisodeConfig& config, Adversary& adversary) {
    config.validate();
    TreeParams params = TreeParams::for_horizon(config.horizon);
    Environment env(config, adversary);
    Ledger ledger(params, config.valuation, config.verify, config.record_trace);

    EpisodeResult result;
    result.params = params;

    switch (config.algorithm) {
        case AlgorithmId::CommitKnown:
        case AlgorithmId::CommitUnknown: {
            SearchState state(params);
            Rng seller_rng(derive_stream_seed(config.seed, 0));
            std::unique_ptr<CommitStrategy> commit;
            CommitKnownStrategy* known = nullptr;
            if (config.algorithm == AlgorithmId::CommitKnown) {
                auto k = std::make_unique<CommitKnownStrategy>(config.corruption_budget);
                known = k.get();
                commit = std::move(k);
            } else {
                commit = std::make_unique<CommitUnknownStrategy>(config.horizon, config.delta,
                                                                 seller_rng);
            }
            while (!env.exhausted()) {
                NodeRef before = state.current();
                std::size_t first_round = env.history().size();
                StepOutcome outcome = meta_step(state, env, *commit);
                ledger.record_step(before, state.current(), outcome,
                                   std::span(env.history()).subspan(first_round));
            }
            if (known) result.true_commit_leaf = known->true_commit_leaf();
            result.final_node = state.current();
            result.search_completed = true;
            break;
        }
        case AlgorithmId::MajorityVote: {
            BaselineRun run = majority_vote_searcher(params, config.corruption_budget, env);
            result.final_node = run.final_node;
            result.search_completed = run.search_completed;
            break;
        }
        case AlgorithmId::PlainBinarySearch: {
            BaselineRun run = plain_binary_search(params, env);
            result.final_node = run.final_node;
            result.search_completed = run.search_completed;
            break;
        }
    }

    result.rounds = env.history();
    result.corruptions_used = env.corruptions_used();
    result.total_regret = episode_regret(result.rounds, config.valuation, config.horizon);
    result.ledger = ledger.snapshot();
    if (config.record_trace) result.step_trace = ledger.trace();
    result.bounds = final_report(ledger, config, result.total_regret, result.corruptions_used);
    return result;
}

}  // namespace pricing
