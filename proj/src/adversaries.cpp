#include "pricing/adversaries.hpp"

namespace pricing {

std::unique_ptr<Adversary> make_adversary(const EpisodeConfig& config, TreeParams params) {
    const AdversarySpec& spec = config.adversary;
    switch (spec.kind) {
        case AdversaryKind::NoCorruption:
            return std::make_unique<NoCorruptionAdversary>();
        case AdversaryKind::MimicLowInstance: {
            std::int64_t burn = spec.burn >= 0 ? spec.burn : config.corruption_budget;
            return std::make_unique<MimicLowAdversary>(Valuation::make(spec.v_low), burn);
        }
        case AdversaryKind::LeafTrap: {
            NodeRef target;
            if (spec.target_index >= 0) {
                target = NodeRef{params.depth, static_cast<std::uint64_t>(spec.target_index)};
            } else {
                NodeRef star = leaf_of(config.valuation, params);
                std::uint64_t last = (std::uint64_t{1} << params.depth) - 1;
                target = NodeRef{params.depth, star.index == last ? star.index - 1 : star.index + 1};
            }
            if (target == leaf_of(config.valuation, params))
                throw std::invalid_argument("leaf-trap: target must be a wrong leaf");
            return std::make_unique<LeafTrapAdversary>(target);
        }
        case AdversaryKind::CommitStall:
            return std::make_unique<CommitStallAdversary>(leaf_of(config.valuation, params));
        case AdversaryKind::RandomBudget:
            return std::make_unique<RandomBudgetAdversary>(
                spec.flip_probability, derive_stream_seed(config.seed, 1));
    }
    throw std::logic_error("unknown AdversaryKind");
}

}  // namespace pricing
