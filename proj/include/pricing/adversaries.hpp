#ifndef PRICING_ADVERSARIES_HPP
#define PRICING_ADVERSARIES_HPP

#include <memory>
#include <optional>

#include "pricing/core.hpp"
#include "pricing/env.hpp"
#include "pricing/rng.hpp"
#include "pricing/tree.hpp"

namespace pricing {

class NoCorruptionAdversary final : public Adversary {
public:
    AdversaryIntent intent(std::span<const RoundRecord>) override { return {false}; }
    Feedback corrupt(std::span<const RoundRecord>, const DyadicPrice&, Feedback truth) override {
        return truth;
    }
};

/// For the first `burn` rounds, reports the feedback that a v_low instance
/// would produce (the lower-bound construction); honest afterwards.
class MimicLowAdversary final : public Adversary {
public:
    MimicLowAdversary(Valuation v_low, std::int64_t burn) : v_low_(v_low), burn_(burn) {}

    AdversaryIntent intent(std::span<const RoundRecord> history) override {
        return {static_cast<std::int64_t>(history.size()) < burn_};
    }
    Feedback corrupt(std::span<const RoundRecord>, const DyadicPrice& price, Feedback) override {
        return true_feedback(price, v_low_);
    }

private:
    Valuation v_low_;
    std::int64_t burn_;
};

/// Makes a chosen wrong leaf look correct: forces a sale at its left
/// endpoint and a no-sale at its right endpoint. Spends budget only on
/// rounds whose preceding price matched one of the target's endpoints
/// (history-only detection of a check on the target).
class LeafTrapAdversary final : public Adversary {
public:
    explicit LeafTrapAdversary(NodeRef target_leaf) {
        auto [l, r] = endpoints(target_leaf);
        left_ = l;
        right_ = r;
    }

    AdversaryIntent intent(std::span<const RoundRecord> history) override {
        if (history.empty()) return {false};
        const DyadicPrice& last = history.back().price;
        return {last == left_ || last == right_};
    }
    Feedback corrupt(std::span<const RoundRecord>, const DyadicPrice& price,
                     Feedback truth) override {
        if (price == left_) return Feedback{true};
        if (price == right_) return Feedback{false};
        return truth;
    }

private:
    DyadicPrice left_;
    DyadicPrice right_;
};

/// Forces FAIL on the correct leaf: reports no-sale whenever the seller
/// posts l*'s left endpoint while sitting at l*. Price patterns alone are
/// ambiguous (l*'s endpoints recur as ancestor endpoints and midpoints),
/// so the seller's position is tracked by replaying the meta-algorithm's
/// navigation rules over the observed history.
class CommitStallAdversary final : public Adversary {
public:
    explicit CommitStallAdversary(NodeRef leaf_star) : star_(leaf_star) {
        auto [l, r] = endpoints(leaf_star);
        left_ = l;
        right_ = r;
    }

    AdversaryIntent intent(std::span<const RoundRecord> history) override {
        advance(history);
        return {at_star()};
    }
    Feedback corrupt(std::span<const RoundRecord> history, const DyadicPrice& price,
                     Feedback truth) override {
        advance(history);
        // corrupting L = 0 is pointless: that check passes by default
        if (at_star() && price == left_ && left_.numerator != 0) return Feedback{false};
        return truth;
    }

private:
    enum class Phase { CheckLeft, CheckRight, Midpoint };

    bool at_star() const { return node_ == star_ && !fail_pending_; }
    bool is_leaf_node(NodeRef n) const { return n.depth == star_.depth; }

    void enter(NodeRef n) {
        node_ = n;
        phase_ = Phase::CheckLeft;
        left_failed_ = false;
    }

    void advance(std::span<const RoundRecord> history) {
        for (; cursor_ < history.size(); ++cursor_) {
            const RoundRecord& r = history[cursor_];
            bool sale = r.observed_feedback.sale;
            if (fail_pending_) {
                // A failed leaf L post may still be followed by the block's R
                // post (two-round check blocks) before the backtrack; the R
                // price is unambiguous because it never equals the parent's L.
                fail_pending_ = false;
                NodeRef failed = node_;
                enter(parent(failed));
                if (r.price == endpoints(failed).second) continue;  // block tail
                // otherwise fall through: this round already belongs to the parent
            }
            auto [l, rt] = endpoints(node_);
            if (is_leaf_node(node_)) {
                if (r.price == l && !sale && l.numerator != 0)
                    fail_pending_ = true;  // FAIL; a block-tail R post may follow
                else if (r.price == rt && sale && rt.value() < 1.0)
                    enter(parent(node_));
                continue;
            }
            switch (phase_) {
                case Phase::CheckLeft:
                    left_failed_ = !sale && l.numerator != 0;
                    phase_ = Phase::CheckRight;
                    break;
                case Phase::CheckRight:
                    if (left_failed_ || (sale && rt.value() < 1.0))
                        enter(parent(node_));  // safety check never fails at the root
                    else
                        phase_ = Phase::Midpoint;
                    break;
                case Phase::Midpoint: {
                    NodeRef child = sale ? right_child(node_) : left_child(node_);
                    enter(child);
                    break;
                }
            }
        }
    }

    NodeRef star_;
    DyadicPrice left_;
    DyadicPrice right_;
    NodeRef node_{0, 0};
    Phase phase_ = Phase::CheckLeft;
    bool left_failed_ = false;
    bool fail_pending_ = false;
    std::size_t cursor_ = 0;
};

/// Independently willing each round with the given probability; corruption
/// flips the truthful bit while budget lasts. Owns a seeded stream.
class RandomBudgetAdversary final : public Adversary {
public:
    RandomBudgetAdversary(double flip_probability, std::uint64_t seed)
        : flip_probability_(flip_probability), rng_(seed) {}

    AdversaryIntent intent(std::span<const RoundRecord>) override {
        return {rng_.bernoulli(flip_probability_)};
    }
    Feedback corrupt(std::span<const RoundRecord>, const DyadicPrice&, Feedback truth) override {
        return Feedback{!truth.sale};
    }

private:
    double flip_probability_;
    Rng rng_;
};

/// Resolves spec defaults (burn -> C, leaf-trap target -> a wrong leaf
/// adjacent to l*) against the episode config and tree shape.
std::unique_ptr<Adversary> make_adversary(const EpisodeConfig& config, TreeParams params);

}  // namespace pricing

#endif  // PRICING_ADVERSARIES_HPP
