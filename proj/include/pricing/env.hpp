#ifndef PRICING_ENV_HPP
#define PRICING_ENV_HPP

#include <span>
#include <vector>

#include "pricing/core.hpp"

namespace pricing {

struct AdversaryIntent {
    bool willing = false;  // decided before the realized price is known
};

/// Two-phase corruption API. `intent` sees only the history (never the
/// current price); `corrupt` is consulted with the realized price and
/// truthful feedback only when the intent was willing and budget remains.
/// Returning the truthful value spends nothing.
class Adversary {
public:
    virtual ~Adversary() = default;
    virtual AdversaryIntent intent(std::span<const RoundRecord> history) = 0;
    virtual Feedback corrupt(std::span<const RoundRecord> history, const DyadicPrice& price,
                             Feedback truth) = 0;
};

/// Round-by-round protocol state for one episode. Posting after the horizon
/// is a programming error; callers check rounds_remaining() to truncate.
class Environment {
public:
    Environment(const EpisodeConfig& config, Adversary& adversary);

    Feedback post_price(const DyadicPrice& p);

    bool exhausted() const { return t_ > config_.horizon; }
    std::int64_t rounds_remaining() const { return config_.horizon - t_ + 1; }
    std::int64_t budget_remaining() const { return budget_remaining_; }
    std::int64_t corruptions_used() const { return config_.corruption_budget - budget_remaining_; }
    const std::vector<RoundRecord>& history() const { return history_; }
    const EpisodeConfig& config() const { return config_; }

private:
    const EpisodeConfig& config_;
    Adversary& adversary_;
    std::int64_t t_ = 1;  // next round index; T + 1 means exhausted
    std::int64_t budget_remaining_ = 0;
    std::vector<RoundRecord> history_;
};

/// R_T = T * v* - sum of revenues; requires exactly T records.
double episode_regret(std::span<const RoundRecord> history, Valuation v, std::int64_t horizon);

}  // namespace pricing

#endif  // PRICING_ENV_HPP
