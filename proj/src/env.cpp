#include "pricing/env.hpp"

#include <stdexcept>

namespace pricing {

Environment::Environment(const EpisodeConfig& config, Adversary& adversary)
    : config_(config), adversary_(adversary), budget_remaining_(config.corruption_budget) {
    history_.reserve(static_cast<std::size_t>(config.horizon));
}

Feedback Environment::post_price(const DyadicPrice& p) {
    if (exhausted()) throw std::logic_error("post_price: episode exhausted");

    // Intent first: the adversary commits to spending before seeing p.
    AdversaryIntent intent = adversary_.intent(history_);
    Feedback y = true_feedback(p, config_.valuation);
    Feedback observed = y;
    if (intent.willing && budget_remaining_ > 0) {
        observed = adversary_.corrupt(history_, p, y);
        if (observed != y) --budget_remaining_;
    }

    RoundRecord rec;
    rec.t = t_;
    rec.price = p;
    rec.true_feedback = y;
    rec.observed_feedback = observed;
    rec.corrupted = (observed != y);
    rec.revenue = y.sale ? p.value() : 0.0;
    history_.push_back(rec);
    ++t_;
    return observed;
}

double episode_regret(std::span<const RoundRecord> history, Valuation v, std::int64_t horizon) {
    if (static_cast<std::int64_t>(history.size()) != horizon)
        throw std::invalid_argument("episode_regret: history length does not match horizon");
    double revenue = 0.0;
    for (const auto& r : history) revenue += r.revenue;
    return static_cast<double>(horizon) * v.value - revenue;
}

}  // namespace pricing
