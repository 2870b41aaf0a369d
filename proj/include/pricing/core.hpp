#ifndef PRICING_CORE_HPP
#define PRICING_CORE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pricing {

/// Exact price on the dyadic grid: numerator / 2^level, in [0, 1].
/// Stored reduced (odd numerator unless zero) so equality is fieldwise.
/// level is capped at 52 so the value is exactly representable as a double.
struct DyadicPrice {
    static constexpr int kMaxLevel = 52;

    std::uint64_t numerator = 0;
    int level = 0;

    static DyadicPrice make(std::uint64_t numerator, int level) {
        if (level < 0 || level > kMaxLevel)
            throw std::invalid_argument("DyadicPrice: level out of range");
        if (numerator > (std::uint64_t{1} << level))
            throw std::invalid_argument("DyadicPrice: numerator exceeds 2^level");
        while (level > 0 && numerator % 2 == 0) {
            numerator /= 2;
            --level;
        }
        DyadicPrice p;
        p.numerator = numerator;
        p.level = level;
        return p;
    }

    double value() const { return std::ldexp(static_cast<double>(numerator), -level); }

    bool operator==(const DyadicPrice&) const = default;
    // Exact: both sides are dyadic with level <= 52.
    bool operator<(const DyadicPrice& o) const { return value() < o.value(); }
};

inline double price_value(const DyadicPrice& p) { return p.value(); }

/// Buyer valuation v* in [0, 1).
struct Valuation {
    double value = 0.0;

    static Valuation make(double v) {
        if (!(v >= 0.0 && v < 1.0))
            throw std::invalid_argument("Valuation: must lie in [0, 1)");
        return Valuation{v};
    }
};

struct Feedback {
    bool sale = false;
    bool operator==(const Feedback&) const = default;
};

/// Threshold rule: a sale occurs iff price <= v*.
inline Feedback true_feedback(const DyadicPrice& p, const Valuation& v) {
    return Feedback{p.value() <= v.value};
}

struct RoundRecord {
    std::int64_t t = 0;  // 1-based round index
    DyadicPrice price;
    Feedback true_feedback;      // y_t
    Feedback observed_feedback;  // sigma_t
    bool corrupted = false;      // true iff y_t != sigma_t
    double revenue = 0.0;        // price * 1{price <= v*}, from the TRUE comparison
};

enum class AlgorithmId {
    CommitKnown,
    CommitUnknown,
    MajorityVote,
    PlainBinarySearch,
};

std::string to_string(AlgorithmId id);
AlgorithmId algorithm_from_string(const std::string& name);

enum class AdversaryKind {
    NoCorruption,
    MimicLowInstance,
    LeafTrap,
    CommitStall,
    RandomBudget,
};

std::string to_string(AdversaryKind kind);

/// Constructible description of a corruption strategy. Fields not relevant
/// to `kind` are ignored; negative burn / target_index mean "resolve from
/// the episode config" (burn -> C, target -> a wrong leaf next to l*).
struct AdversarySpec {
    AdversaryKind kind = AdversaryKind::NoCorruption;
    double v_low = 1.0 / 3.0;         // MimicLowInstance
    std::int64_t burn = -1;           // MimicLowInstance; -1 -> C
    std::int64_t target_index = -1;   // LeafTrap leaf index at depth D; -1 -> auto
    double flip_probability = 0.5;    // RandomBudget

    void validate() const;
    std::string label() const;  // stable identifier for CSV output
};

AdversarySpec adversary_from_string(const std::string& text);

struct EpisodeConfig {
    std::int64_t horizon = 0;             // T
    Valuation valuation;                  // v*
    std::int64_t corruption_budget = 0;   // C
    double delta = 0.05;
    AlgorithmId algorithm = AlgorithmId::CommitKnown;
    AdversarySpec adversary;
    std::uint64_t seed = 0;
    bool verify = true;        // per-step invariant assertions
    bool record_trace = false; // keep a per-step ledger trace

    void validate() const;
};

}  // namespace pricing

#endif  // PRICING_CORE_HPP
