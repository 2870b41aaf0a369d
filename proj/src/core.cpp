#include "pricing/core.hpp"

namespace pricing {

std::string to_string(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::CommitKnown: return "commit-known";
        case AlgorithmId::CommitUnknown: return "commit-unknown";
        case AlgorithmId::MajorityVote: return "majority-vote";
        case AlgorithmId::PlainBinarySearch: return "plain-bsearch";
    }
    throw std::logic_error("unknown AlgorithmId");
}

AlgorithmId algorithm_from_string(const std::string& name) {
    if (name == "commit-known") return AlgorithmId::CommitKnown;
    if (name == "commit-unknown") return AlgorithmId::CommitUnknown;
    if (name == "majority-vote") return AlgorithmId::MajorityVote;
    if (name == "plain-bsearch") return AlgorithmId::PlainBinarySearch;
    throw std::invalid_argument("unknown algorithm: " + name);
}

std::string to_string(AdversaryKind kind) {
    switch (kind) {
        case AdversaryKind::NoCorruption: return "no-corruption";
        case AdversaryKind::MimicLowInstance: return "mimic-low";
        case AdversaryKind::LeafTrap: return "leaf-trap";
        case AdversaryKind::CommitStall: return "commit-stall";
        case AdversaryKind::RandomBudget: return "random-budget";
    }
    throw std::logic_error("unknown AdversaryKind");
}

void AdversarySpec::validate() const {
    switch (kind) {
        case AdversaryKind::MimicLowInstance:
            if (!(v_low >= 0.0 && v_low < 1.0))
                throw std::invalid_argument("mimic-low: v_low must lie in [0, 1)");
            break;
        case AdversaryKind::RandomBudget:
            if (!(flip_probability >= 0.0 && flip_probability <= 1.0))
                throw std::invalid_argument("random-budget: flip_probability must lie in [0, 1]");
            break;
        default:
            break;
    }
}

std::string AdversarySpec::label() const {
    std::string s = to_string(kind);
    char buf[64];
    switch (kind) {
        case AdversaryKind::MimicLowInstance:
            std::snprintf(buf, sizeof(buf), ":%.6g:%lld", v_low, static_cast<long long>(burn));
            s += buf;
            break;
        case AdversaryKind::RandomBudget:
            std::snprintf(buf, sizeof(buf), ":%.6g", flip_probability);
            s += buf;
            break;
        case AdversaryKind::LeafTrap:
            if (target_index >= 0) {
                std::snprintf(buf, sizeof(buf), ":%lld", static_cast<long long>(target_index));
                s += buf;
            }
            break;
        default:
            break;
    }
    return s;
}

namespace {

double parse_real(const std::string& text) {
    // Accepts plain decimals and "a/b" fractions.
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        double num = std::stod(text.substr(0, slash));
        double den = std::stod(text.substr(slash + 1));
        if (den == 0.0) throw std::invalid_argument("fraction with zero denominator: " + text);
        return num / den;
    }
    return std::stod(text);
}

}  // namespace

AdversarySpec adversary_from_string(const std::string& text) {
    // Syntax: name[:param[:param]], e.g. "mimic-low:1/3:4", "random-budget:0.25".
    std::string name = text;
    std::string rest;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        name = text.substr(0, colon);
        rest = text.substr(colon + 1);
    }
    AdversarySpec spec;
    if (name == "no-corruption") {
        spec.kind = AdversaryKind::NoCorruption;
    } else if (name == "mimic-low") {
        spec.kind = AdversaryKind::MimicLowInstance;
        if (!rest.empty()) {
            auto c2 = rest.find(':');
            spec.v_low = parse_real(rest.substr(0, c2));
            if (c2 != std::string::npos) spec.burn = std::stoll(rest.substr(c2 + 1));
        }
    } else if (name == "leaf-trap") {
        spec.kind = AdversaryKind::LeafTrap;
        if (!rest.empty()) spec.target_index = std::stoll(rest);
    } else if (name == "commit-stall") {
        spec.kind = AdversaryKind::CommitStall;
    } else if (name == "random-budget") {
        spec.kind = AdversaryKind::RandomBudget;
        if (!rest.empty()) spec.flip_probability = parse_real(rest);
    } else {
        throw std::invalid_argument("unknown adversary: " + name);
    }
    spec.validate();
    return spec;
}

void EpisodeConfig::validate() const {
    if (horizon < 2) throw std::invalid_argument("EpisodeConfig: horizon must be >= 2");
    if (!(valuation.value >= 0.0 && valuation.value < 1.0))
        throw std::invalid_argument("EpisodeConfig: valuation must lie in [0, 1)");
    if (corruption_budget < 0)
        throw std::invalid_argument("EpisodeConfig: corruption budget must be >= 0");
    if (corruption_budget > horizon)
        throw std::invalid_argument("EpisodeConfig: corruption budget exceeds horizon");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("EpisodeConfig: delta must lie in (0, 1)");
    adversary.validate();
}

}  // namespace pricing
