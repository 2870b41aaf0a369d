#include <doctest.h>

#include "pricing/core.hpp"

using namespace pricing;

TEST_CASE("price_value") {
    CHECK(price_value(DyadicPrice::make(1, 1)) == 0.5);
    CHECK(price_value(DyadicPrice::make(0, 0)) == 0.0);
    CHECK(price_value(DyadicPrice::make(3, 2)) == 0.75);
}

TEST_CASE("dyadic prices compare equal iff their reduced fractions are equal") {
    CHECK(DyadicPrice::make(1, 1) == DyadicPrice::make(2, 2));
    CHECK(DyadicPrice::make(1, 1) == DyadicPrice::make(4, 3));
    CHECK(DyadicPrice::make(1, 2) != DyadicPrice::make(1, 1));
    CHECK(DyadicPrice::make(0, 5) == DyadicPrice::make(0, 0));
    CHECK(DyadicPrice::make(1, 2) < DyadicPrice::make(1, 1));
}

TEST_CASE("dyadic price validation") {
    CHECK_THROWS_AS(DyadicPrice::make(5, 2), std::invalid_argument);   // 5/4 > 1
    CHECK_THROWS_AS(DyadicPrice::make(1, 53), std::invalid_argument);  // level cap
    CHECK(DyadicPrice::make(4, 2).value() == 1.0);                     // p = 1 allowed
}

TEST_CASE("true_feedback threshold rule") {
    CHECK(true_feedback(DyadicPrice::make(1, 1), Valuation::make(0.7)).sale);
    CHECK(true_feedback(DyadicPrice::make(1, 1), Valuation::make(0.5)).sale);  // tie is a sale
    CHECK_FALSE(true_feedback(DyadicPrice::make(3, 2), Valuation::make(0.5)).sale);
}

TEST_CASE("valuation must be strictly below one") {
    CHECK_THROWS_AS(Valuation::make(1.0), std::invalid_argument);
    CHECK_THROWS_AS(Valuation::make(-0.1), std::invalid_argument);
    CHECK(Valuation::make(0.0).value == 0.0);
}

TEST_CASE("algorithm and adversary identifiers round-trip") {
    for (auto id : {AlgorithmId::CommitKnown, AlgorithmId::CommitUnknown, AlgorithmId::MajorityVote,
                    AlgorithmId::PlainBinarySearch})
        CHECK(algorithm_from_string(to_string(id)) == id);
    CHECK_THROWS_AS(algorithm_from_string("nope"), std::invalid_argument);
}

TEST_CASE("adversary spec parsing") {
    auto mimic = adversary_from_string("mimic-low:1/3:4");
    CHECK(mimic.kind == AdversaryKind::MimicLowInstance);
    CHECK(mimic.v_low == doctest::Approx(1.0 / 3.0));
    CHECK(mimic.burn == 4);

    auto rb = adversary_from_string("random-budget:0.25");
    CHECK(rb.kind == AdversaryKind::RandomBudget);
    CHECK(rb.flip_probability == 0.25);

    CHECK(adversary_from_string("no-corruption").kind == AdversaryKind::NoCorruption);
    CHECK_THROWS_AS(adversary_from_string("random-budget:1.5"), std::invalid_argument);
}

TEST_CASE("episode config validation") {
    EpisodeConfig config;
    config.horizon = 8;
    config.valuation = Valuation::make(0.5);
    CHECK_NOTHROW(config.validate());

    config.horizon = 1;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.horizon = 8;
    config.corruption_budget = 9;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.corruption_budget = 0;
    config.delta = 1.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}
