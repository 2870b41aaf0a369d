#ifndef PRICING_ORACLE_HPP
#define PRICING_ORACLE_HPP

#include <cstdint>
#include <string>

#include "pricing/core.hpp"
#include "pricing/tree.hpp"

namespace pricing {
namespace oracle {

/// BFS over the explicitly materialized tree graph of depth D. Independent
/// counterpart of tree_distance; intended for D <= 6.
int bfs_distance(NodeRef a, NodeRef b, int depth);

/// Linear scan for the smallest Q' with 2^{Q'-C} > n * sum_{i<=C} binom(Q'-C, i).
/// Exact integer arithmetic throughout; serves as the oracle for
/// rivest_query_budget and shares no code with it.
std::int64_t budget_scan(std::int64_t n, std::int64_t corruption);

struct Verdict {
    bool ok = true;
    std::int64_t cases_checked = 0;
    std::string counterexample;  // description of the first failure, if any
};

/// Enumerates every adversary against the deterministic algorithm as a set
/// of flipped rounds of size <= C, and checks: the budget invariant,
/// commit-known never enters true commitment on a wrong leaf, majority-vote
/// never returns a wrong completed leaf, and the wrong-leaf
/// fail-counter inequality. Valuations range over the leaf-midpoint grid.
Verdict exhaustive_adversary_check(std::int64_t horizon, std::int64_t corruption,
                                   AlgorithmId algorithm);

}  // namespace oracle
}  // namespace pricing

#endif  // PRICING_ORACLE_HPP
