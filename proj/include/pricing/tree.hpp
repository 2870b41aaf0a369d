#ifndef PRICING_TREE_HPP
#define PRICING_TREE_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "pricing/core.hpp"

namespace pricing {

/// Node (depth, index) of the binary interval tree over [0, 1).
/// Represents the half-open interval [index/2^depth, (index+1)/2^depth).
struct NodeRef {
    int depth = 0;
    std::uint64_t index = 0;

    bool operator==(const NodeRef&) const = default;
};

struct TreeParams {
    int depth = 1;  // D = ceil(log2 T); leaves live at this depth

    static TreeParams for_horizon(std::int64_t horizon) {
        if (horizon < 2) throw std::invalid_argument("TreeParams: horizon must be >= 2");
        int d = 0;
        // smallest d with 2^d >= horizon
        while ((std::int64_t{1} << d) < horizon) ++d;
        if (d < 1) d = 1;
        if (d > DyadicPrice::kMaxLevel)
            throw std::invalid_argument("TreeParams: horizon exceeds the dyadic grid");
        return TreeParams{d};
    }
};

inline NodeRef left_child(NodeRef n) { return NodeRef{n.depth + 1, 2 * n.index}; }
inline NodeRef right_child(NodeRef n) { return NodeRef{n.depth + 1, 2 * n.index + 1}; }

inline NodeRef parent(NodeRef n) {
    if (n.depth == 0) throw std::logic_error("parent of root requested");
    return NodeRef{n.depth - 1, n.index / 2};
}

inline bool is_leaf(NodeRef n, TreeParams params) { return n.depth == params.depth; }

inline std::pair<DyadicPrice, DyadicPrice> endpoints(NodeRef n) {
    return {DyadicPrice::make(n.index, n.depth), DyadicPrice::make(n.index + 1, n.depth)};
}

inline DyadicPrice midpoint(NodeRef n) {
    return DyadicPrice::make(2 * n.index + 1, n.depth + 1);
}

/// The unique depth-D leaf whose interval contains v (exists since v < 1).
inline NodeRef leaf_of(Valuation v, TreeParams params) {
    // ldexp scales by a power of two, so the product is exact.
    auto index = static_cast<std::uint64_t>(std::ldexp(v.value, params.depth));
    std::uint64_t last = (std::uint64_t{1} << params.depth) - 1;
    if (index > last) index = last;
    return NodeRef{params.depth, index};
}

/// Shortest-path length between two nodes in the tree graph.
inline int tree_distance(NodeRef a, NodeRef b) {
    int dist = 0;
    while (a.depth > b.depth) {
        a = parent(a);
        ++dist;
    }
    while (b.depth > a.depth) {
        b = parent(b);
        ++dist;
    }
    while (a.index != b.index) {
        a = parent(a);
        b = parent(b);
        dist += 2;
    }
    return dist;
}

/// True iff n is an ancestor of leaf_star or n == leaf_star.
inline bool is_on_path(NodeRef n, NodeRef leaf_star) {
    if (n.depth > leaf_star.depth) return false;
    return (leaf_star.index >> (leaf_star.depth - n.depth)) == n.index;
}

}  // namespace pricing

#endif  // PRICING_TREE_HPP
