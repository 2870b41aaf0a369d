#include <doctest.h>

#include <vector>

#include "pricing/oracle.hpp"
#include "pricing/tree.hpp"

using namespace pricing;

TEST_CASE("child and parent navigation") {
    CHECK(left_child(NodeRef{0, 0}) == NodeRef{1, 0});
    CHECK(right_child(NodeRef{1, 1}) == NodeRef{2, 3});
    CHECK(parent(NodeRef{2, 3}) == NodeRef{1, 1});
    CHECK_THROWS_AS(parent(NodeRef{0, 0}), std::logic_error);
}

TEST_CASE("parent round-trips through both children") {
    for (int d = 0; d < 5; ++d) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << d); ++i) {
            NodeRef n{d, i};
            CHECK(parent(left_child(n)) == n);
            CHECK(parent(right_child(n)) == n);
        }
    }
}

TEST_CASE("endpoints") {
    auto [l1, r1] = endpoints(NodeRef{1, 1});
    CHECK(l1.value() == 0.5);
    CHECK(r1.value() == 1.0);
    auto [l2, r2] = endpoints(NodeRef{2, 2});
    CHECK(l2.value() == 0.5);
    CHECK(r2.value() == 0.75);
    auto [l0, r0] = endpoints(NodeRef{0, 0});
    CHECK(l0.value() == 0.0);
    CHECK(r0.value() == 1.0);
}

TEST_CASE("leaf_of") {
    CHECK(leaf_of(Valuation::make(0.0), TreeParams{3}) == NodeRef{3, 0});
    CHECK(leaf_of(Valuation::make(0.7), TreeParams{2}) == NodeRef{2, 2});
    CHECK(leaf_of(Valuation::make(0.999), TreeParams{3}) == NodeRef{3, 7});
}

TEST_CASE("tree depth from horizon") {
    CHECK(TreeParams::for_horizon(2).depth == 1);
    CHECK(TreeParams::for_horizon(8).depth == 3);
    CHECK(TreeParams::for_horizon(9).depth == 4);  // ceiling
    CHECK(TreeParams::for_horizon(1024).depth == 10);
}

TEST_CASE("tree_distance basics") {
    CHECK(tree_distance(NodeRef{0, 0}, NodeRef{3, 5}) == 3);  // root to any leaf = D
    CHECK(tree_distance(NodeRef{2, 2}, NodeRef{2, 2}) == 0);
    CHECK(tree_distance(NodeRef{2, 2}, NodeRef{2, 3}) == 2);  // siblings
}

TEST_CASE("tree_distance agrees with BFS oracle for all pairs, D <= 6") {
    const int D = 6;
    std::vector<NodeRef> nodes;
    for (int d = 0; d <= D; ++d)
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << d); ++i) nodes.push_back(NodeRef{d, i});
    for (const auto& a : nodes)
        for (const auto& b : nodes) REQUIRE(tree_distance(a, b) == oracle::bfs_distance(a, b, D));
}

TEST_CASE("is_on_path") {
    NodeRef star{3, 7};
    CHECK(is_on_path(NodeRef{0, 0}, star));
    CHECK(is_on_path(star, star));
    CHECK_FALSE(is_on_path(NodeRef{1, 0}, star));
}

TEST_CASE("on-path node has exactly one on-path child; off-path has none") {
    const int D = 5;
    for (std::uint64_t star_idx = 0; star_idx < (1u << D); ++star_idx) {
        NodeRef star{D, star_idx};
        for (int d = 0; d < D; ++d) {
            for (std::uint64_t i = 0; i < (std::uint64_t{1} << d); ++i) {
                NodeRef n{d, i};
                int on_children = int(is_on_path(left_child(n), star)) +
                                  int(is_on_path(right_child(n), star));
                if (is_on_path(n, star))
                    REQUIRE(on_children == 1);
                else
                    REQUIRE(on_children == 0);
            }
        }
    }
}

TEST_CASE("off-path node lies entirely on one side of v*") {
    const int D = 5;
    TreeParams params{D};
    for (int k = 0; k < 40; ++k) {
        Valuation v = Valuation::make(static_cast<double>(k) / 40.0 + 0.001);
        NodeRef star = leaf_of(v, params);
        for (int d = 0; d <= D; ++d) {
            for (std::uint64_t i = 0; i < (std::uint64_t{1} << d); ++i) {
                NodeRef n{d, i};
                if (is_on_path(n, star)) continue;
                auto [l, r] = endpoints(n);
                bool above = l.value() > v.value;
                bool below = r.value() <= v.value;
                REQUIRE((above || below));
            }
        }
    }
}
