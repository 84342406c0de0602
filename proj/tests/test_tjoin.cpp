#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "onecut/oracle.hpp"
#include "onecut/tjoin.hpp"
#include "support.hpp"

using namespace onecut;
using testsupport::exhaustive_t_join;

namespace {

/// Validates the structural contract: picked indices are unique, their edge
/// set has odd degree exactly at the terminals, and the cost adds up.
void check_join(const TJoinResult& r, int node_count, const std::vector<TJoinEdge>& edges,
                const std::vector<int>& terminals) {
    std::vector<char> want(static_cast<std::size_t>(node_count), 0);
    for (int t : terminals) want[static_cast<std::size_t>(t)] = 1;
    std::vector<char> parity(static_cast<std::size_t>(node_count), 0);
    std::vector<char> used(edges.size(), 0);
    Weight cost = 0;
    for (std::size_t idx : r.picked) {
        REQUIRE(idx < edges.size());
        REQUIRE_FALSE(used[idx]);
        used[idx] = 1;
        cost += edges[idx].w;
        if (edges[idx].u != edges[idx].v) {
            parity[static_cast<std::size_t>(edges[idx].u)] ^= 1;
            parity[static_cast<std::size_t>(edges[idx].v)] ^= 1;
        }
    }
    CHECK(parity == want);
    CHECK(cost == r.cost);
}

}  // namespace

TEST_CASE("empty terminal set with non-negative weights picks nothing") {
    std::vector<TJoinEdge> edges = {{0, 1, 3}, {1, 2, 0}, {0, 2, 7}};
    auto r = min_weight_t_join(3, edges, {});
    REQUIRE(r.has_value());
    CHECK(r->picked.empty());
    CHECK(r->cost == 0);
}

TEST_CASE("empty terminal set still collects profitable negative edges") {
    // With T = {} the join must be an even subgraph, so a lone negative edge
    // stays out, a negative cycle goes in whole, and a negative self-loop
    // (degree contribution even) is always profitable.
    SECTION("single negative edge cannot be picked alone") {
        std::vector<TJoinEdge> edges = {{0, 1, -4}};
        auto r = min_weight_t_join(2, edges, {});
        REQUIRE(r.has_value());
        CHECK(r->picked.empty());
        CHECK(r->cost == 0);
    }
    SECTION("negative triangle is picked whole") {
        std::vector<TJoinEdge> edges = {{0, 1, -4}, {1, 2, -4}, {0, 2, -4}};
        auto r = min_weight_t_join(3, edges, {});
        REQUIRE(r.has_value());
        CHECK(r->picked.size() == 3);
        CHECK(r->cost == -12);
    }
    SECTION("negative self-loop is always picked") {
        std::vector<TJoinEdge> edges = {{0, 0, -4}, {0, 1, 2}};
        auto r = min_weight_t_join(2, edges, {});
        REQUIRE(r.has_value());
        REQUIRE(r->picked == std::vector<std::size_t>{0});
        CHECK(r->cost == -4);
    }
}

TEST_CASE("two terminals take the cheapest path between them") {
    // 0 -1- 1 -1- 2 versus the direct edge 0-2 of weight 5.
    std::vector<TJoinEdge> edges = {{0, 1, 1}, {1, 2, 1}, {0, 2, 5}};
    auto r = min_weight_t_join(3, edges, {0, 2});
    REQUIRE(r.has_value());
    CHECK(r->cost == 2);
    check_join(*r, 3, edges, {0, 2});
}

TEST_CASE("two terminals joined by a bare path pick the whole path") {
    std::vector<TJoinEdge> edges = {{0, 1, 2}, {1, 2, 3}};
    auto r = min_weight_t_join(3, edges, {0, 2});
    REQUIRE(r.has_value());
    CHECK(r->cost == 5);
    CHECK(r->picked.size() == 2);
    check_join(*r, 3, edges, {0, 2});
}

TEST_CASE("odd terminal count in a component is infeasible") {
    std::vector<TJoinEdge> edges = {{0, 1, 1}, {1, 2, 1}};
    CHECK_FALSE(min_weight_t_join(3, edges, {0}).has_value());
    CHECK_FALSE(min_weight_t_join(3, edges, {0, 1, 2}).has_value());

    // Disconnected: terminals pairable only within their own component.
    std::vector<TJoinEdge> split = {{0, 1, 1}, {2, 3, 1}};
    CHECK_FALSE(min_weight_t_join(4, split, {0, 2}).has_value());
    auto ok = min_weight_t_join(4, split, {0, 1, 2, 3});
    REQUIRE(ok.has_value());
    CHECK(ok->cost == 2);
}

TEST_CASE("negative weights reroute through the flipped base solution") {
    // Direct edge 0-2 costs 4, but the detour 0-1-2 with weights -3 and 2
    // costs -1: the join must exploit the negative edge.
    std::vector<TJoinEdge> edges = {{0, 1, -3}, {1, 2, 2}, {0, 2, 4}};
    auto r = min_weight_t_join(3, edges, {0, 2});
    REQUIRE(r.has_value());
    CHECK(r->cost == -1);
    check_join(*r, 3, edges, {0, 2});
}

TEST_CASE("t-join matches the exhaustive oracle on random graphs") {
    Rng rng(31337);
    int infeasible_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 7));
        int m = static_cast<int>(rng.uniform(0, 11));
        std::vector<TJoinEdge> edges;
        for (int i = 0; i < m; ++i) {
            int u = static_cast<int>(rng.index(static_cast<std::uint64_t>(n)));
            int v = static_cast<int>(rng.index(static_cast<std::uint64_t>(n)));
            edges.push_back({u, v, rng.uniform(-6, 6)});  // self-loops allowed
        }
        std::vector<int> terminals;
        for (int x = 0; x < n; ++x)
            if (rng.index(3) == 0) terminals.push_back(x);

        auto got = min_weight_t_join(n, edges, terminals);
        auto want = exhaustive_t_join(n, edges, terminals);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(got->cost == *want);
            check_join(*got, n, edges, terminals);
        } else {
            ++infeasible_seen;
        }
    }
    CHECK(infeasible_seen > 20);  // the draw must actually exercise both arms
}
