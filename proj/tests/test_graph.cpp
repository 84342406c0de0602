#include <catch2/catch_amalgamated.hpp>

#include "onecut/graph.hpp"
#include "onecut/oracle.hpp"
#include "support.hpp"

using namespace onecut;
using testsupport::random_simple_graph;

namespace {

WeightedGraph triangle(Weight ab, Weight ac, Weight bc) {
    WeightedGraph g(3);
    g.add_edge(0, 1, ab);
    g.add_edge(0, 2, ac);
    g.add_edge(1, 2, bc);
    return g;
}

}  // namespace

TEST_CASE("cut_value sums exactly the edges leaving the side") {
    WeightedGraph g = triangle(2, 3, -5);
    CHECK(cut_value(g, {}) == 0);
    CHECK(cut_value(g, {0, 1, 2}) == 0);
    CHECK(cut_value(g, {0}) == 5);        // ab + ac
    CHECK(cut_value(g, {1}) == -3);       // ab + bc
    CHECK(cut_value(g, {2}) == -2);       // ac + bc
    CHECK(cut_value(g, {0, 1}) == -2);    // complement of {2}
    CHECK(cut_value(g, {2, 0}) == -3);    // order-insensitive
    CHECK_THROWS_AS(cut_value(g, {7}), GraphError);
}

TEST_CASE("node-count constructor and node-list constructor normalize ids") {
    WeightedGraph a(4);
    CHECK(a.nodes() == std::vector<NodeId>{0, 1, 2, 3});
    CHECK(a.next_node_id() == 4);

    WeightedGraph b(std::vector<NodeId>{5, 2, 5, 9});
    CHECK(b.nodes() == std::vector<NodeId>{2, 5, 9});
    CHECK(b.next_node_id() == 10);
    CHECK(b.has_node(5));
    CHECK_FALSE(b.has_node(3));
}

TEST_CASE("add_edge allocates ids monotonically and validates endpoints") {
    WeightedGraph g(3);
    EdgeId e0 = g.add_edge(0, 1, 4);
    EdgeId e1 = g.add_edge(1, 2, -1);
    CHECK(e0 == 0);
    CHECK(e1 == 1);
    CHECK(g.edge(e1).w == -1);
    CHECK(g.find_edge(2, 1) == e1);
    CHECK_FALSE(g.find_edge(0, 2).has_value());
    CHECK(g.incident(1) == std::vector<EdgeId>{0, 1});
    CHECK(g.incident(2) == std::vector<EdgeId>{1});
    CHECK_THROWS_AS(g.add_edge(0, 9, 1), GraphError);
    CHECK_THROWS_AS(g.edge(42), GraphError);
}

TEST_CASE("contraction merges endpoints, drops the pair edge, fuses parallels") {
    // Square with one diagonal: contracting the diagonal creates parallels.
    WeightedGraph g(4);
    g.add_edge(0, 1, 1);   // e0
    g.add_edge(1, 2, 2);   // e1
    g.add_edge(2, 3, 3);   // e2
    g.add_edge(3, 0, 4);   // e3
    g.add_edge(0, 2, 10);  // e4, the diagonal

    auto [h, rec] = contract(g, 0, 2);
    CHECK(rec.merged_a == 0);
    CHECK(rec.merged_b == 2);
    CHECK(rec.new_node == 4);
    CHECK(h.nodes() == std::vector<NodeId>{1, 3, 4});
    REQUIRE(h.edge_count() == 2);  // e0+e1 fused, e2+e3 fused, e4 gone
    CHECK(h.edge(0).w == 1 + 2);
    CHECK(h.edge(2).w == 3 + 4);
    CHECK_FALSE(h.has_edge(1));
    CHECK_FALSE(h.has_edge(3));
    CHECK_FALSE(h.has_edge(4));
    REQUIRE(rec.merged_edge_pairs.size() == 2);
    CHECK(rec.merged_edge_pairs[0] == std::pair<EdgeId, EdgeId>{0, 1});
    CHECK(rec.merged_edge_pairs[1] == std::pair<EdgeId, EdgeId>{2, 3});
    CHECK(rec.incident_a == std::vector<EdgeId>{0, 3, 4});
    CHECK(rec.incident_b == std::vector<EdgeId>{1, 2, 4});

    // The original graph is untouched (value semantics).
    CHECK(g.edge_count() == 5);

    CHECK_THROWS_AS(contract(g, 1, 1), GraphError);
    CHECK_THROWS_AS(contract(g, 0, 9), GraphError);
}

TEST_CASE("contraction products get fresh ids, never reusing live ones") {
    WeightedGraph g(3);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    auto [h1, r1] = contract(g, 0, 1);
    CHECK(r1.new_node == 3);
    auto [h2, r2] = contract(h1, r1.new_node, 2);
    CHECK(r2.new_node == 4);
    CHECK(h2.node_count() == 1);
    CHECK(h2.edge_count() == 0);
}

TEST_CASE("delete_edge removes one edge and keeps ids stable") {
    WeightedGraph g = triangle(1, 2, 3);
    WeightedGraph h = delete_edge(g, 1);
    CHECK(h.edge_count() == 2);
    CHECK(h.has_edge(0));
    CHECK_FALSE(h.has_edge(1));
    CHECK(h.has_edge(2));
    CHECK(h.nodes() == g.nodes());
    CHECK(h.next_edge_id() == g.next_edge_id());
    CHECK_THROWS_AS(delete_edge(g, 9), GraphError);
}

TEST_CASE("split restores the merged pair when the product sits in the side") {
    WeightedGraph g = triangle(1, 1, 1);
    auto [h, rec] = contract(g, 0, 1);  // product node 3, remaining node 2

    CHECK(split({3, 2}, rec) == std::vector<NodeId>{0, 1, 2});
    CHECK(split({2}, rec) == std::vector<NodeId>{2});
    CHECK(split({}, rec) == std::vector<NodeId>{});
}

TEST_CASE("contract/split preserves cut values on random graphs") {
    Rng rng(20260814);
    for (int trial = 0; trial < 300; ++trial) {
        int n = static_cast<int>(rng.uniform(2, 8));
        WeightedGraph g = random_simple_graph(rng, n, 55, -9, 9);
        NodeId a = static_cast<NodeId>(rng.index(static_cast<std::uint64_t>(n)));
        NodeId b = static_cast<NodeId>(rng.index(static_cast<std::uint64_t>(n)));
        if (a == b) continue;
        auto [h, rec] = contract(g, a, b);

        // Any side over the contracted graph lifts to an equal-valued side.
        std::vector<NodeId> side;
        for (NodeId x : h.nodes())
            if (rng.index(2)) side.push_back(x);
        CHECK(cut_value(h, side) == cut_value(g, split(side, rec)));
    }
}

TEST_CASE("deleting an edge whose endpoints share a side preserves the cut value") {
    Rng rng(917);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 200; ++trial) {
        int n = static_cast<int>(rng.uniform(2, 8));
        WeightedGraph g = random_simple_graph(rng, n, 55, -9, 9);
        if (g.edge_count() == 0) continue;
        const Edge& e = g.edges()[rng.index(g.edge_count())];
        std::vector<NodeId> side;
        bool keep_together = rng.index(2) != 0;  // both endpoints in or both out
        for (NodeId x : g.nodes()) {
            if (x == e.u || x == e.v) {
                if (keep_together) side.push_back(x);
            } else if (rng.index(2)) {
                side.push_back(x);
            }
        }
        CHECK(cut_value(g, side) == cut_value(delete_edge(g, e.id), side));
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("FixedCutSet normalizes, deduplicates and evaluates separation") {
    FixedCutSet s;
    s.insert(3, 1);
    s.insert(1, 3);
    s.insert(0, 2);
    CHECK(s.size() == 2);
    CHECK(s.contains(1, 3));
    CHECK(s.contains(3, 1));
    CHECK_FALSE(s.contains(0, 1));
    CHECK_THROWS_AS(s.insert(2, 2), GraphError);

    CHECK(s.satisfied_by({1, 2}));         // separates {1,3} and {0,2}
    CHECK_FALSE(s.satisfied_by({1, 3}));   // {1,3} together inside
    CHECK_FALSE(s.satisfied_by({}));       // everything together outside

    FixedCutSet t = FixedCutSet::from_pairs({{4, 2}, {2, 4}});
    CHECK(t.size() == 1);
    CHECK(t.pairs().front() == std::pair<NodeId, NodeId>{2, 4});
}

TEST_CASE("FixedCutSet::remap renames merged endpoints to the product node") {
    WeightedGraph g(4);
    g.add_edge(0, 1, 1);
    auto [h, rec] = contract(g, 0, 1);  // product 4

    FixedCutSet s = FixedCutSet::from_pairs({{0, 2}, {1, 3}, {2, 3}});
    FixedCutSet m = s.remap(rec);
    CHECK(m.size() == 3);
    CHECK(m.contains(4, 2));
    CHECK(m.contains(4, 3));
    CHECK(m.contains(2, 3));

    // A pair joining the merged nodes would collapse; remap refuses it.
    FixedCutSet bad = FixedCutSet::from_pairs({{0, 1}});
    CHECK_THROWS_AS(bad.remap(rec), GraphError);
}
