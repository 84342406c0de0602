#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "onecut/dual.hpp"
#include "onecut/embedding.hpp"
#include "onecut/graph.hpp"
#include "onecut/tjoin.hpp"

namespace onecut {

/// Exact maximum cut on a simple planar graph, with an optional set of node
/// pairs whose separation is mandatory. Every forced pair must be an edge of
/// the graph. A cut complement must meet each face boundary with the
/// boundary's own parity, i.e. it is a T-join of the dual on the odd faces;
/// minimizing its weight maximizes the cut. Forcing an edge into the cut
/// removes its dual from the join's ground set. nullopt iff no cut separates
/// every forced pair. The returned side holds each component's lowest node.
inline std::optional<Cut> fce_max_cut_planar(const WeightedGraph& g, const FixedCutSet& forced) {
    std::set<EdgeId> forced_edges;
    for (auto [a, b] : forced.pairs()) {
        std::optional<EdgeId> e = g.find_edge(a, b);
        if (!e)
            throw GraphError(GraphError::Kind::EdgeNotFound,
                             "forced pair is not an edge of the graph");
        forced_edges.insert(*e);
    }

    // Component split: the dual reduction applies per connected piece.
    std::map<NodeId, int> comp;
    std::vector<std::vector<NodeId>> comp_nodes;
    for (NodeId s : g.nodes()) {
        if (comp.count(s)) continue;
        int c = static_cast<int>(comp_nodes.size());
        comp_nodes.push_back({});
        std::vector<NodeId> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            comp_nodes.back().push_back(x);
            for (EdgeId eid : g.incident(x)) {
                NodeId y = g.edge(eid).other(x);
                if (!comp.count(y)) {
                    comp[y] = c;
                    stack.push_back(y);
                }
            }
        }
    }

    std::vector<NodeId> side;
    Weight value = 0;
    for (auto& nodes : comp_nodes) {
        std::sort(nodes.begin(), nodes.end());
        if (nodes.size() == 1 && g.incident(nodes[0]).empty()) {
            side.push_back(nodes[0]);
            continue;
        }
        GraphBuilder b;
        b.nodes = nodes;
        std::set<NodeId> members(nodes.begin(), nodes.end());
        for (const Edge& e : g.edges())
            if (members.count(e.u)) b.edges.push_back(e);
        b.next_node_id = g.next_node_id();
        b.next_edge_id = g.next_edge_id();
        WeightedGraph sub = std::move(b).finish();

        PlanarEmbedding emb = planar_embed(sub);
        DualGraph dual = build_dual(emb, sub);
        std::vector<TJoinEdge> ground;
        std::vector<EdgeId> ground_primal;
        for (const DualEdge& de : dual.edges) {
            if (forced_edges.count(de.primal)) continue;
            ground.push_back(TJoinEdge{de.left, de.right, de.w});
            ground_primal.push_back(de.primal);
        }
        std::optional<TJoinResult> join = min_weight_t_join(dual.face_count, ground, dual.odd_faces);
        if (!join) return std::nullopt;
        std::set<EdgeId> complement;  // edges kept out of the cut
        for (std::size_t idx : join->picked) complement.insert(ground_primal[idx]);

        // Two-color across cut edges; same color along complement edges.
        std::map<NodeId, int> color;
        color[nodes[0]] = 0;
        std::vector<NodeId> stack{nodes[0]};
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (EdgeId eid : sub.incident(x)) {
                NodeId y = sub.edge(eid).other(x);
                int want = complement.count(eid) ? color[x] : 1 - color[x];
                auto it = color.find(y);
                if (it == color.end()) {
                    color[y] = want;
                    stack.push_back(y);
                } else if (it->second != want) {
                    throw std::logic_error("join complement is not a cut");
                }
            }
        }
        for (NodeId x : nodes)
            if (color.at(x) == 0) side.push_back(x);
        for (const Edge& e : sub.edges())
            if (!complement.count(e.id)) value += e.w;
    }
    std::sort(side.begin(), side.end());
    return Cut{std::move(side), value};
}

}  // namespace onecut
