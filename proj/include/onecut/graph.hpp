#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onecut/errors.hpp"

namespace onecut {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;
using Weight = std::int64_t;

struct Edge {
    EdgeId id;
    NodeId u;
    NodeId v;
    Weight w;

    NodeId other(NodeId x) const { return x == u ? v : u; }
    bool touches(NodeId x) const { return u == x || v == x; }
    bool operator==(const Edge&) const = default;
};

inline std::pair<NodeId, NodeId> norm_pair(NodeId a, NodeId b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

/// Simple undirected graph with exact integer weights. Value semantics:
/// every structural operation returns a new graph. Edge ids are stable
/// across operations and never reused; node ids for contraction products
/// come from a monotone counter carried with the graph.
///
/// The container itself stores whatever it is given (the parser needs to
/// hold self-loops or parallels long enough for validate() to name them);
/// all algorithms assume validate() passed.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Graph with nodes 0..count-1 and no edges.
    explicit WeightedGraph(NodeId count) {
        nodes_.reserve(static_cast<std::size_t>(count));
        for (NodeId i = 0; i < count; ++i) nodes_.push_back(i);
        next_node_id_ = count;
    }

    explicit WeightedGraph(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {
        std::sort(nodes_.begin(), nodes_.end());
        nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
        next_node_id_ = nodes_.empty() ? 0 : nodes_.back() + 1;
    }

    const std::vector<NodeId>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    NodeId next_node_id() const { return next_node_id_; }
    EdgeId next_edge_id() const { return next_edge_id_; }

    bool has_node(NodeId x) const {
        return std::binary_search(nodes_.begin(), nodes_.end(), x);
    }

    bool has_edge(EdgeId id) const { return edge_index_.count(id) != 0; }

    const Edge& edge(EdgeId id) const {
        auto it = edge_index_.find(id);
        if (it == edge_index_.end())
            throw GraphError(GraphError::Kind::EdgeNotFound, "no edge with id " + std::to_string(id));
        return edges_[it->second];
    }

    std::optional<EdgeId> find_edge(NodeId a, NodeId b) const {
        auto it = pair_index_.find(norm_pair(a, b));
        if (it == pair_index_.end()) return std::nullopt;
        return edges_[it->second].id;
    }

    /// Incident edge ids of `x` in id order (empty for isolated nodes).
    const std::vector<EdgeId>& incident(NodeId x) const {
        static const std::vector<EdgeId> none;
        auto it = adjacency_.find(x);
        return it == adjacency_.end() ? none : it->second;
    }

    /// Appends an edge with a fresh id. Endpoints must exist; simplicity is
    /// checked by validate(), not here.
    EdgeId add_edge(NodeId u, NodeId v, Weight w) {
        if (!has_node(u) || !has_node(v))
            throw GraphError(GraphError::Kind::UnknownNode, "edge endpoint not in graph");
        EdgeId id = next_edge_id_++;
        insert_edge(Edge{id, u, v, w});
        return id;
    }

    Weight total_abs_weight() const {
        Weight s = 0;
        for (const Edge& e : edges_) s += e.w < 0 ? -e.w : e.w;
        return s;
    }

    bool operator==(const WeightedGraph& o) const {
        return nodes_ == o.nodes_ && edges_ == o.edges_;
    }

private:
    friend struct GraphBuilder;

    void insert_edge(const Edge& e) {
        edge_index_[e.id] = edges_.size();
        pair_index_[norm_pair(e.u, e.v)] = edges_.size();
        adjacency_[e.u].push_back(e.id);
        if (e.v != e.u) adjacency_[e.v].push_back(e.id);
        edges_.push_back(e);
        if (e.id >= next_edge_id_) next_edge_id_ = e.id + 1;
    }

    void rebuild_indices() {
        edge_index_.clear();
        pair_index_.clear();
        adjacency_.clear();
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            edge_index_[e.id] = i;
            pair_index_[norm_pair(e.u, e.v)] = i;
            adjacency_[e.u].push_back(e.id);
            if (e.v != e.u) adjacency_[e.v].push_back(e.id);
        }
    }

    std::vector<NodeId> nodes_;
    std::vector<Edge> edges_;  // sorted by id: edges are only ever appended in id order
    NodeId next_node_id_ = 0;
    EdgeId next_edge_id_ = 0;
    std::map<EdgeId, std::size_t> edge_index_;
    std::map<std::pair<NodeId, NodeId>, std::size_t> pair_index_;
    std::map<NodeId, std::vector<EdgeId>> adjacency_;
};

/// Raw-piece assembler used by structural operations; keeps WeightedGraph's
/// public surface free of partially-initialized states.
struct GraphBuilder {
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    NodeId next_node_id = 0;
    EdgeId next_edge_id = 0;

    WeightedGraph finish() && {
        WeightedGraph g;
        g.nodes_ = std::move(nodes);
        std::sort(g.nodes_.begin(), g.nodes_.end());
        g.edges_ = std::move(edges);
        std::sort(g.edges_.begin(), g.edges_.end(),
                  [](const Edge& a, const Edge& b) { return a.id < b.id; });
        g.next_node_id_ = next_node_id;
        g.next_edge_id_ = next_edge_id;
        for (const Edge& e : g.edges_)
            if (e.id >= g.next_edge_id_) g.next_edge_id_ = e.id + 1;
        g.rebuild_indices();
        return g;
    }
};

/// One side of a partition plus the exact weight of the edges it cuts.
struct Cut {
    std::vector<NodeId> side_S;  // sorted
    Weight value = 0;

    bool operator==(const Cut&) const = default;
};

/// Everything needed to invert one contraction: the merged pair, the fresh
/// node, and which edges were fused. incident_a/incident_b list the edge ids
/// touching the merged nodes in the pre-contraction graph so crossing-set
/// maintenance can detect dissolved crossings without the old graph.
struct ContractionRecord {
    NodeId merged_a = -1;
    NodeId merged_b = -1;
    NodeId new_node = -1;
    std::vector<std::pair<EdgeId, EdgeId>> merged_edge_pairs;  // (kept, absorbed)
    std::vector<std::size_t> dissolved_crossings;              // filled by update_crossings
    std::vector<EdgeId> incident_a;
    std::vector<EdgeId> incident_b;
};

inline Weight cut_value(const WeightedGraph& g, const std::vector<NodeId>& side_S) {
    for (NodeId x : side_S)
        if (!g.has_node(x))
            throw GraphError(GraphError::Kind::UnknownNode, "side_S node " + std::to_string(x) + " not in graph");
    std::vector<NodeId> side = side_S;
    std::sort(side.begin(), side.end());
    auto in_side = [&](NodeId x) { return std::binary_search(side.begin(), side.end(), x); };
    Weight total = 0;
    for (const Edge& e : g.edges())
        if (in_side(e.u) != in_side(e.v)) total += e.w;
    return total;
}

/// G/ab: merge a and b into a fresh node, drop the a-b edge, fuse parallels
/// with summed weight. Edge ids survive; a fused pair keeps the smaller id.
inline std::pair<WeightedGraph, ContractionRecord> contract(const WeightedGraph& g, NodeId a, NodeId b) {
    if (a == b)
        throw GraphError(GraphError::Kind::SameNode, "contract(" + std::to_string(a) + ", " + std::to_string(a) + ")");
    if (!g.has_node(a) || !g.has_node(b))
        throw GraphError(GraphError::Kind::UnknownNode, "contract endpoint not in graph");

    ContractionRecord rec;
    rec.merged_a = a;
    rec.merged_b = b;
    rec.new_node = g.next_node_id();
    rec.incident_a = g.incident(a);
    rec.incident_b = g.incident(b);

    GraphBuilder out;
    out.next_node_id = g.next_node_id() + 1;
    out.next_edge_id = g.next_edge_id();
    for (NodeId x : g.nodes())
        if (x != a && x != b) out.nodes.push_back(x);
    out.nodes.push_back(rec.new_node);

    std::map<std::pair<NodeId, NodeId>, std::size_t> seen;
    for (const Edge& e : g.edges()) {  // id order, so the kept edge of a fusion has the smaller id
        NodeId u = (e.u == a || e.u == b) ? rec.new_node : e.u;
        NodeId v = (e.v == a || e.v == b) ? rec.new_node : e.v;
        if (u == v) continue;  // the a-b edge collapses to a self-loop and is dropped
        auto key = norm_pair(u, v);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, out.edges.size());
            out.edges.push_back(Edge{e.id, u, v, e.w});
        } else {
            out.edges[it->second].w += e.w;
            rec.merged_edge_pairs.emplace_back(out.edges[it->second].id, e.id);
        }
    }
    return {std::move(out).finish(), std::move(rec)};
}

/// G - e: same nodes, one edge fewer.
inline WeightedGraph delete_edge(const WeightedGraph& g, EdgeId id) {
    if (!g.has_edge(id))
        throw GraphError(GraphError::Kind::EdgeNotFound, "delete_edge: no edge with id " + std::to_string(id));
    GraphBuilder out;
    out.nodes = g.nodes();
    out.next_node_id = g.next_node_id();
    out.next_edge_id = g.next_edge_id();
    for (const Edge& e : g.edges())
        if (e.id != id) out.edges.push_back(e);
    return std::move(out).finish();
}

/// SPLIT: replace the contraction product by its two constituents, if present.
inline std::vector<NodeId> split(std::vector<NodeId> side_S, const ContractionRecord& rec) {
    auto it = std::find(side_S.begin(), side_S.end(), rec.new_node);
    if (it != side_S.end()) {
        side_S.erase(it);
        side_S.push_back(rec.merged_a);
        side_S.push_back(rec.merged_b);
        std::sort(side_S.begin(), side_S.end());
    }
    return side_S;
}

/// Unordered node pairs the cut must separate (the C of the general mode).
/// Pairs survive contraction by renaming; duplicates collapse.
class FixedCutSet {
public:
    FixedCutSet() = default;

    static FixedCutSet from_pairs(const std::vector<std::pair<NodeId, NodeId>>& pairs) {
        FixedCutSet s;
        for (auto [a, b] : pairs) s.insert(a, b);
        return s;
    }

    void insert(NodeId a, NodeId b) {
        if (a == b) throw GraphError(GraphError::Kind::SameNode, "forced pair with identical nodes");
        auto p = norm_pair(a, b);
        auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
        if (it == pairs_.end() || *it != p) pairs_.insert(it, p);
    }

    bool contains(NodeId a, NodeId b) const {
        return std::binary_search(pairs_.begin(), pairs_.end(), norm_pair(a, b));
    }

    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }
    const std::vector<std::pair<NodeId, NodeId>>& pairs() const { return pairs_; }

    /// Renames the merged nodes to the contraction product. The caller must
    /// guarantee the merged pair itself is not in the set (the branch guards do).
    FixedCutSet remap(const ContractionRecord& rec) const {
        FixedCutSet out;
        for (auto [a, b] : pairs_) {
            NodeId na = (a == rec.merged_a || a == rec.merged_b) ? rec.new_node : a;
            NodeId nb = (b == rec.merged_a || b == rec.merged_b) ? rec.new_node : b;
            out.insert(na, nb);  // throws SameNode if a guarded pair slipped through
        }
        return out;
    }

    /// True when every pair is separated by side_S (membership differs).
    bool satisfied_by(const std::vector<NodeId>& side_S) const {
        auto in = [&](NodeId x) { return std::binary_search(side_S.begin(), side_S.end(), x); };
        for (auto [a, b] : pairs_)
            if (in(a) == in(b)) return false;
        return true;
    }

    bool operator==(const FixedCutSet&) const = default;

private:
    std::vector<std::pair<NodeId, NodeId>> pairs_;  // normalized (a < b), sorted
};

}  // namespace onecut
