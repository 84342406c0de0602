#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "onecut/graph.hpp"

namespace onecut {

/// One crossing: an unordered pair of edge ids, stored with first < second.
struct Crossing {
    EdgeId first;
    EdgeId second;

    Crossing(EdgeId a, EdgeId b) : first(std::min(a, b)), second(std::max(a, b)) {}
    bool involves(EdgeId e) const { return first == e || second == e; }
    bool operator==(const Crossing&) const = default;
};

struct CrossingSet {
    std::vector<Crossing> list;

    std::size_t size() const { return list.size(); }
    bool empty() const { return list.empty(); }
    bool operator==(const CrossingSet&) const = default;
};

/// The algorithm's working object: a weighted graph plus which edge pairs
/// cross in its (otherwise unstored) 1-planar drawing.
struct EmbeddedInstance {
    WeightedGraph graph;
    CrossingSet crossings;

    bool operator==(const EmbeddedInstance&) const = default;
};

/// Checks every structural invariant; reports the first violation in a fixed
/// order so hostile inputs get a deterministic diagnosis. nullopt means ok.
inline std::optional<ValidationError> validate(const EmbeddedInstance& inst) {
    using Kind = ValidationError::Kind;
    const WeightedGraph& g = inst.graph;

    for (const Edge& e : g.edges())
        if (e.u == e.v)
            return ValidationError(Kind::SelfLoop, "edge " + std::to_string(e.id) + " is a self-loop at node " + std::to_string(e.u));

    // Density bound for 1-planar graphs: |E| <= 4|V| - 8 once |V| >= 3.
    if (g.node_count() >= 3) {
        std::size_t cap = 4 * g.node_count() - 8;
        if (g.edge_count() > cap)
            return ValidationError(Kind::DensityExceeded,
                                   std::to_string(g.edge_count()) + " edges exceed the 1-planar bound " +
                                       std::to_string(cap) + " for " + std::to_string(g.node_count()) + " nodes");
    }

    {
        std::set<std::pair<NodeId, NodeId>> seen;
        for (const Edge& e : g.edges())
            if (!seen.insert(norm_pair(e.u, e.v)).second)
                return ValidationError(Kind::ParallelEdge,
                                       "edge " + std::to_string(e.id) + " duplicates pair " + std::to_string(e.u) +
                                           "-" + std::to_string(e.v));
    }

    std::set<EdgeId> crossed;
    for (const Crossing& x : inst.crossings.list) {
        for (EdgeId e : {x.first, x.second})
            if (!g.has_edge(e))
                return ValidationError(Kind::EdgeNotFound, "crossing references missing edge id " + std::to_string(e));
        if (x.first == x.second)
            return ValidationError(Kind::DuplicateCrossingEdge,
                                   "crossing pairs edge " + std::to_string(x.first) + " with itself");
        const Edge& e1 = g.edge(x.first);
        const Edge& e2 = g.edge(x.second);
        if (e1.touches(e2.u) || e1.touches(e2.v))
            return ValidationError(Kind::SharedEndpointCrossing,
                                   "crossing edges " + std::to_string(x.first) + ", " + std::to_string(x.second) +
                                       " share an endpoint");
        for (EdgeId e : {x.first, x.second})
            if (!crossed.insert(e).second)
                return ValidationError(Kind::DuplicateCrossingEdge,
                                       "edge " + std::to_string(e) + " appears in two crossings");
    }
    return std::nullopt;
}

/// UPDATE of the crossing set after contracting (merged_a, merged_b):
///   1. crossings touching both merged nodes dissolve;
///   2. edge ids follow the record's fusions (absorbed -> kept);
///   3. if a fusion leaves two crossings on one edge, the one whose original
///      reference id is smaller survives (deterministic tie rule).
/// Dissolved/dropped indices (into the input list) are appended to the record.
inline CrossingSet update_crossings(const CrossingSet& crossings, ContractionRecord& rec) {
    auto in = [](const std::vector<EdgeId>& ids, EdgeId e) {
        return std::find(ids.begin(), ids.end(), e) != ids.end();
    };

    std::map<EdgeId, EdgeId> fused;  // absorbed -> kept
    for (auto [kept, absorbed] : rec.merged_edge_pairs) fused[absorbed] = kept;

    struct Survivor {
        Crossing now;
        EdgeId original_ref;  // pre-fusion id of the remapped edge (or the edge itself)
        std::size_t index;
    };
    std::vector<Survivor> survivors;
    for (std::size_t i = 0; i < crossings.list.size(); ++i) {
        const Crossing& x = crossings.list[i];
        bool touches_a = in(rec.incident_a, x.first) || in(rec.incident_a, x.second);
        bool touches_b = in(rec.incident_b, x.first) || in(rec.incident_b, x.second);
        if (touches_a && touches_b) {
            rec.dissolved_crossings.push_back(i);
            continue;
        }
        EdgeId f = x.first, s = x.second, original = -1;
        if (auto it = fused.find(f); it != fused.end()) {
            original = f;
            f = it->second;
        }
        if (auto it = fused.find(s); it != fused.end()) {
            original = s;
            s = it->second;
        }
        survivors.push_back({Crossing(f, s), original, i});
    }

    // Conflict pass: one fused edge claimed by two survivors.
    std::map<EdgeId, std::size_t> claimed;  // edge id -> index into survivors
    std::vector<char> drop(survivors.size(), 0);
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        for (EdgeId e : {survivors[i].now.first, survivors[i].now.second}) {
            auto [it, fresh] = claimed.emplace(e, i);
            if (fresh) continue;
            std::size_t j = it->second;
            auto ref = [&](std::size_t s_idx) {
                return survivors[s_idx].original_ref >= 0 ? survivors[s_idx].original_ref : e;
            };
            if (ref(i) < ref(j)) {
                drop[j] = 1;
                rec.dissolved_crossings.push_back(survivors[j].index);
                it->second = i;
            } else {
                drop[i] = 1;
                rec.dissolved_crossings.push_back(survivors[i].index);
            }
        }
    }

    CrossingSet out;
    for (std::size_t i = 0; i < survivors.size(); ++i)
        if (!drop[i]) out.list.push_back(survivors[i].now);
    std::sort(rec.dissolved_crossings.begin(), rec.dissolved_crossings.end());
    return out;
}

}  // namespace onecut
