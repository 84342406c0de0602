#pragma once

#include <vector>

#include "onecut/embedding.hpp"
#include "onecut/graph.hpp"

namespace onecut {

/// One dual edge per primal edge; a bridge yields left == right (self-loop).
struct DualEdge {
    int left = -1;
    int right = -1;
    EdgeId primal = -1;
    Weight w = 0;
};

/// Geometric dual restricted to what the cut reduction needs: faces as
/// nodes, the primal-edge bijection, and the odd-boundary terminal set.
struct DualGraph {
    int face_count = 0;
    std::vector<DualEdge> edges;
    std::vector<int> odd_faces;
};

inline DualGraph build_dual(const PlanarEmbedding& emb, const WeightedGraph& g) {
    DualGraph d;
    d.face_count = static_cast<int>(emb.faces.faces.size());
    for (const Edge& e : g.edges()) {
        DualEdge de;
        de.primal = e.id;
        de.w = e.w;
        de.left = emb.faces.face_of_dart(e.u, e.id);
        de.right = emb.faces.face_of_dart(e.v, e.id);
        d.edges.push_back(de);
    }
    for (int f = 0; f < d.face_count; ++f)
        if (emb.faces.faces[static_cast<std::size_t>(f)].length() % 2 == 1) d.odd_faces.push_back(f);
    return d;
}

}  // namespace onecut
