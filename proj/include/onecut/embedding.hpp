#pragma once

#include <map>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>
#include <boost/property_map/property_map.hpp>

#include "onecut/errors.hpp"
#include "onecut/faces.hpp"
#include "onecut/graph.hpp"

namespace onecut {

/// Combinatorial embedding: one rotation per node plus the traced face set.
/// Faces cover every component that has at least one edge; isolated nodes
/// carry no darts and therefore no face walk.
struct PlanarEmbedding {
    RotationSystem rotation;
    FaceSet faces;
};

/// Planarity test plus embedding extraction. Requires a simple graph.
/// Throws GraphError{NotPlanar} when no plane embedding exists.
inline PlanarEmbedding planar_embed(const WeightedGraph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::no_property,
                                             boost::property<boost::edge_index_t, int>>;
    const std::vector<NodeId>& nodes = g.nodes();
    std::map<NodeId, int> pos;
    for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = static_cast<int>(i);

    BoostGraph bg(nodes.size());
    std::vector<EdgeId> edge_ids;
    for (const Edge& e : g.edges()) {
        boost::add_edge(static_cast<std::size_t>(pos.at(e.u)), static_cast<std::size_t>(pos.at(e.v)),
                        static_cast<int>(edge_ids.size()), bg);
        edge_ids.push_back(e.id);
    }

    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> order(boost::num_vertices(bg));
    auto emb_map = boost::make_iterator_property_map(order.begin(), boost::get(boost::vertex_index, bg));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = emb_map);
    if (!planar) throw GraphError(GraphError::Kind::NotPlanar, "graph admits no plane embedding");

    PlanarEmbedding out;
    auto index_of = boost::get(boost::edge_index, bg);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto& cyc = out.rotation.at[nodes[i]];
        for (const EdgeDesc& ed : order[i]) {
            std::size_t a = boost::source(ed, bg), b = boost::target(ed, bg);
            std::size_t other = (a == i) ? b : a;
            cyc.emplace_back(edge_ids[static_cast<std::size_t>(boost::get(index_of, ed))],
                             nodes[other]);
        }
    }
    out.faces = trace_faces(out.rotation);
    return out;
}

}  // namespace onecut
