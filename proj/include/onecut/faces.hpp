#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "onecut/graph.hpp"

namespace onecut {

/// Combinatorial embedding data: per node, the cyclic order of incident
/// edges as (edge id, neighbor) pairs.
struct RotationSystem {
    std::map<NodeId, std::vector<std::pair<EdgeId, NodeId>>> at;

    std::size_t degree(NodeId x) const {
        auto it = at.find(x);
        return it == at.end() ? 0 : it->second.size();
    }
};

/// A dart leaves `from` along `edge`.
struct Dart {
    NodeId from;
    EdgeId edge;
    auto operator<=>(const Dart&) const = default;
};

struct FaceWalk {
    std::vector<Dart> darts;
    std::size_t length() const { return darts.size(); }
};

struct FaceSet {
    std::vector<FaceWalk> faces;
    std::map<Dart, int> face_of;  // every dart lies on exactly one face walk

    int face_of_dart(NodeId from, EdgeId edge) const { return face_of.at(Dart{from, edge}); }
};

/// Traces all face walks of a rotation system over a simple graph: after
/// arriving at v along e, the walk continues along the successor of e in
/// v's rotation. Every dart is visited exactly once, so per connected
/// component Euler's n - m + f = 2 holds (checked by tests, not here).
inline FaceSet trace_faces(const RotationSystem& rot) {
    std::map<std::pair<NodeId, EdgeId>, std::size_t> pos;
    for (const auto& [node, cyc] : rot.at)
        for (std::size_t i = 0; i < cyc.size(); ++i) pos[{node, cyc[i].first}] = i;

    FaceSet out;
    for (const auto& [node, cyc] : rot.at) {
        for (const auto& [eid, nbr] : cyc) {
            Dart start{node, eid};
            if (out.face_of.count(start)) continue;
            int face_id = static_cast<int>(out.faces.size());
            FaceWalk walk;
            Dart d = start;
            do {
                out.face_of[d] = face_id;
                walk.darts.push_back(d);
                const auto& cycle = rot.at.at(d.from);
                NodeId to = -1;
                for (const auto& [e2, n2] : cycle)
                    if (e2 == d.edge) to = n2;
                std::size_t j = pos.at({to, d.edge});
                const auto& next_cycle = rot.at.at(to);
                d = Dart{to, next_cycle[(j + 1) % next_cycle.size()].first};
            } while (!(d == start));
            out.faces.push_back(std::move(walk));
        }
    }
    return out;
}

}  // namespace onecut
