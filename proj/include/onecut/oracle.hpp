#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "onecut/faces.hpp"
#include "onecut/graph.hpp"
#include "onecut/instance.hpp"

namespace onecut {

/// Deterministic bounded draws on top of mt19937_64. The standard
/// distributions are not pinned across library implementations, so seeds
/// must not flow through them if outputs are to be reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    /// Uniform draw from {0, ..., n-1} by rejection.
    std::uint64_t index(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform draw from the inclusive range [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(index(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 eng_;
};

namespace detail {

constexpr std::size_t kOracleNodeCap = 24;

/// Canonical form: the lowest node id sits in the complement of side_S.
inline std::vector<NodeId> oracle_canonical(const WeightedGraph& g, const std::vector<char>& in_side) {
    std::vector<NodeId> side;
    bool flip = !g.nodes().empty() && in_side[0];
    for (std::size_t i = 0; i < g.nodes().size(); ++i)
        if ((in_side[i] != 0) != flip) side.push_back(g.nodes()[i]);
    return side;
}

}  // namespace detail

/// Exhaustive maximum cut over all 2^(n-1) partitions. Trusted ground truth;
/// capped so a full sweep stays around a second.
inline Cut brute_force_max_cut(const WeightedGraph& g) {
    std::size_t n = g.node_count();
    if (n > detail::kOracleNodeCap)
        throw GraphError(GraphError::Kind::TooLarge,
                         "brute force capped at " + std::to_string(detail::kOracleNodeCap) + " nodes");
    if (n == 0) return Cut{{}, 0};

    const std::vector<NodeId>& nodes = g.nodes();
    std::map<NodeId, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[nodes[i]] = i;

    struct E {
        std::size_t u, v;
        Weight w;
    };
    std::vector<E> es;
    for (const Edge& e : g.edges()) es.push_back({pos.at(e.u), pos.at(e.v), e.w});

    Weight best = 0;  // mask 0 = empty cut
    std::uint64_t best_mask = 0;
    std::uint64_t count = n >= 1 ? (std::uint64_t{1} << (n - 1)) : 1;
    for (std::uint64_t mask = 1; mask < count; ++mask) {  // node[n-1] pinned out of side
        Weight val = 0;
        for (const E& e : es)
            if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) val += e.w;
        if (val > best) {
            best = val;
            best_mask = mask;
        }
    }
    std::vector<char> in_side(n, 0);
    for (std::size_t i = 0; i < n; ++i) in_side[i] = (best_mask >> i) & 1;
    return Cut{detail::oracle_canonical(g, in_side), best};
}

/// Exhaustive maximum cut among partitions separating every forced pair;
/// nullopt when no partition qualifies.
inline std::optional<Cut> brute_force_fce(const WeightedGraph& g, const FixedCutSet& forced) {
    std::size_t n = g.node_count();
    if (n > detail::kOracleNodeCap)
        throw GraphError(GraphError::Kind::TooLarge,
                         "brute force capped at " + std::to_string(detail::kOracleNodeCap) + " nodes");
    const std::vector<NodeId>& nodes = g.nodes();
    std::map<NodeId, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[nodes[i]] = i;

    struct E {
        std::size_t u, v;
        Weight w;
    };
    std::vector<E> es;
    for (const Edge& e : g.edges()) es.push_back({pos.at(e.u), pos.at(e.v), e.w});
    std::vector<std::pair<std::size_t, std::size_t>> req;
    for (auto [a, b] : forced.pairs()) req.emplace_back(pos.at(a), pos.at(b));

    bool found = false;
    Weight best = 0;
    std::uint64_t best_mask = 0;
    std::uint64_t count = n >= 1 ? (std::uint64_t{1} << (n - 1)) : 1;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        bool ok = true;
        for (auto [a, b] : req)
            if (((mask >> a) & 1) == ((mask >> b) & 1)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        Weight val = 0;
        for (const E& e : es)
            if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) val += e.w;
        if (!found || val > best) {
            found = true;
            best = val;
            best_mask = mask;
        }
    }
    if (!found) return std::nullopt;
    std::vector<char> in_side(n, 0);
    for (std::size_t i = 0; i < n; ++i) in_side[i] = (best_mask >> i) & 1;
    // Complementing in the canonical form preserves every separation.
    return Cut{detail::oracle_canonical(g, in_side), best};
}

struct GeneratorConfig {
    NodeId node_count = 0;
    int crossing_count = 0;
    Weight weight_min = 1;
    Weight weight_max = 1;
    std::uint64_t seed = 0;
};

namespace detail {

/// Mutable embedding scaffold for the generator: neighbor cycles plus an
/// alive-edge registry keyed by internal edge ids.
struct Scaffold {
    RotationSystem rot;
    std::map<EdgeId, std::pair<NodeId, NodeId>> alive;
    std::set<std::pair<NodeId, NodeId>> pairs;
    EdgeId next_edge = 0;

    EdgeId link(NodeId u, NodeId v) {
        EdgeId id = next_edge++;
        alive[id] = {u, v};
        pairs.insert(norm_pair(u, v));
        return id;
    }

    void unlink(EdgeId id) {
        auto [u, v] = alive.at(id);
        auto drop = [&](NodeId a) {
            auto& cyc = rot.at[a];
            for (std::size_t i = 0; i < cyc.size(); ++i)
                if (cyc[i].first == id) {
                    cyc.erase(cyc.begin() + static_cast<std::ptrdiff_t>(i));
                    return;
                }
        };
        drop(u);
        drop(v);
        alive.erase(id);
        pairs.erase(norm_pair(u, v));
    }

    /// Connectivity of the scaffold with one edge hypothetically removed.
    bool connected_without(EdgeId skip) const {
        if (rot.at.empty()) return true;
        std::set<NodeId> seen;
        std::vector<NodeId> stack{rot.at.begin()->first};
        seen.insert(stack.back());
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (auto [eid, nbr] : rot.at.at(x)) {
                if (eid == skip) continue;
                if (seen.insert(nbr).second) stack.push_back(nbr);
            }
        }
        return seen.size() == rot.at.size();
    }
};

inline void insert_into_face(Scaffold& s, NodeId x, NodeId a, NodeId b, NodeId c) {
    EdgeId xa = s.link(x, a);
    EdgeId xb = s.link(x, b);
    EdgeId xc = s.link(x, c);
    s.rot.at[x] = {{xa, a}, {xc, c}, {xb, b}};
    auto splice_after = [&](NodeId host, NodeId after, EdgeId eid) {
        auto& cyc = s.rot.at[host];
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (cyc[i].second == after) {
                cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(i) + 1, {eid, x});
                return;
            }
    };
    splice_after(a, c, xa);
    splice_after(b, a, xb);
    splice_after(c, b, xc);
}

}  // namespace detail

/// Seeded 1-planar instance: a stacked triangulation, quadrilateral faces
/// opened by edge deletions, one pair of crossing diagonals per selected
/// quadrilateral, a few extra connectivity-preserving deletions for shape
/// variety, then uniform weights. The construction keeps every planned
/// quadrilateral a face of the final planar base, so the declared crossings
/// are exactly realizable.
inline EmbeddedInstance generate_instance(const GeneratorConfig& cfg) {
    if (cfg.node_count < 1)
        throw GraphError(GraphError::Kind::Unsatisfiable, "node_count must be positive");
    Rng rng(cfg.seed);
    auto draw_weight = [&]() { return static_cast<Weight>(rng.uniform(cfg.weight_min, cfg.weight_max)); };

    if (cfg.node_count <= 2) {
        if (cfg.crossing_count > 0)
            throw GraphError(GraphError::Kind::Unsatisfiable, "no crossings fit on fewer than 4 nodes");
        EmbeddedInstance inst;
        inst.graph = WeightedGraph(cfg.node_count);
        if (cfg.node_count == 2) inst.graph.add_edge(0, 1, draw_weight());
        return inst;
    }

    detail::Scaffold s;
    EdgeId e01 = s.link(0, 1), e12 = s.link(1, 2), e20 = s.link(2, 0);
    s.rot.at[0] = {{e01, 1}, {e20, 2}};
    s.rot.at[1] = {{e12, 2}, {e01, 0}};
    s.rot.at[2] = {{e20, 0}, {e12, 1}};
    std::vector<std::array<NodeId, 3>> tris = {{0, 1, 2}, {0, 2, 1}};
    for (NodeId x = 3; x < cfg.node_count; ++x) {
        std::size_t f = static_cast<std::size_t>(rng.index(tris.size()));
        auto [a, b, c] = tris[f];
        detail::insert_into_face(s, x, a, b, c);
        tris.erase(tris.begin() + static_cast<std::ptrdiff_t>(f));
        tris.push_back({a, b, x});
        tris.push_back({b, c, x});
        tris.push_back({c, a, x});
    }

    // Open one quadrilateral face per crossing and remember its diagonals.
    struct PlannedCrossing {
        NodeId x, y, p, q;
    };
    std::vector<PlannedCrossing> planned;
    std::set<EdgeId> reserved;
    std::set<std::pair<NodeId, NodeId>> planned_pairs;
    for (int round = 0; round < cfg.crossing_count; ++round) {
        FaceSet fs = trace_faces(s.rot);
        struct Candidate {
            EdgeId xy;
            NodeId x, y, p, q;
            std::optional<EdgeId> pq_edge;
        };
        std::vector<Candidate> cands;
        for (const auto& [eid, ends] : s.alive) {
            if (reserved.count(eid)) continue;
            auto [x, y] = ends;
            int f1 = fs.face_of_dart(x, eid);
            int f2 = fs.face_of_dart(y, eid);
            if (f1 == f2) continue;
            const FaceWalk& w1 = fs.faces[static_cast<std::size_t>(f1)];
            const FaceWalk& w2 = fs.faces[static_cast<std::size_t>(f2)];
            if (w1.length() != 3 || w2.length() != 3) continue;
            auto apex = [&](const FaceWalk& w) -> NodeId {
                for (const Dart& d : w.darts)
                    if (d.from != x && d.from != y) return d.from;
                return -1;
            };
            NodeId p = apex(w1), q = apex(w2);
            if (p < 0 || q < 0 || p == q) continue;
            Candidate c{eid, x, y, p, q, std::nullopt};
            if (auto pit = s.pairs.find(norm_pair(p, q)); pit != s.pairs.end()) {
                EdgeId pq = -1;
                for (const auto& [id2, uv] : s.alive)
                    if (norm_pair(uv.first, uv.second) == norm_pair(p, q)) pq = id2;
                if (reserved.count(pq)) continue;
                c.pq_edge = pq;
            } else if (planned_pairs.count(norm_pair(p, q))) {
                continue;
            }
            cands.push_back(c);
        }
        if (cands.empty())
            throw GraphError(GraphError::Kind::Unsatisfiable,
                             "base graph ran out of quadrilateral candidates at crossing " + std::to_string(round));
        const Candidate chosen = cands[static_cast<std::size_t>(rng.index(cands.size()))];
        s.unlink(chosen.xy);
        if (chosen.pq_edge) s.unlink(*chosen.pq_edge);
        planned.push_back({chosen.x, chosen.y, chosen.p, chosen.q});
        planned_pairs.insert(norm_pair(chosen.x, chosen.y));
        planned_pairs.insert(norm_pair(chosen.p, chosen.q));
        for (auto [a, b] : {std::pair{chosen.p, chosen.x}, {chosen.x, chosen.q}, {chosen.q, chosen.y}, {chosen.y, chosen.p}}) {
            for (const auto& [id2, uv] : s.alive)
                if (norm_pair(uv.first, uv.second) == norm_pair(a, b)) reserved.insert(id2);
        }
    }

    // Extra deletions keep the base connected and never touch quadrilateral
    // boundaries, so the planned crossings stay realizable.
    std::size_t attempts = static_cast<std::size_t>(cfg.node_count) / 2;
    for (std::size_t t = 0; t < attempts && s.alive.size() > 1; ++t) {
        std::vector<EdgeId> pool;
        for (const auto& [eid, uv] : s.alive)
            if (!reserved.count(eid)) pool.push_back(eid);
        if (pool.empty()) break;
        EdgeId pick = pool[static_cast<std::size_t>(rng.index(pool.size()))];
        if (s.connected_without(pick)) s.unlink(pick);
    }

    EmbeddedInstance inst;
    inst.graph = WeightedGraph(cfg.node_count);
    for (const auto& [eid, uv] : s.alive) inst.graph.add_edge(uv.first, uv.second, draw_weight());
    for (const PlannedCrossing& pc : planned) {
        EdgeId d1 = inst.graph.add_edge(pc.x, pc.y, draw_weight());
        EdgeId d2 = inst.graph.add_edge(pc.p, pc.q, draw_weight());
        inst.crossings.list.emplace_back(d1, d2);
    }
    return inst;
}

}  // namespace onecut
