#pragma once

// Shared helpers for the test suite and the acceptance harness: instance
// generation within the generator's feasibility envelope, independent
// brute-force oracles for matching and T-joins, and the naive branch-3
// variant used as a foil for the lifting tests.

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "onecut/bench.hpp"
#include "onecut/io.hpp"
#include "onecut/solver.hpp"

namespace testsupport {

using namespace onecut;

inline std::string data_path(const std::string& name) {
    return std::string(ONECUT_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Largest crossing count the generator can reliably place on n nodes
/// (measured over the retry policy; beyond this the quad-gadget scan
/// exhausts its candidates).
inline int k_cap(int n) {
    if (n < 4) return 0;
    if (n <= 5) return 1;
    if (n == 6) return 3;
    return 4;
}

inline EmbeddedInstance gen(int n, int k, Weight wmin, Weight wmax, std::uint64_t seed) {
    GeneratorConfig cfg;
    cfg.node_count = n;
    cfg.crossing_count = k;
    cfg.weight_min = wmin;
    cfg.weight_max = wmax;
    cfg.seed = seed;
    return detail::generate_with_retries(cfg);
}

/// Draws (n, k) uniformly with n in [nmin, nmax] and k in [0, min(kmax, cap)].
inline EmbeddedInstance random_instance(Rng& rng, int nmin, int nmax, int kmax, Weight wmin,
                                        Weight wmax) {
    int n = static_cast<int>(rng.uniform(nmin, nmax));
    int k = static_cast<int>(rng.uniform(0, std::min(kmax, k_cap(n))));
    return gen(n, k, wmin, wmax, rng.bits());
}

/// Erdos-Renyi-style simple graph (not necessarily planar or connected);
/// used where only graph_core semantics are under test.
inline WeightedGraph random_simple_graph(Rng& rng, int n, int percent, Weight wmin, Weight wmax) {
    WeightedGraph g(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (rng.index(100) < static_cast<std::uint64_t>(percent))
                g.add_edge(u, v, rng.uniform(wmin, wmax));
    return g;
}

inline bool connected(const WeightedGraph& g) {
    if (g.node_count() <= 1) return true;
    std::set<NodeId> seen{g.nodes().front()};
    std::vector<NodeId> stack{g.nodes().front()};
    while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (EdgeId eid : g.incident(x)) {
            NodeId y = g.edge(eid).other(x);
            if (seen.insert(y).second) stack.push_back(y);
        }
    }
    return seen.size() == g.node_count();
}

/// True when every connected component's minimum node id is outside side_S
/// (the canonical orientation the solver promises).
inline bool component_minima_excluded(const WeightedGraph& g, const std::vector<NodeId>& side) {
    std::set<NodeId> in(side.begin(), side.end());
    std::set<NodeId> visited;
    for (NodeId root : g.nodes()) {  // ascending: first unseen node is its component's minimum
        if (visited.count(root)) continue;
        if (in.count(root)) return false;
        std::vector<NodeId> stack{root};
        visited.insert(root);
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (EdgeId eid : g.incident(x)) {
                NodeId y = g.edge(eid).other(x);
                if (visited.insert(y).second) stack.push_back(y);
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Independent oracles.
// ---------------------------------------------------------------------------

/// Maximum-weight matching by bitmask DP; entries <= 0 mean "no edge",
/// mirroring the production matcher's contract. Exact in __int128.
inline BigWeight dp_max_matching(int n, const std::vector<std::vector<Weight>>& w) {
    std::vector<BigWeight> f(static_cast<std::size_t>(1) << n, 0);
    for (std::size_t mask = 1; mask < f.size(); ++mask) {
        int i = 0;
        while (!(mask >> i & 1)) ++i;
        BigWeight best = f[mask & (mask - 1)];  // leave i unmatched
        for (int j = i + 1; j < n; ++j)
            if ((mask >> j & 1) && w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0)
                best = std::max(best, f[mask ^ (1u << i) ^ (1u << j)] +
                                          w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        f[mask] = best;
    }
    return f.back();
}

/// Minimum-cost perfect matching on a complete cost matrix by bitmask DP.
inline std::optional<BigWeight> dp_min_perfect_matching(int n,
                                                        const std::vector<std::vector<Weight>>& cost) {
    if (n % 2 != 0) return std::nullopt;
    const BigWeight inf = BigWeight(1) << 100;
    std::vector<BigWeight> f(static_cast<std::size_t>(1) << n, inf);
    f[0] = 0;
    for (std::size_t mask = 1; mask < f.size(); ++mask) {
        if (__builtin_popcountll(mask) % 2 != 0) continue;
        int i = 0;
        while (!(mask >> i & 1)) ++i;
        for (int j = i + 1; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            BigWeight prev = f[mask ^ (1u << i) ^ (1u << j)];
            if (prev < inf)
                f[mask] = std::min(f[mask],
                                   prev + cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
    if (f.back() >= inf) return std::nullopt;
    return f.back();
}

/// Exhaustive minimum-weight T-join: scans every edge subset. Returns the
/// optimum cost, or nullopt when no subset has odd degree exactly at T.
inline std::optional<Weight> exhaustive_t_join(int node_count, const std::vector<TJoinEdge>& edges,
                                               const std::vector<int>& terminals) {
    std::vector<char> want(static_cast<std::size_t>(node_count), 0);
    for (int t : terminals) want[static_cast<std::size_t>(t)] = 1;
    std::optional<Weight> best;
    for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << edges.size()); ++mask) {
        std::vector<char> parity(static_cast<std::size_t>(node_count), 0);
        Weight cost = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!(mask >> i & 1)) continue;
            cost += edges[i].w;
            if (edges[i].u != edges[i].v) {  // self-loops never change parity
                parity[static_cast<std::size_t>(edges[i].u)] ^= 1;
                parity[static_cast<std::size_t>(edges[i].v)] ^= 1;
            }
        }
        if (parity == want && (!best || cost < *best)) best = cost;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Naive branch-3 variant (the foil): identical branching, but the deletion
// branch neither adds the zero-weight edges nor forces {w,y}, {y,z}, and the
// winning candidate is chosen by its value in the branch graph, not by the
// lifted value in the current graph.
// ---------------------------------------------------------------------------

struct NaiveOut {
    std::vector<NodeId> side;  // already lifted into the current graph
    Weight claimed = 0;        // value in the branch graph the side came from
};

inline NaiveOut naive_rec(const EmbeddedInstance& inst) {
    if (inst.crossings.empty()) {
        auto cut = fce_max_cut_planar(inst.graph, FixedCutSet{});
        return {cut->side_S, cut->value};  // empty constraint set is always feasible
    }
    CrossingLabels lab = label_crossing(inst);
    std::array<NaiveOut, 3> cand;
    for (int b = 0; b < 3; ++b) {
        if (b < 2) {
            NodeId p = b == 0 ? lab.w : lab.y;
            NodeId q = b == 0 ? lab.y : lab.z;
            auto [child_g, rec] = contract(inst.graph, p, q);
            EmbeddedInstance child{std::move(child_g), update_crossings(inst.crossings, rec)};
            NaiveOut r = naive_rec(child);
            r.side = split(std::move(r.side), rec);
            cand[static_cast<std::size_t>(b)] = std::move(r);
        } else {
            EmbeddedInstance child;
            child.graph = delete_edge(inst.graph, lab.e_wz);
            for (std::size_t i = 0; i < inst.crossings.list.size(); ++i)
                if (i != lab.crossing_index) child.crossings.list.push_back(inst.crossings.list[i]);
            cand[2] = naive_rec(child);
        }
    }
    std::size_t pick = 0;
    for (std::size_t b = 1; b < 3; ++b)
        if (cand[b].claimed > cand[pick].claimed) pick = b;
    return cand[pick];
}

/// Returns the naive variant's chosen side together with its true value in
/// the input graph (which is what the variant would report after lifting).
inline Cut naive_max_cut(const EmbeddedInstance& inst) {
    NaiveOut r = naive_rec(inst);
    std::sort(r.side.begin(), r.side.end());
    return Cut{detail::normalize_side(inst.graph, r.side), cut_value(inst.graph, r.side)};
}

}  // namespace testsupport
