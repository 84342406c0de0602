#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "onecut/graph.hpp"
#include "onecut/matching.hpp"

namespace onecut {

struct TJoinEdge {
    int u = 0, v = 0;
    Weight w = 0;
};

/// Picked entries index the input edge vector.
struct TJoinResult {
    std::vector<std::size_t> picked;
    Weight cost = 0;
};

/// Minimum weight T-join with arbitrary edge weights. Flip negative edges
/// into the base solution and adjust the terminal parity, reducing to a
/// non-negative join solved by shortest paths plus a minimum weight perfect
/// matching on the terminals. nullopt iff some component holds an odd number
/// of terminals. Self-loop edges are legal; with a negative weight they join
/// the base set, otherwise they are never useful.
inline std::optional<TJoinResult> min_weight_t_join(int node_count,
                                                    const std::vector<TJoinEdge>& edges,
                                                    const std::vector<int>& terminals) {
    std::size_t n = static_cast<std::size_t>(node_count);
    std::vector<char> parity(n, 0);
    for (int t : terminals) parity[static_cast<std::size_t>(t)] ^= 1;

    // Base set: all strictly negative edges; their endpoints flip parity.
    std::vector<char> in_base(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].w < 0) {
            in_base[i] = 1;
            if (edges[i].u != edges[i].v) {
                parity[static_cast<std::size_t>(edges[i].u)] ^= 1;
                parity[static_cast<std::size_t>(edges[i].v)] ^= 1;
            }
        }

    std::vector<std::vector<std::pair<int, std::size_t>>> adj(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].u == edges[i].v) continue;
        adj[static_cast<std::size_t>(edges[i].u)].push_back({edges[i].v, i});
        adj[static_cast<std::size_t>(edges[i].v)].push_back({edges[i].u, i});
    }

    // Component split; each must balance its transformed terminals.
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = comp_count;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (auto [y, ei] : adj[x])
                if (comp[static_cast<std::size_t>(y)] < 0) {
                    comp[static_cast<std::size_t>(y)] = comp_count;
                    stack.push_back(static_cast<std::size_t>(y));
                }
        }
        ++comp_count;
    }
    std::vector<std::vector<int>> comp_terminals(static_cast<std::size_t>(comp_count));
    for (std::size_t x = 0; x < n; ++x)
        if (parity[x]) comp_terminals[static_cast<std::size_t>(comp[x])].push_back(static_cast<int>(x));
    for (const auto& ts : comp_terminals)
        if (ts.size() % 2 != 0) return std::nullopt;

    std::vector<char> use_count(edges.size(), 0);  // parity of path usage
    const Weight kInf = std::numeric_limits<Weight>::max() / 4;
    for (const auto& ts : comp_terminals) {
        if (ts.empty()) continue;
        int t = static_cast<int>(ts.size());
        // Shortest path forest per terminal over |w|.
        std::vector<std::vector<Weight>> dist(static_cast<std::size_t>(t), std::vector<Weight>(n, kInf));
        std::vector<std::vector<std::size_t>> via(static_cast<std::size_t>(t),
                                                  std::vector<std::size_t>(n, SIZE_MAX));
        for (int i = 0; i < t; ++i) {
            auto& di = dist[static_cast<std::size_t>(i)];
            auto& vi = via[static_cast<std::size_t>(i)];
            using Item = std::pair<Weight, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
            di[static_cast<std::size_t>(ts[static_cast<std::size_t>(i)])] = 0;
            pq.push({0, ts[static_cast<std::size_t>(i)]});
            while (!pq.empty()) {
                auto [dx, x] = pq.top();
                pq.pop();
                if (dx != di[static_cast<std::size_t>(x)]) continue;
                for (auto [y, ei] : adj[static_cast<std::size_t>(x)]) {
                    Weight c = edges[ei].w < 0 ? -edges[ei].w : edges[ei].w;
                    if (dx + c < di[static_cast<std::size_t>(y)]) {
                        di[static_cast<std::size_t>(y)] = dx + c;
                        vi[static_cast<std::size_t>(y)] = ei;
                        pq.push({dx + c, y});
                    }
                }
            }
        }
        std::vector<std::vector<Weight>> pairwise(static_cast<std::size_t>(t),
                                                  std::vector<Weight>(static_cast<std::size_t>(t), 0));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                if (i != j)
                    pairwise[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(ts[static_cast<std::size_t>(j)])];
        MatchingResult match = min_weight_perfect_matching(t, pairwise);
        for (int i = 0; i < t; ++i) {
            int j = match.mate[static_cast<std::size_t>(i)];
            if (j < i) continue;  // each pair once
            // Walk j's node back to i's terminal through i's forest.
            std::size_t x = static_cast<std::size_t>(ts[static_cast<std::size_t>(j)]);
            const auto& vi = via[static_cast<std::size_t>(i)];
            while (vi[x] != SIZE_MAX) {
                std::size_t ei = vi[x];
                use_count[ei] ^= 1;
                x = static_cast<std::size_t>(edges[ei].u) == x ? static_cast<std::size_t>(edges[ei].v)
                                                               : static_cast<std::size_t>(edges[ei].u);
            }
        }
    }

    TJoinResult res;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (in_base[i] ^ use_count[i]) {
            res.picked.push_back(i);
            res.cost += edges[i].w;
        }
    return res;
}

}  // namespace onecut
