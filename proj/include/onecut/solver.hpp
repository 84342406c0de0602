#pragma once

#include <array>
#include <atomic>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "onecut/graph.hpp"
#include "onecut/instance.hpp"
#include "onecut/planar.hpp"

namespace onecut {

enum class Mode { NonNegative, General };

struct SolveStats {
    long long leaf_count = 0;        // planar kernel evaluations
    long long infeasible_leaves = 0; // kernel calls with no feasible cut
    long long pruned_branches = 0;   // branches refuted before recursion
    int max_depth = 0;
    std::array<long long, 3> branch_selected{0, 0, 0};

    void merge(const SolveStats& o) {
        leaf_count += o.leaf_count;
        infeasible_leaves += o.infeasible_leaves;
        pruned_branches += o.pruned_branches;
        max_depth = std::max(max_depth, o.max_depth);
        for (int i = 0; i < 3; ++i) branch_selected[static_cast<std::size_t>(i)] += o.branch_selected[static_cast<std::size_t>(i)];
    }
};

/// Deterministic labels for the crossing chosen at a branching step: the
/// crossing whose smaller edge id is minimal; within it the smaller edge id
/// plays e_vy and the larger e_wz; y and w are the smaller endpoints of
/// their edges.
struct CrossingLabels {
    std::size_t crossing_index = 0;
    EdgeId e_vy = -1, e_wz = -1;
    NodeId v = -1, y = -1, w = -1, z = -1;
};

inline CrossingLabels label_crossing(const EmbeddedInstance& inst) {
    const auto& list = inst.crossings.list;
    std::size_t pick = 0;
    for (std::size_t i = 1; i < list.size(); ++i)
        if (list[i].first < list[pick].first) pick = i;
    CrossingLabels lab;
    lab.crossing_index = pick;
    lab.e_vy = list[pick].first;
    lab.e_wz = list[pick].second;
    const Edge& a = inst.graph.edge(lab.e_vy);
    const Edge& b = inst.graph.edge(lab.e_wz);
    lab.y = std::min(a.u, a.v);
    lab.v = a.other(lab.y);
    lab.w = std::min(b.u, b.v);
    lab.z = b.other(lab.w);
    return lab;
}

/// Index of the best lifted candidate, earliest branch winning ties;
/// -1 when every branch came back empty.
inline int select_candidate(const std::array<std::optional<Cut>, 3>& lifted) {
    int best = -1;
    for (int i = 0; i < 3; ++i)
        if (lifted[static_cast<std::size_t>(i)] &&
            (best < 0 || lifted[static_cast<std::size_t>(i)]->value > lifted[static_cast<std::size_t>(best)]->value))
            best = i;
    return best;
}

/// Third branch of the general algorithm: drop e_wz, then pin both of its
/// endpoints opposite to y. Zero-weight edges back the new pins when the
/// graph lacks them, keeping every pinned pair an actual edge.
struct Branch3 {
    EmbeddedInstance instance;
    FixedCutSet forced;
};

inline Branch3 make_branch3_general(const EmbeddedInstance& inst, const FixedCutSet& forced,
                                    const CrossingLabels& lab) {
    Branch3 out;
    out.instance.graph = delete_edge(inst.graph, lab.e_wz);
    for (std::size_t i = 0; i < inst.crossings.list.size(); ++i)
        if (i != lab.crossing_index) out.instance.crossings.list.push_back(inst.crossings.list[i]);
    if (!out.instance.graph.find_edge(lab.w, lab.y)) out.instance.graph.add_edge(lab.w, lab.y, 0);
    if (!out.instance.graph.find_edge(lab.y, lab.z)) out.instance.graph.add_edge(lab.y, lab.z, 0);
    out.forced = forced;
    out.forced.insert(lab.w, lab.y);
    out.forced.insert(lab.y, lab.z);
    return out;
}

namespace detail {

struct ChildOut {
    std::optional<Cut> cut;
    SolveStats stats;
};

/// Canonical result form: flip side_S inside any component whose lowest
/// node landed in it. Per-component flips change neither value nor any
/// separation, and make the reported side deterministic.
inline std::vector<NodeId> normalize_side(const WeightedGraph& g, const std::vector<NodeId>& side) {
    std::map<NodeId, NodeId> root;  // node -> lowest node of its component
    for (NodeId s : g.nodes()) {     // ascending, so s is its component's minimum
        if (root.count(s)) continue;
        std::vector<NodeId> stack{s};
        root[s] = s;
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (EdgeId eid : g.incident(x)) {
                NodeId y = g.edge(eid).other(x);
                if (!root.count(y)) {
                    root[y] = s;
                    stack.push_back(y);
                }
            }
        }
    }
    std::set<NodeId> in(side.begin(), side.end());
    std::set<NodeId> flipped_roots;
    for (NodeId x : side)
        if (root.at(x) == x) flipped_roots.insert(x);
    std::vector<NodeId> out;
    for (NodeId x : g.nodes()) {
        bool member = in.count(x) != 0;
        if (flipped_roots.count(root.at(x))) member = !member;
        if (member) out.push_back(x);
    }
    return out;
}

inline bool separates(const std::vector<NodeId>& side, NodeId a, NodeId b) {
    auto in = [&](NodeId x) { return std::binary_search(side.begin(), side.end(), x); };
    return in(a) != in(b);
}

inline ChildOut solve_rec(const EmbeddedInstance& inst, const FixedCutSet& forced, Mode mode,
                          int depth, std::atomic<int>* budget) {
    ChildOut out;
    out.stats.max_depth = depth;
    if (inst.crossings.empty()) {
        out.stats.leaf_count = 1;
        out.cut = fce_max_cut_planar(inst.graph, forced);
        if (!out.cut) out.stats.infeasible_leaves = 1;
        return out;
    }

    const CrossingLabels lab = label_crossing(inst);
    const Weight c_wz = inst.graph.edge(lab.e_wz).w;
    const NodeId w = lab.w, y = lab.y, z = lab.z;

    auto contract_branch = [&, mode, depth](NodeId a, NodeId b) -> ChildOut {
        if (mode == Mode::General && forced.contains(a, b)) {
            ChildOut pruned;
            pruned.stats.max_depth = depth;
            pruned.stats.pruned_branches = 1;
            return pruned;
        }
        auto [g2, rec] = contract(inst.graph, a, b);
        EmbeddedInstance child;
        child.graph = std::move(g2);
        child.crossings = update_crossings(inst.crossings, rec);
        FixedCutSet forced2 = mode == Mode::General ? forced.remap(rec) : FixedCutSet{};
        ChildOut r = solve_rec(child, forced2, mode, depth + 1, budget);
        if (r.cut) r.cut = Cut{split(r.cut->side_S, rec), r.cut->value};
        return r;
    };

    auto branch3 = [&, mode, depth]() -> ChildOut {
        if (mode == Mode::General && forced.contains(w, z)) {
            // Forcing w opposite z contradicts this branch's shape; with the
            // backing edge e_wz gone the pin would also dangle.
            ChildOut pruned;
            pruned.stats.max_depth = depth;
            pruned.stats.pruned_branches = 1;
            return pruned;
        }
        EmbeddedInstance child;
        FixedCutSet forced3;
        if (mode == Mode::General) {
            Branch3 b3 = make_branch3_general(inst, forced, lab);
            child = std::move(b3.instance);
            forced3 = std::move(b3.forced);
        } else {
            child.graph = delete_edge(inst.graph, lab.e_wz);
            for (std::size_t i = 0; i < inst.crossings.list.size(); ++i)
                if (i != lab.crossing_index) child.crossings.list.push_back(inst.crossings.list[i]);
        }
        ChildOut r = solve_rec(child, forced3, mode, depth + 1, budget);
        if (r.cut) {
            Weight lifted = r.cut->value + (separates(r.cut->side_S, w, z) ? c_wz : 0);
            r.cut = Cut{r.cut->side_S, lifted};
        }
        return r;
    };

    std::array<std::function<ChildOut()>, 3> jobs = {
        [&] { return contract_branch(w, y); },
        [&] { return contract_branch(y, z); },
        [&] { return branch3(); },
    };
    std::array<ChildOut, 3> results;
    std::array<std::future<ChildOut>, 3> futs;
    for (std::size_t i = 0; i < 3; ++i) {
        bool spawn = false;
        if (budget && budget->fetch_sub(1) > 0)
            spawn = true;
        else if (budget)
            budget->fetch_add(1);
        if (spawn)
            futs[i] = std::async(std::launch::async, jobs[i]);
        else
            results[i] = jobs[i]();
    }
    for (std::size_t i = 0; i < 3; ++i)
        if (futs[i].valid()) {
            results[i] = futs[i].get();
            budget->fetch_add(1);
        }

    std::array<std::optional<Cut>, 3> lifted;
    for (std::size_t i = 0; i < 3; ++i) {
        out.stats.merge(results[i].stats);
        lifted[i] = std::move(results[i].cut);
    }
    int pick = select_candidate(lifted);
    if (pick >= 0) {
        out.stats.branch_selected[static_cast<std::size_t>(pick)] += 1;
        out.cut = std::move(lifted[static_cast<std::size_t>(pick)]);
    }
    return out;
}

}  // namespace detail

/// Exact maximum cut of a 1-planar instance with non-negative weights.
inline Cut max_cut_nonneg(const EmbeddedInstance& inst, SolveStats* stats = nullptr, int threads = 1) {
    for (const Edge& e : inst.graph.edges())
        if (e.w < 0)
            throw GraphError(GraphError::Kind::NegativeWeight,
                             "non-negative mode rejects negative edge weights");
    std::atomic<int> budget{threads - 1};
    detail::ChildOut r =
        detail::solve_rec(inst, FixedCutSet{}, Mode::NonNegative, 0, threads > 1 ? &budget : nullptr);
    if (stats) *stats = r.stats;
    return Cut{detail::normalize_side(inst.graph, r.cut->side_S), r.cut->value};
}

/// Exact maximum cut with arbitrary weights among cuts separating every
/// forced pair; each forced pair must be an edge. When no cut separates
/// them all, the empty sentinel cut of value 0 comes back; with a nonempty
/// forced set the sentinel is recognizable because it separates nothing.
inline Cut max_cut_general(const EmbeddedInstance& inst, const FixedCutSet& forced,
                           SolveStats* stats = nullptr, int threads = 1) {
    for (auto [a, b] : forced.pairs())
        if (!inst.graph.find_edge(a, b))
            throw GraphError(GraphError::Kind::EdgeNotFound, "forced pair is not an edge");
    std::atomic<int> budget{threads - 1};
    detail::ChildOut r =
        detail::solve_rec(inst, forced, Mode::General, 0, threads > 1 ? &budget : nullptr);
    if (stats) *stats = r.stats;
    if (!r.cut) return Cut{{}, 0};
    return Cut{detail::normalize_side(inst.graph, r.cut->side_S), r.cut->value};
}

}  // namespace onecut
