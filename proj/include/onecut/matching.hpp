#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "onecut/errors.hpp"
#include "onecut/graph.hpp"

namespace onecut {

/// Wide accumulator for dual labels and shifted weights. Doubling the input
/// weights keeps every dual value integral, and the shift used by the
/// perfect-matching wrapper can push doubled values past 2^63.
using BigWeight = __int128;

/// Dense O(n^3) maximum weight matching (general graphs, blossoms).
/// Weights enter via a symmetric matrix; entries <= 0 mean "no edge", which
/// is harmless for a maximum: non-positive edges never improve it.
class BlossomMatcher {
public:
    explicit BlossomMatcher(int n, const std::vector<std::vector<Weight>>& w) : n_(n) {
        int cap = 2 * n_ + 2;
        g_.assign(static_cast<std::size_t>(cap), std::vector<Arc>(static_cast<std::size_t>(cap)));
        lab_.assign(static_cast<std::size_t>(cap), 0);
        match_.assign(static_cast<std::size_t>(cap), 0);
        slack_.assign(static_cast<std::size_t>(cap), 0);
        st_.assign(static_cast<std::size_t>(cap), 0);
        pa_.assign(static_cast<std::size_t>(cap), 0);
        s_.assign(static_cast<std::size_t>(cap), -1);
        vis_.assign(static_cast<std::size_t>(cap), 0);
        flower_.assign(static_cast<std::size_t>(cap), {});
        flower_from_.assign(static_cast<std::size_t>(cap), std::vector<int>(static_cast<std::size_t>(n_ + 1), 0));
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v) {
                Weight raw = w[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)];
                BigWeight doubled = raw > 0 ? BigWeight(raw) * 2 : 0;
                g_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = Arc{u, v, doubled};
            }
    }

    /// Runs the search to optimality. mate is 0-based, -1 for unmatched;
    /// total is the undoubled matched weight.
    void solve() {
        n_x_ = n_;
        BigWeight w_max = 0;
        for (int u = 0; u <= n_; ++u) {
            st_[static_cast<std::size_t>(u)] = u;
            flower_[static_cast<std::size_t>(u)].clear();
        }
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v) {
                flower_from_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = (u == v ? u : 0);
                w_max = std::max(w_max, g_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)].w);
            }
        for (int u = 1; u <= n_; ++u) lab_[static_cast<std::size_t>(u)] = w_max;
        while (phase()) {
        }
    }

    std::vector<int> mate() const {
        std::vector<int> m(static_cast<std::size_t>(n_), -1);
        for (int u = 1; u <= n_; ++u)
            if (match_[static_cast<std::size_t>(u)]) m[static_cast<std::size_t>(u - 1)] = match_[static_cast<std::size_t>(u)] - 1;
        return m;
    }

    BigWeight total() const {
        BigWeight t = 0;
        for (int u = 1; u <= n_; ++u)
            if (match_[static_cast<std::size_t>(u)] && match_[static_cast<std::size_t>(u)] < u)
                t += g_[static_cast<std::size_t>(u)][static_cast<std::size_t>(match_[static_cast<std::size_t>(u)])].w;
        return t / 2;
    }

private:
    struct Arc {
        int u = 0, v = 0;
        BigWeight w = 0;
    };

    static constexpr BigWeight kInf = BigWeight(1) << 100;

    Arc& arc(int a, int b) { return g_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

    BigWeight dist(const Arc& e) {
        return lab_[static_cast<std::size_t>(e.u)] + lab_[static_cast<std::size_t>(e.v)] - arc(e.u, e.v).w;
    }

    void update_slack(int u, int x) {
        if (!slack_[static_cast<std::size_t>(x)] || dist(arc(u, x)) < dist(arc(slack_[static_cast<std::size_t>(x)], x)))
            slack_[static_cast<std::size_t>(x)] = u;
    }

    void set_slack(int x) {
        slack_[static_cast<std::size_t>(x)] = 0;
        for (int u = 1; u <= n_; ++u)
            if (arc(u, x).w > 0 && st_[static_cast<std::size_t>(u)] != x && s_[static_cast<std::size_t>(st_[static_cast<std::size_t>(u)])] == 0)
                update_slack(u, x);
    }

    void q_push(int x) {
        if (x <= n_) {
            q_.push_back(x);
            return;
        }
        for (int y : flower_[static_cast<std::size_t>(x)]) q_push(y);
    }

    void set_st(int x, int b) {
        st_[static_cast<std::size_t>(x)] = b;
        if (x > n_)
            for (int y : flower_[static_cast<std::size_t>(x)]) set_st(y, b);
    }

    /// Position of sub-blossom xr inside flower b, re-orienting the cycle so
    /// the stem prefix has even length.
    int get_pr(int b, int xr) {
        auto& f = flower_[static_cast<std::size_t>(b)];
        int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
        if (pr % 2 == 1) {
            std::reverse(f.begin() + 1, f.end());
            return static_cast<int>(f.size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[static_cast<std::size_t>(u)] = arc(u, v).v;
        if (u <= n_) return;
        Arc e = arc(u, v);
        int xr = flower_from_[static_cast<std::size_t>(u)][static_cast<std::size_t>(e.u)];
        int pr = get_pr(u, xr);
        auto& f = flower_[static_cast<std::size_t>(u)];
        for (int i = 0; i < pr; ++i) set_match(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i ^ 1)]);
        set_match(xr, v);
        std::rotate(f.begin(), f.begin() + pr, f.end());
    }

    void augment(int u, int v) {
        for (;;) {
            int xnv = st_[static_cast<std::size_t>(match_[static_cast<std::size_t>(u)])];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st_[static_cast<std::size_t>(pa_[static_cast<std::size_t>(xnv)])]);
            u = st_[static_cast<std::size_t>(pa_[static_cast<std::size_t>(xnv)])];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        ++timer_;
        while (u || v) {
            if (u) {
                if (vis_[static_cast<std::size_t>(u)] == timer_) return u;
                vis_[static_cast<std::size_t>(u)] = timer_;
                u = st_[static_cast<std::size_t>(match_[static_cast<std::size_t>(u)])];
                if (u) u = st_[static_cast<std::size_t>(pa_[static_cast<std::size_t>(u)])];
            }
            std::swap(u, v);
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[static_cast<std::size_t>(b)]) ++b;
        if (b > n_x_) ++n_x_;
        lab_[static_cast<std::size_t>(b)] = 0;
        s_[static_cast<std::size_t>(b)] = 0;
        match_[static_cast<std::size_t>(b)] = match_[static_cast<std::size_t>(lca)];
        auto& f = flower_[static_cast<std::size_t>(b)];
        f.clear();
        f.push_back(lca);
        for (int x = u, y; x != lca; x = st_[static_cast<std::size_t>(pa_[static_cast<std::size_t>(y)])]) {
            f.push_back(x);
            y = st_[static_cast<std::size_t>(match_[static_cast<std::size_t>(x)])];
            f.push_back(y);
            q_push(y);
        }
        std::reverse(f.begin() + 1, f.end());
        for (int x = v, y; x != lca; x = st_[static_cast<std::size_t>(pa_[static_cast<std::size_t>(y)])]) {
            f.push_back(x);
            y = st_[static_cast<std::size_t>(match_[static_cast<std::size_t>(x)])];
            f.push_back(y);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) arc(b, x).w = arc(x, b).w = 0;
        for (int x = 1; x <= n_; ++x) flower_from_[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)] = 0;
        for (int xs : f) {
            for (int x = 1; x <= n_x_; ++x)
                if (arc(b, x).w == 0 || dist(arc(xs, x)) < dist(arc(b, x))) {
                    arc(b, x) = arc(xs, x);
                    arc(x, b) = arc(x, xs);
                }
            for (int x = 1; x <= n_; ++x)
                if (flower_from_[static_cast<std::size_t>(xs)][static_cast<std::size_t>(x)])
                    flower_from_[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)] = xs;
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        auto& f = flower_[static_cast<std::size_t>(b)];
        for (int y : f) set_st(y, y);
        int xr = flower_from_[static_cast<std::size_t>(b)][static_cast<std::size_t>(arc(b, pa_[static_cast<std::size_t>(b)]).u)];
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = f[static_cast<std::size_t>(i)];
            int xns = f[static_cast<std::size_t>(i + 1)];
            pa_[static_cast<std::size_t>(xs)] = arc(xns, xs).u;
            s_[static_cast<std::size_t>(xs)] = 1;
            s_[static_cast<std::size_t>(xns)] = 0;
            slack_[static_cast<std::size_t>(xs)] = 0;
            set_slack(xns);
            q_push(xns);
        }
        s_[static_cast<std::size_t>(xr)] = 1;
        pa_[static_cast<std::size_t>(xr)] = pa_[static_cast<std::size_t>(b)];
        for (std::size_t i = static_cast<std::size_t>(pr) + 1; i < f.size(); ++i) {
            int xs = f[i];
            s_[static_cast<std::size_t>(xs)] = -1;
            set_slack(xs);
        }
        st_[static_cast<std::size_t>(b)] = 0;
    }

    bool on_found_edge(const Arc& e) {
        int u = st_[static_cast<std::size_t>(e.u)];
        int v = st_[static_cast<std::size_t>(e.v)];
        if (s_[static_cast<std::size_t>(v)] == -1) {
            pa_[static_cast<std::size_t>(v)] = e.u;
            s_[static_cast<std::size_t>(v)] = 1;
            int nu = st_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
            slack_[static_cast<std::size_t>(v)] = slack_[static_cast<std::size_t>(nu)] = 0;
            s_[static_cast<std::size_t>(nu)] = 0;
            q_push(nu);
        } else if (s_[static_cast<std::size_t>(v)] == 0) {
            int lca = get_lca(u, v);
            if (!lca) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool phase() {
        std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
        q_.clear();
        for (int x = 1; x <= n_x_; ++x)
            if (st_[static_cast<std::size_t>(x)] == x && !match_[static_cast<std::size_t>(x)]) {
                pa_[static_cast<std::size_t>(x)] = 0;
                s_[static_cast<std::size_t>(x)] = 0;
                q_push(x);
            }
        if (q_.empty()) return false;
        for (;;) {
            while (!q_.empty()) {
                int u = q_.front();
                q_.pop_front();
                if (s_[static_cast<std::size_t>(st_[static_cast<std::size_t>(u)])] == 1) continue;
                for (int v = 1; v <= n_; ++v)
                    if (arc(u, v).w > 0 && st_[static_cast<std::size_t>(u)] != st_[static_cast<std::size_t>(v)]) {
                        if (dist(arc(u, v)) == 0) {
                            if (on_found_edge(arc(u, v))) return true;
                        } else {
                            update_slack(u, st_[static_cast<std::size_t>(v)]);
                        }
                    }
            }
            BigWeight d = kInf;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[static_cast<std::size_t>(b)] == b && s_[static_cast<std::size_t>(b)] == 1)
                    d = std::min(d, lab_[static_cast<std::size_t>(b)] / 2);
            for (int x = 1; x <= n_x_; ++x)
                if (st_[static_cast<std::size_t>(x)] == x && slack_[static_cast<std::size_t>(x)]) {
                    if (s_[static_cast<std::size_t>(x)] == -1)
                        d = std::min(d, dist(arc(slack_[static_cast<std::size_t>(x)], x)));
                    else if (s_[static_cast<std::size_t>(x)] == 0)
                        d = std::min(d, dist(arc(slack_[static_cast<std::size_t>(x)], x)) / 2);
                }
            for (int u = 1; u <= n_; ++u) {
                int root = st_[static_cast<std::size_t>(u)];
                if (s_[static_cast<std::size_t>(root)] == 0) {
                    if (lab_[static_cast<std::size_t>(u)] <= d) return false;
                    lab_[static_cast<std::size_t>(u)] -= d;
                } else if (s_[static_cast<std::size_t>(root)] == 1) {
                    lab_[static_cast<std::size_t>(u)] += d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[static_cast<std::size_t>(b)] == b) {
                    if (s_[static_cast<std::size_t>(b)] == 0)
                        lab_[static_cast<std::size_t>(b)] += d * 2;
                    else if (s_[static_cast<std::size_t>(b)] == 1)
                        lab_[static_cast<std::size_t>(b)] -= d * 2;
                }
            q_.clear();
            for (int x = 1; x <= n_x_; ++x)
                if (st_[static_cast<std::size_t>(x)] == x && slack_[static_cast<std::size_t>(x)] &&
                    st_[static_cast<std::size_t>(slack_[static_cast<std::size_t>(x)])] != x &&
                    dist(arc(slack_[static_cast<std::size_t>(x)], x)) == 0)
                    if (on_found_edge(arc(slack_[static_cast<std::size_t>(x)], x))) return true;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[static_cast<std::size_t>(b)] == b && s_[static_cast<std::size_t>(b)] == 1 && lab_[static_cast<std::size_t>(b)] == 0)
                    expand_blossom(b);
        }
    }

    int n_;
    int n_x_ = 0;
    int timer_ = 0;
    std::vector<std::vector<Arc>> g_;
    std::vector<BigWeight> lab_;
    std::vector<int> match_, slack_, st_, pa_, s_, vis_;
    std::vector<std::vector<int>> flower_;
    std::vector<std::vector<int>> flower_from_;
    std::deque<int> q_;
};

struct MatchingResult {
    std::vector<int> mate;  // 0-based partner per node, -1 if unmatched
    BigWeight total = 0;
};

/// Maximum weight matching on the graph described by a symmetric matrix;
/// entries <= 0 mean no edge.
inline MatchingResult maximum_weight_matching(int n, const std::vector<std::vector<Weight>>& w) {
    if (n <= 0) return {};
    BlossomMatcher m(n, w);
    m.solve();
    return MatchingResult{m.mate(), m.total()};
}

/// Minimum weight perfect matching on a complete even-order graph: shift
/// every cost to a positive reward, then a maximum weight matching must be
/// perfect and its reward-optimal choice minimizes the original cost sum.
inline MatchingResult min_weight_perfect_matching(int n, const std::vector<std::vector<Weight>>& cost) {
    if (n % 2 != 0)
        throw GraphError(GraphError::Kind::Unsatisfiable, "perfect matching needs an even node count");
    if (n == 0) return {};
    Weight d_max = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) d_max = std::max(d_max, cost[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
    std::vector<std::vector<Weight>> reward(static_cast<std::size_t>(n), std::vector<Weight>(static_cast<std::size_t>(n), 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                reward[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                    d_max - cost[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] + 1;
    BlossomMatcher m(n, reward);
    m.solve();
    MatchingResult res;
    res.mate = m.mate();
    for (int u = 0; u < n; ++u) {
        int v = res.mate[static_cast<std::size_t>(u)];
        if (v < 0)
            throw GraphError(GraphError::Kind::Unsatisfiable, "matching failed to cover every node");
        if (u < v) res.total += cost[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    }
    return res;
}

}  // namespace onecut
