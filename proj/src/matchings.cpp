#include "esos/matchings.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace esos {

BipartiteMatching max_bipartite_matching(int n_left, int n_right,
                                         const std::vector<Edge>& edges) {
    if (n_left < 0 || n_right < 0)
        throw Error("precondition", "part sizes must be nonnegative");
    std::vector<std::vector<int>> adj(n_left);
    for (const auto& [l, r] : edges) {
        if (l < 0 || l >= n_left || r < 0 || r >= n_right)
            throw Error("precondition", "edge endpoint out of range");
        adj[l].push_back(r);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    std::vector<int> match_l(n_left, -1), match_r(n_right, -1);
    std::vector<char> visited(n_right, 0);
    std::function<bool(int)> augment = [&](int l) {
        for (int r : adj[l]) {
            if (visited[r]) continue;
            visited[r] = 1;
            if (match_r[r] == -1 || augment(match_r[r])) {
                match_l[l] = r;
                match_r[r] = l;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < n_left; ++l) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(l);
    }

    std::vector<char> z_l(n_left, 0), z_r(n_right, 0);
    std::deque<int> q;
    for (int l = 0; l < n_left; ++l)
        if (match_l[l] == -1) {
            z_l[l] = 1;
            q.push_back(l);
        }
    while (!q.empty()) {
        int l = q.front();
        q.pop_front();
        for (int r : adj[l]) {
            if (match_l[l] == r || z_r[r]) continue;
            z_r[r] = 1;
            int l2 = match_r[r];
            if (l2 != -1 && !z_l[l2]) {
                z_l[l2] = 1;
                q.push_back(l2);
            }
        }
    }

    BipartiteMatching out;
    for (int l = 0; l < n_left; ++l) {
        if (match_l[l] != -1) out.matching.emplace_back(l, match_l[l]);
        if (!z_l[l]) out.cover_left.push_back(l);
    }
    for (int r = 0; r < n_right; ++r)
        if (z_r[r]) out.cover_right.push_back(r);
    if (out.cover_left.size() + out.cover_right.size() != out.matching.size())
        throw Error("internal", "cover size does not match matching size");
    return out;
}

std::vector<Edge> greedy_maximal_matching(const Graph& g) {
    std::vector<char> used(g.order(), 0);
    std::vector<Edge> m;
    for (const auto& [u, v] : g.edges()) {
        if (used[u] || used[v]) continue;
        used[u] = used[v] = 1;
        m.emplace_back(u, v);
    }
    return m;
}

KonigCover konig_cover(const Graph& g, const std::vector<int>& part_x,
                       const std::vector<int>& part_y) {
    std::vector<int> pos_x(g.order(), -1), pos_y(g.order(), -1);
    for (size_t i = 0; i < part_x.size(); ++i) {
        int v = part_x[i];
        if (v < 0 || v >= g.order() || pos_x[v] >= 0)
            throw Error("precondition", "part_x invalid");
        pos_x[v] = (int)i;
    }
    for (size_t i = 0; i < part_y.size(); ++i) {
        int v = part_y[i];
        if (v < 0 || v >= g.order() || pos_y[v] >= 0 || pos_x[v] >= 0)
            throw Error("precondition", "part_y invalid or overlapping part_x");
        pos_y[v] = (int)i;
    }
    std::vector<Edge> cross;
    for (auto [u, v] : g.edges()) {
        if (pos_x[u] >= 0 && pos_y[v] >= 0)
            cross.push_back({pos_x[u], pos_y[v]});
        else if (pos_y[u] >= 0 && pos_x[v] >= 0)
            cross.push_back({pos_x[v], pos_y[u]});
        else
            throw Error("precondition", "non-bipartite input: edge not crossing the parts");
    }
    auto bm = max_bipartite_matching((int)part_x.size(), (int)part_y.size(), cross);
    KonigCover out;
    for (auto [l, r] : bm.matching) out.matching.push_back({part_x[l], part_y[r]});
    std::sort(out.matching.begin(), out.matching.end());
    for (int l : bm.cover_left) out.cover.push_back(part_x[l]);
    for (int r : bm.cover_right) out.cover.push_back(part_y[r]);
    std::sort(out.cover.begin(), out.cover.end());
    return out;
}

HalfMatching fractional_matching(const Graph& g) {
    int n = g.order();
    // Double cover: left copy v0, right copy v1; every edge uv becomes
    // u0-v1 and v0-u1. An optimal integral matching there folds to an
    // optimal half-integral one here.
    std::vector<Edge> dc;
    for (const auto& [u, v] : g.edges()) {
        dc.emplace_back(u, v);
        dc.emplace_back(v, u);
    }
    BipartiteMatching bm = max_bipartite_matching(n, n, dc);

    std::vector<int> match_l(n, -1);
    for (const auto& [l, r] : bm.matching) match_l[l] = r;

    HalfMatching out;
    std::vector<Rat> load(n, Rat(0));
    for (const auto& [u, v] : g.edges()) {
        int hits = (match_l[u] == v) + (match_l[v] == u);
        if (hits == 0) continue;
        Rat w(hits, 2);
        out.weights.push_back({{u, v}, w});
        load[u] = load[u] + w;
        load[v] = load[v] + w;
    }
    for (int v = 0; v < n; ++v)
        if (load[v] > Rat(1)) throw Error("internal", "folded matching overloads a vertex");

    out.value = Rat((long long)bm.matching.size(), 2);
    std::vector<char> cl(n, 0), cr(n, 0);
    for (int l : bm.cover_left) cl[l] = 1;
    for (int r : bm.cover_right) cr[r] = 1;
    out.cover.assign(n, Rat(0));
    Rat cover_total(0);
    for (int v = 0; v < n; ++v) {
        out.cover[v] = Rat(cl[v] + cr[v], 2);
        cover_total = cover_total + out.cover[v];
    }
    for (const auto& [u, v] : g.edges())
        if (out.cover[u] + out.cover[v] < Rat(1))
            throw Error("internal", "folded cover misses an edge");
    if (cover_total != out.value)
        throw Error("internal", "duality gap between folded matching and cover");
    return out;
}

std::vector<HalfPair> matching_from_fractional(const Graph& g, const HalfMatching& fm) {
    int n = g.order();
    std::vector<Rat> load(n, Rat(0));
    std::vector<std::vector<int>> half_adj(n);
    std::vector<Edge> whole;
    for (const auto& [e, w] : fm.weights) {
        auto [u, v] = e;
        if (!g.has_edge(u, v)) throw Error("precondition", "matching uses a non-edge");
        if (w != Rat(1) && w != Rat(1, 2))
            throw Error("precondition", "matching weights must be 1/2 or 1");
        load[u] = load[u] + w;
        load[v] = load[v] + w;
        if (w == Rat(1)) {
            whole.emplace_back(u, v);
        } else {
            half_adj[u].push_back(v);
            half_adj[v].push_back(u);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (load[v] > Rat(1)) throw Error("precondition", "matching overloads a vertex");
        std::sort(half_adj[v].begin(), half_adj[v].end());
    }

    std::vector<HalfPair> pairs;
    std::sort(whole.begin(), whole.end());
    for (const auto& [u, v] : whole) {
        pairs.push_back({u, 0, v, 1});
        pairs.push_back({u, 1, v, 0});
    }

    // Half-weight edges form disjoint paths and cycles. Orient each path from
    // its lowest-index endpoint and each cycle from its lowest vertex toward
    // that vertex's lowest neighbor; a directed edge u->w pairs u's plus half
    // with w's minus half.
    std::set<Edge> unused;
    for (int v = 0; v < n; ++v)
        for (int w : half_adj[v])
            if (v < w) unused.insert({v, w});
    auto walk = [&](int start) {
        int cur = start;
        for (;;) {
            int next = -1;
            for (int w : half_adj[cur]) {
                Edge e{std::min(cur, w), std::max(cur, w)};
                if (unused.count(e)) {
                    next = w;
                    unused.erase(e);
                    break;
                }
            }
            if (next == -1) return;
            pairs.push_back({cur, 1, next, 0});
            cur = next;
        }
    };
    auto has_unused = [&](int v) {
        for (int w : half_adj[v])
            if (unused.count({std::min(v, w), std::max(v, w)})) return true;
        return false;
    };
    for (int v = 0; v < n; ++v)
        if (half_adj[v].size() == 1) walk(v);
    for (int v = 0; v < n; ++v)
        while (has_unused(v)) walk(v);

    std::set<std::pair<int, int>> seen;
    for (const auto& p : pairs) {
        if (!seen.insert({p.u, p.u_half}).second || !seen.insert({p.v, p.v_half}).second)
            throw Error("internal", "half vertex paired twice");
    }
    Rat doubled = fm.value * Rat(2);
    if (!doubled.is_integer() || (long long)pairs.size() != doubled.num())
        throw Error("internal", "pair count differs from twice the matching value");
    return pairs;
}

StarsOrMatching stars_or_matching(const Graph& g, int d, int delta) {
    int n = g.order();
    if (d < 1 || delta < 1) throw Error("precondition", "d and delta must be positive");
    if ((long long)n < 10LL * delta * d)
        throw Error("hypothesis", "need |G| >= 10*delta*d, got " + std::to_string(n));
    if (g.min_degree() < d)
        throw Error("hypothesis", "need min degree >= d, got " + std::to_string(g.min_degree()));

    struct Node {
        int star = -1;
        bool center = false;
    };
    std::vector<Node> nd(n);
    std::vector<Star> stars;
    auto edges_of = [&](int s) { return (int)stars[s].leaves.size(); };
    auto make_star = [&](int c, int leaf) {
        nd[c] = {(int)stars.size(), true};
        nd[leaf] = {(int)stars.size(), false};
        stars.push_back({c, {leaf}});
    };

    long long guard = (long long)n * n + 16;
    for (;;) {
        if (--guard < 0) throw Error("internal", "exchange loop exceeded its move bound");
        bool moved = false;

        for (int u = 0; u < n && !moved; ++u) {
            if (nd[u].star != -1) continue;
            for (int w : g.neighbors(u)) {
                if (nd[w].star != -1) continue;
                make_star(u, w);
                moved = true;
                break;
            }
        }
        if (moved) continue;

        for (int l = 0; l < n && !moved; ++l) {
            int s = nd[l].star;
            if (s == -1 || nd[l].center || edges_of(s) < 2) continue;
            for (int w : g.neighbors(l)) {
                if (nd[w].star != -1) continue;
                auto& lv = stars[s].leaves;
                lv.erase(std::find(lv.begin(), lv.end(), l));
                make_star(l, w);
                moved = true;
                break;
            }
        }
        if (moved) continue;

        for (int v = 0; v < n && !moved; ++v) {
            int s = nd[v].star;
            if (s == -1) continue;
            int e = edges_of(s);
            if (e >= 2 * delta) continue;
            if (!nd[v].center && e != 1) continue;
            for (int w : g.neighbors(v)) {
                if (nd[w].star != -1) continue;
                if (nd[v].center) {
                    stars[s].leaves.push_back(w);
                    nd[w] = {s, false};
                } else {
                    int old_center = stars[s].center;
                    stars[s].center = v;
                    stars[s].leaves = {old_center, w};
                    nd[v].center = true;
                    nd[old_center].center = false;
                    nd[w] = {s, false};
                }
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }

    std::vector<int> big;
    for (int s = 0; s < (int)stars.size(); ++s)
        if (edges_of(s) >= delta) big.push_back(s);
    std::sort(big.begin(), big.end(),
              [&](int a, int b) { return stars[a].center < stars[b].center; });

    StarsOrMatching out;
    if ((int)big.size() >= d) {
        out.is_stars = true;
        for (int i = 0; i < d; ++i) {
            Star st = stars[big[i]];
            std::sort(st.leaves.begin(), st.leaves.end());
            st.leaves.resize(delta);
            out.stars.push_back(st);
        }
        return out;
    }
    if ((int)stars.size() >= 5 * d) {
        std::vector<Edge> m;
        for (const auto& st : stars) {
            int leaf = *std::min_element(st.leaves.begin(), st.leaves.end());
            m.emplace_back(std::min(st.center, leaf), std::max(st.center, leaf));
        }
        std::sort(m.begin(), m.end());
        m.resize(5 * d);
        out.matching = m;
        return out;
    }
    throw Error("internal", "exchange loop stalled below both targets");
}

}  // namespace esos
