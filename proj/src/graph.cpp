#include "esos/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace esos {

Graph Graph::empty(int n) {
    if (n < 0) throw Error("precondition", "graph order must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.resize(n);
    g.labels_.resize(n);
    std::iota(g.labels_.begin(), g.labels_.end(), 0);
    return g;
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    Graph g = Graph::empty(n);
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("precondition", "edge endpoint out of range: (" + std::to_string(u) +
                                             "," + std::to_string(v) + ")");
        if (u == v) throw Error("precondition", "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw Error("precondition", "duplicate edge (" + std::to_string(edges[i].first) +
                                             "," + std::to_string(edges[i].second) + ")");
    g.edges_ = std::move(edges);
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int w = (&a == &adj_[u]) ? v : u;
    return std::binary_search(a.begin(), a.end(), w);
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

long long Graph::edges_between(const std::vector<int>& s, const std::vector<int>& t) const {
    std::vector<char> in_s(n_, 0), in_t(n_, 0);
    for (int v : s) in_s[v] = 1;
    for (int v : t) in_t[v] = 1;
    long long count = 0;
    for (auto [u, v] : edges_)
        if ((in_s[u] && in_t[v]) || (in_s[v] && in_t[u])) ++count;
    return count;
}

long long Graph::edges_within(const std::vector<int>& s) const {
    std::vector<char> in_s(n_, 0);
    for (int v : s) in_s[v] = 1;
    long long count = 0;
    for (auto [u, v] : edges_)
        if (in_s[u] && in_s[v]) ++count;
    return count;
}

Graph Graph::induced(std::vector<int> verts) const {
    std::sort(verts.begin(), verts.end());
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= n_)
            throw Error("precondition", "induced: vertex out of range");
        if (i > 0 && verts[i] == verts[i - 1])
            throw Error("precondition", "induced: duplicate vertex");
    }
    std::vector<int> local(n_, -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = (int)i;
    std::vector<Edge> sub;
    for (auto [u, v] : edges_)
        if (local[u] >= 0 && local[v] >= 0)
            sub.push_back({std::min(local[u], local[v]), std::max(local[u], local[v])});
    Graph g = Graph::from_edges((int)verts.size(), std::move(sub));
    for (size_t i = 0; i < verts.size(); ++i) g.labels_[i] = labels_[verts[i]];
    return g;
}

Graph Graph::without_edges(const std::vector<Edge>& removed) const {
    std::vector<Edge> canon = removed;
    for (auto& [u, v] : canon)
        if (u > v) std::swap(u, v);
    std::sort(canon.begin(), canon.end());
    std::vector<Edge> kept;
    for (auto e : edges_)
        if (!std::binary_search(canon.begin(), canon.end(), e)) kept.push_back(e);
    Graph g = Graph::from_edges(n_, std::move(kept));
    g.labels_ = labels_;
    return g;
}

Graph Graph::with_extra_edges(const std::vector<Edge>& added) const {
    std::vector<Edge> all = edges_;
    all.insert(all.end(), added.begin(), added.end());
    Graph g = Graph::from_edges(n_, std::move(all));
    g.labels_ = labels_;
    return g;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        int id = (int)out.size();
        out.push_back({});
        std::deque<int> q{s};
        comp[s] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            out[id].push_back(u);
            for (int w : adj_[u])
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

std::vector<int> Graph::bfs_order(int root) const {
    std::vector<int> order;
    std::vector<char> seen(n_, 0);
    std::deque<int> q{root};
    seen[root] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        order.push_back(u);
        for (int w : adj_[u])
            if (!seen[w]) {
                seen[w] = 1;
                q.push_back(w);
            }
    }
    return order;
}

std::vector<int> Graph::distances_from(int root) const {
    std::vector<int> dist(n_, -1);
    std::deque<int> q{root};
    dist[root] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : adj_[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

std::vector<uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw Error("cap", "adjacency_masks limited to 64 vertices");
    std::vector<uint64_t> m(n_, 0);
    for (auto [u, v] : edges_) {
        m[u] |= (uint64_t)1 << v;
        m[v] |= (uint64_t)1 << u;
    }
    return m;
}

Rat edge_ratio(long long edges, long long denom) {
    if (denom == 0) throw Error("internal", "edge_ratio: zero denominator");
    return Rat(edges, denom);
}

Graph min_degree_subgraph(const Graph& g, const Rat& x) {
    if (x < Rat(0)) throw Error("precondition", "x must be nonnegative");
    if (Rat(g.edge_count()) < x * Rat(g.order()))
        throw Error("precondition", "insufficient density: e(G) < x*|G|");
    std::vector<char> alive(g.order(), 1);
    std::vector<int> deg(g.order());
    for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
    int remaining = g.order();
    for (;;) {
        int victim = -1;
        for (int v = 0; v < g.order(); ++v)
            if (alive[v] && Rat(deg[v]) <= x) {
                victim = v;
                break;
            }
        if (victim < 0) break;
        alive[victim] = 0;
        --remaining;
        for (int w : g.neighbors(victim))
            if (alive[w]) --deg[w];
    }
    if (remaining == 0)
        throw Error("precondition", "insufficient density: peeling emptied the graph");
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (alive[v]) keep.push_back(v);
    return g.induced(keep);
}

Graph densest_component(const Graph& g) {
    if (g.order() == 0) throw Error("precondition", "densest_component: empty graph");
    auto comps = g.components();
    size_t best = 0;
    Rat best_ratio(-1);
    for (size_t i = 0; i < comps.size(); ++i) {
        Rat ratio(g.edges_within(comps[i]), (long long)comps[i].size());
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best = i;
        }
    }
    return g.induced(comps[best]);
}

Bipartition bipartition(const Graph& g) {
    Bipartition out;
    std::vector<int> color(g.order(), -1);
    std::vector<int> parent(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    q.push_back(w);
                } else if (color[w] == color[u]) {
                    // Build a closed odd walk: path u->root, edge u-w, path root->w.
                    std::vector<int> up, wp;
                    for (int a = u; a >= 0; a = parent[a]) up.push_back(a);
                    for (int a = w; a >= 0; a = parent[a]) wp.push_back(a);
                    std::reverse(up.begin(), up.end());
                    out.odd_walk = up;
                    for (auto it = wp.begin(); it != wp.end(); ++it) out.odd_walk.push_back(*it);
                    out.bipartite = false;
                    return out;
                }
            }
        }
    }
    out.bipartite = true;
    for (int v = 0; v < g.order(); ++v)
        (color[v] == 0 ? out.side_x : out.side_y).push_back(v);
    return out;
}

}  // namespace esos
