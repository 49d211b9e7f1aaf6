#include "esos/constructions.hpp"

#include <algorithm>
#include <set>

#include "esos/rng.hpp"

namespace esos {

Graph disjoint_cliques(int n, int d) {
    if (d < 1) throw Error("precondition", "d must be >= 1");
    if (n < 0 || n % d != 0) throw Error("precondition", "n must be divisible by d");
    std::vector<Edge> edges;
    for (int base = 0; base < n; base += d)
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) edges.push_back({base + i, base + j});
    return Graph::from_edges(n, std::move(edges));
}

namespace {

bool try_pairing(int n, int r, Rng& rng, std::vector<Edge>& out) {
    std::vector<int> points(n * r);
    for (int i = 0; i < n * r; ++i) points[i] = i / r;
    rng_shuffle(rng, points);
    std::set<Edge> seen;
    out.clear();
    for (int i = 0; i < n * r; i += 2) {
        int u = points[i], v = points[i + 1];
        if (u == v) return false;
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second) return false;
        out.push_back(e);
    }
    return true;
}

Graph circulant(int n, int r) {
    std::set<Edge> edges;
    for (int o = 1; o <= r / 2; ++o)
        for (int i = 0; i < n; ++i) {
            int j = (i + o) % n;
            edges.insert({std::min(i, j), std::max(i, j)});
        }
    if (r % 2 == 1)
        for (int i = 0; i < n / 2; ++i) edges.insert({i, i + n / 2});
    return Graph::from_edges(n, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace

Graph regular_graph(int n, int r, uint64_t seed, int resample_cap) {
    if (r < 0 || r >= n) throw Error("precondition", "need 0 <= r < n");
    if ((long long)n * r % 2 != 0) throw Error("precondition", "r*n must be even");
    if (r == 0) return Graph::empty(n);
    Rng rng(splitmix64(seed));
    std::vector<Edge> edges;
    for (int attempt = 0; attempt < resample_cap; ++attempt)
        if (try_pairing(n, r, rng, edges)) return Graph::from_edges(n, std::move(edges));
    return circulant(n, r);
}

Graph dominating_construction(int n, int d) {
    if (d < 1 || d % 2 == 0) throw Error("precondition", "d must be odd and >= 1");
    int dom = (d - 1) / 2;
    if (dom > n) throw Error("precondition", "(d-1)/2 exceeds n");
    std::vector<Edge> edges;
    for (int i = 0; i < dom; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::from_edges(n, std::move(edges));
}

BipartiteParts near_extremal_bipartite(int k, const Rat& eps, int y_size, uint64_t seed) {
    if (k < 1) throw Error("precondition", "k must be >= 1");
    if (eps < Rat(0) || eps > Rat(1)) throw Error("precondition", "eps must be in [0,1]");
    if (Rat(y_size) < Rat(6LL * k))
        throw Error("precondition", "y_size must be >= 6k");
    int x_size = (int)((Rat(1) + eps) * Rat(k) / Rat(2)).floor();
    int x_min_deg = (int)((Rat(1) - eps) * Rat(y_size)).ceil();
    int y_min_deg = (int)((Rat(1) - eps) * Rat(k) / Rat(2)).ceil();
    if (x_size < 1 || y_min_deg > x_size)
        throw Error("precondition", "infeasible degree demands");
    Rng rng(splitmix64(seed));
    std::vector<std::set<int>> x_adj(x_size);
    for (int x = 0; x < x_size; ++x) {
        int deg = rng_range(rng, x_min_deg, y_size);
        for (int y : rng_sample(rng, y_size, deg)) x_adj[x].insert(y);
    }
    std::vector<int> y_deg(y_size, 0);
    for (int x = 0; x < x_size; ++x)
        for (int y : x_adj[x]) ++y_deg[y];
    for (int y = 0; y < y_size; ++y) {
        if (y_deg[y] >= y_min_deg) continue;
        std::vector<int> missing;
        for (int x = 0; x < x_size; ++x)
            if (!x_adj[x].count(y)) missing.push_back(x);
        rng_shuffle(rng, missing);
        for (int i = 0; y_deg[y] < y_min_deg; ++i) {
            x_adj[missing[i]].insert(y);
            ++y_deg[y];
        }
    }
    std::vector<Edge> edges;
    for (int x = 0; x < x_size; ++x)
        for (int y : x_adj[x]) edges.push_back({x, x_size + y});
    BipartiteParts out;
    out.g = Graph::from_edges(x_size + y_size, std::move(edges));
    for (int x = 0; x < x_size; ++x) out.part_x.push_back(x);
    for (int y = 0; y < y_size; ++y) out.part_y.push_back(x_size + y);
    return out;
}

Tree random_tree(int k, int max_degree, uint64_t seed) {
    if (k < 0) throw Error("precondition", "k must be >= 0");
    if (k >= 2 && max_degree < 2)
        throw Error("precondition", "max_degree too small for k");
    if (k == 1 && max_degree < 1)
        throw Error("precondition", "max_degree too small for k");
    Rng rng(splitmix64(seed));
    std::vector<Edge> edges;
    std::vector<int> deg(k + 1, 0);
    for (int i = 1; i <= k; ++i) {
        std::vector<int> eligible;
        for (int j = 0; j < i; ++j)
            if (deg[j] < max_degree) eligible.push_back(j);
        int j = eligible[(int)rng_below(rng, eligible.size())];
        edges.push_back({j, i});
        ++deg[i];
        ++deg[j];
    }
    return Tree::from_graph(Graph::from_edges(k + 1, std::move(edges)));
}

Graph random_graph(int n, long long m, uint64_t seed) {
    long long all = (long long)n * (n - 1) / 2;
    if (m < 0 || m > all) throw Error("precondition", "edge count out of range");
    Rng rng(splitmix64(seed));
    std::vector<Edge> pairs;
    pairs.reserve(all);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    for (long long i = 0; i < m; ++i) {
        long long j = i + (long long)rng_below(rng, (uint64_t)(all - i));
        std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(m);
    return Graph::from_edges(n, std::move(pairs));
}

}  // namespace esos
