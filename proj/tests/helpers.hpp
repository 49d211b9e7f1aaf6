#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "esos/constructions.hpp"
#include "esos/graph.hpp"
#include "esos/rng.hpp"
#include "esos/tree.hpp"

namespace esos::testing {

inline Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    return Graph::from_edges(n, es);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return Graph::from_edges(a + b, es);
}

inline Tree path_tree(int vertices) { return Tree::from_graph(path_graph(vertices)); }

inline Tree star_tree(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Tree::from_graph(Graph::from_edges(leaves + 1, es));
}

/// Two disjoint K5 blocks joined by the single edge 4-5.
inline Graph two_cliques_bridge() {
    std::vector<Edge> es;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) es.emplace_back(u, v);
    for (int u = 5; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) es.emplace_back(u, v);
    es.emplace_back(4, 5);
    return Graph::from_edges(10, es);
}

inline std::vector<int> iota_vec(int lo, int hi) {  // [lo, hi)
    std::vector<int> v;
    for (int i = lo; i < hi; ++i) v.push_back(i);
    return v;
}

inline bool pairwise_disjoint(const std::vector<std::vector<int>>& sets) {
    std::set<int> seen;
    for (const auto& s : sets)
        for (int v : s)
            if (!seen.insert(v).second) return false;
    return true;
}

}  // namespace esos::testing
