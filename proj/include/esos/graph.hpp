#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "esos/rational.hpp"

namespace esos {

/// Library-wide error with a machine-readable kind ("precondition", "parse",
/// "hypothesis", "infeasible", "cap", "internal").
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on dense vertex indices 0..n-1.
/// Immutable after construction; all derived graphs are new objects.
/// labels() maps each vertex back to the root ancestor graph it was induced
/// from (identity for graphs built directly), so certificates can always
/// report vertices in the caller's original indexing.
class Graph {
public:
    Graph() = default;

    static Graph empty(int n);
    /// Validates range, rejects self-loops and duplicate edges.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    long long edge_count() const { return (long long)edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return (int)adj_[v].size(); }
    bool has_edge(int u, int v) const;

    const std::vector<int>& labels() const { return labels_; }

    int min_degree() const;
    int max_degree() const;

    /// Number of edges with one endpoint in s and the other in t.
    /// Edges inside the intersection count once.
    long long edges_between(const std::vector<int>& s, const std::vector<int>& t) const;
    /// Edges with both endpoints in s.
    long long edges_within(const std::vector<int>& s) const;

    /// Induced subgraph; verts need not be sorted, duplicates rejected.
    /// The result's labels() compose through this graph's labels().
    Graph induced(std::vector<int> verts) const;
    Graph without_edges(const std::vector<Edge>& removed) const;
    Graph with_extra_edges(const std::vector<Edge>& added) const;

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    std::vector<std::vector<int>> components() const;
    bool connected() const;

    std::vector<int> bfs_order(int root) const;
    /// Distance vector from root, -1 if unreachable.
    std::vector<int> distances_from(int root) const;

    /// Per-vertex neighbor bitmasks; only valid for order() <= 64.
    std::vector<uint64_t> adjacency_masks() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // canonical: u < v, lexicographically sorted
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
    std::vector<int> labels_;
};

/// density of the cut (s, complement) style ratios: e / (|A|*|B|) etc. are
/// built by callers from edges_between; kept here for shared small helpers.
Rat edge_ratio(long long edges, long long denom);

/// Fact about any graph: if e(G) >= x*|G| then peeling vertices of degree <= x
/// leaves a nonempty subgraph H with e(H) >= x*|H| and min degree floor(x)+1.
/// Peels the lowest-index vertex of degree <= x first. Throws Error
/// ("precondition") if e(g) < x*|g| or the peel empties the graph.
Graph min_degree_subgraph(const Graph& g, const Rat& x);

/// Connected component maximizing e(C)/|C|; ties broken toward the component
/// containing the smallest vertex index.
Graph densest_component(const Graph& g);

struct Bipartition {
    bool bipartite = false;
    std::vector<int> side_x, side_y;  // 2-coloring when bipartite
    std::vector<int> odd_walk;        // closed odd walk witness otherwise
};

/// Two-colors each component (vertex 0 of each component on side X);
/// on failure returns a closed odd walk through the offending edge.
Bipartition bipartition(const Graph& g);

}  // namespace esos
