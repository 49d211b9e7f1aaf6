#pragma once

#include <optional>
#include <vector>

#include "esos/graph.hpp"

namespace esos {

/// A tree is a connected acyclic Graph plus its cached bipartition.
/// part_x() always contains vertex 0. k1/k2 are the part sizes with
/// k1 = |part_x|, k2 = |part_y| (not necessarily sorted).
class Tree {
public:
    static Tree from_graph(Graph g);

    const Graph& graph() const { return g_; }
    int order() const { return g_.order(); }
    int edge_count() const { return k_; }
    int max_degree() const { return max_degree_; }
    const std::vector<int>& part_x() const { return part_x_; }
    const std::vector<int>& part_y() const { return part_y_; }
    /// 0 = part_x side, 1 = part_y side.
    int side(int v) const { return side_[v]; }

    /// Parent array for the tree rooted at root (parent[root] = -1).
    std::vector<int> parents(int root) const;
    /// Vertex count of every subtree when rooted at root.
    std::vector<int> subtree_sizes(int root) const;
    std::vector<int> leaves() const;

private:
    Graph g_;
    int k_ = 0;
    int max_degree_ = 0;
    std::vector<int> part_x_, part_y_;
    std::vector<int> side_;
};

struct EmbeddingReport {
    bool total = false;
    bool injective = true;
    bool edges_preserved = true;
    std::vector<int> unassigned;
    std::vector<std::pair<int, int>> clashes;       // tree vertex pairs sharing an image
    std::vector<std::pair<int, int>> missing_edges; // tree edges whose images are non-edges
    bool valid() const { return total && injective && edges_preserved; }
    bool valid_partial() const { return injective && edges_preserved; }
};

/// Partial injective map from tree vertices to graph vertices (-1 = unset).
class Embedding {
public:
    Embedding() = default;
    explicit Embedding(int tree_order) : map_(tree_order, -1) {}

    int operator[](int tv) const { return map_[tv]; }
    bool assigned(int tv) const { return map_[tv] >= 0; }
    void assign(int tv, int gv) { map_[tv] = gv; }
    int tree_order() const { return (int)map_.size(); }
    const std::vector<int>& raw() const { return map_; }
    std::vector<int> domain() const;
    std::vector<int> image() const;

    EmbeddingReport validate(const Tree& t, const Graph& g) const;

private:
    std::vector<int> map_;
};

}  // namespace esos
