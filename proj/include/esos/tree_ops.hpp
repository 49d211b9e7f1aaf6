#pragma once

#include "esos/rational.hpp"
#include "esos/tree.hpp"

namespace esos {

struct TreeDivision {
    int pivot;              // cut vertex, contained in side
    std::vector<int> side;  // sorted; T[side] and T minus (side \ pivot) both connected
};

/// Finds a vertex whose own subtree weighs at least m while every child
/// subtree weighs less, then packs child subtrees in ascending child order
/// until the side (with the pivot) holds at least m vertices. The side size
/// lands in [m, 2m-2] for m >= 2. Requires 1 <= m <= |T|.
TreeDivision divide_tree(const Tree& t, int m);

struct TreeSplit {
    Edge edge;
    std::vector<int> side;  // sorted component of T - edge satisfying the bounds
};

/// Finds an edge splitting off between alpha*k and 3*alpha*Delta*k vertices
/// (k = |T|, Delta = max degree): descend to the lowest vertex all of whose
/// child subtrees weigh under floor(alpha*Delta*k)+1 and cut its heaviest
/// child edge; if that misses the window, scan all edges.
TreeSplit split_tree_by_edge(const Tree& t, const Rat& alpha);

struct LeavesOrPaths {
    bool is_leaves = false;
    std::vector<Edge> leaf_edges;          // (parent, leaf), distinct parents
    std::vector<std::vector<int>> paths;   // disjoint paths of len+1 vertices,
                                           // interior degree 2 in T
};

/// If T has at least |T|/(10*len) leaves, returns one leaf edge per leaf
/// parent (pairwise disjoint, at least L/Delta of them). Otherwise chops the
/// maximal degree-2 threads into disjoint paths of len edges each.
LeavesOrPaths leaves_or_bare_paths(const Tree& t, int len);

/// Greedily picks `count` candidates (ascending) at pairwise distance
/// >= min_dist in g, also keeping distance >= min_dist from every vertex in
/// keep_away. Throws Error("infeasible") when fewer qualify.
std::vector<int> scattered_set(const Graph& g, const std::vector<int>& candidates, int count,
                               int min_dist, const std::vector<int>& keep_away);

}  // namespace esos
