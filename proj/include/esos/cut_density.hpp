#pragma once

#include <cstdint>

#include "esos/graph.hpp"
#include "esos/params.hpp"

namespace esos {

struct CutWitness {
    std::vector<int> side_a, side_b;  // side_a contains vertex 0
    Rat ratio;                        // e(A,B) / (|A|*|B|)
};

struct KappaResult {
    Rat kappa;
    CutWitness witness;
    bool exact = false;
};

/// Exact cut density: min over proper bipartitions of e(A,B)/(|A||B|),
/// enumerated in Gray-code order with O(1) updates. Requires 2 <= |g| <= cap;
/// above the cap throws Error("cap") pointing at sparse_cut_search. Among
/// minimizing cuts the one whose vertex-0-free side is lexicographically
/// smallest is reported.
KappaResult kappa_exact(const Graph& g, int cap = 20);

/// Local search upper bound on kappa: singleton cuts plus `rounds` random
/// starts, steepest single-vertex descent. Reported ratio always equals the
/// recomputed value of the returned witness, and is >= the true kappa.
KappaResult sparse_cut_search(const Graph& g, int rounds, uint64_t seed);

struct Decomposition {
    std::vector<std::vector<int>> components;  // vertex sets, input indexing
    std::vector<Edge> deleted_edges;
    bool exact = false;  // every cut check ran in exact mode
};

/// Repeatedly removes the edges of a violating cut (ratio < q) inside some
/// component until every component passes; components of order <= cap are
/// checked exactly, larger ones heuristically.
Decomposition cut_dense_decomposition(const Graph& g, const Rat& q, const Caps& caps,
                                      uint64_t seed);

/// Requires e(g) >= 2q|g|^2. Decomposes at density q, then returns the
/// component of a residue vertex of degree >= 2q|g| (such a vertex exists by
/// averaging when the decomposition deleted at most q|g|^2 edges).
Graph find_cut_dense_subgraph(const Graph& g, const Rat& q, const Caps& caps, uint64_t seed);

struct DominatedDecomposition {
    std::vector<std::vector<int>> components;  // G_i, pairwise disjoint
    std::vector<std::vector<int>> cores;       // core of G_i, contains G_i's X-vertices
    std::vector<Rat> core_kappa;               // last computed density per core
    std::vector<Edge> deleted_edges;
    bool exact = false;
};

/// Cover-and-absorb decomposition of a bipartite graph whose X side it will
/// fold into the cores: grow cut-dense cores, join pairs that stay dense
/// together, attach high-degree outside vertices, then absorb each
/// component's X-vertices into its core. Profile constants: dom_core_q
/// (default p^2), dom_core_order (default p^2*k), dom_attach (default
/// p^2*k), dom_join_slack (default 1/4).
DominatedDecomposition dominated_decomposition(const Graph& g, const std::vector<int>& part_x,
                                               const std::vector<int>& part_y, const Rat& p,
                                               int k, const ParamProfile& prof, uint64_t seed);

}  // namespace esos
