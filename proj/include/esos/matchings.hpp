#pragma once

#include "esos/graph.hpp"
#include "esos/rational.hpp"

namespace esos {

struct BipartiteMatching {
    std::vector<Edge> matching;  // (left, right) pairs
    std::vector<int> cover_left, cover_right;
    // Konig cover: |cover| == |matching| and every edge touches the cover.
};

/// Maximum matching of a bipartite graph given as cross edges (left, right),
/// by augmenting paths in ascending vertex order, plus a certifying cover.
BipartiteMatching max_bipartite_matching(int n_left, int n_right, const std::vector<Edge>& edges);

/// Maximal (not maximum) matching, greedily in sorted edge order.
std::vector<Edge> greedy_maximal_matching(const Graph& g);

struct KonigCover {
    std::vector<Edge> matching;  // (x, y) pairs, x in part_x and y in part_y
    std::vector<int> cover;      // sorted; |cover| == |matching|, touches every edge
};

/// Maximum matching plus certifying cover of a bipartite graph in its own
/// vertex indexing. Every edge of g must cross the given parts.
KonigCover konig_cover(const Graph& g, const std::vector<int>& part_x,
                       const std::vector<int>& part_y);

struct HalfMatching {
    std::vector<std::pair<Edge, Rat>> weights;  // nonzero entries, each 1/2 or 1
    std::vector<Rat> cover;                     // fractional vertex cover
    Rat value;                                  // matching total == cover total
};

/// Optimal fractional matching, computed integrally on the bipartite double
/// cover and folded back; the returned cover has the same total, certifying
/// optimality by duality.
HalfMatching fractional_matching(const Graph& g);

struct HalfPair {
    int u;
    int u_half;  // 0 = minus half, 1 = plus half
    int v;
    int v_half;
};

/// Splits every vertex into two halves and pairs halves along the support of
/// a half-integral matching: a weight-1 edge yields two pairs, the weight-1/2
/// edges decompose into paths and cycles oriented deterministically, one pair
/// per edge. Exactly 2*value pairs, no half used twice.
std::vector<HalfPair> matching_from_fractional(const Graph& g, const HalfMatching& fm);

struct Star {
    int center;
    std::vector<int> leaves;
};

struct StarsOrMatching {
    bool is_stars = false;
    std::vector<Star> stars;      // exactly d stars with delta leaves each
    std::vector<Edge> matching;   // or exactly 5d disjoint edges
};

/// Requires |G| >= 10*delta*d and min degree >= d. Grows disjoint stars of at
/// most 2*delta edges by an exchange loop (new star / split a leaf off / grow
/// a star) that strictly increases (#stars, #edges) lexicographically; at the
/// stall point either d stars hold >= delta edges or at least 5d stars exist.
StarsOrMatching stars_or_matching(const Graph& g, int d, int delta);

}  // namespace esos
