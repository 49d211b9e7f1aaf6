#pragma once

#include <cstdint>

#include "esos/graph.hpp"
#include "esos/params.hpp"
#include "esos/tree.hpp"

namespace esos {

/// n/d disjoint copies of K_d on consecutive index blocks; requires d | n.
/// Extremal for tree containment: e = (d-1)n/2 and no component fits a
/// d-edge tree.
Graph disjoint_cliques(int n, int d);

/// Random r-regular graph via the pairing model (resampled until simple, up
/// to `resample_cap` attempts), falling back to a deterministic circulant.
/// Requires r*n even and 0 <= r < n.
Graph regular_graph(int n, int r, uint64_t seed, int resample_cap = 1000);

/// (d-1)/2 dominating vertices joined to everything, rest independent.
/// Requires d odd, 1 <= d, (d-1)/2 <= n. e = D*(n-D) + C(D,2) for D=(d-1)/2.
Graph dominating_construction(int n, int d);

struct BipartiteParts {
    Graph g;
    std::vector<int> part_x, part_y;
};

/// Bipartite host with |X| = floor((1+eps)k/2), |Y| = y_size >= 6k, every
/// X-vertex adjacent to >= (1-eps)|Y| of Y and every Y-vertex topped up to
/// degree >= (1-eps)k/2. Vertices 0..|X|-1 are X.
BipartiteParts near_extremal_bipartite(int k, const Rat& eps, int y_size, uint64_t seed);

/// Uniform-ish random k-edge tree by degree-capped random attachment.
/// Requires max_degree >= 2 or k <= 1.
Tree random_tree(int k, int max_degree, uint64_t seed);

/// Uniform random graph with exactly m edges.
Graph random_graph(int n, long long m, uint64_t seed);

}  // namespace esos
