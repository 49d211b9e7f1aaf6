#pragma once

#include "esos/graph.hpp"
#include "esos/rational.hpp"

namespace esos {

struct DenseCore {
    bool found = false;
    std::vector<int> vertices;
    int min_degree = 0;  // inside the reported set
};

/// Looks for a clique-like core: per component (in order), peel vertices of
/// degree below (1-alpha)*k (lowest index first); report the first component
/// whose peeled remainder is nonempty and holds at most (1+alpha)*k vertices.
DenseCore detect_dense_core(const Graph& g, int k, const Rat& alpha);

struct BipartiteCore {
    bool found = false;
    std::vector<int> side_x, side_y;
    int min_deg_x = 0;  // min over side_x of neighbors inside side_y
    int min_deg_y = 0;  // min over side_y of neighbors inside side_x
};

/// Looks for a near-complete-bipartite core inside a bipartite graph with the
/// given parts. Alternately drops X-vertices with fewer than (1-alpha)|Y|
/// surviving Y-neighbors and Y-vertices with fewer than (1-alpha)k/2
/// surviving X-neighbors until stable; the thresholds reference the original
/// |Y| and k, which makes the fixed point independent of the filter order
/// (y_first only flips the scan order so tests can confirm that). Found when
/// the survivors are nonempty with |X'| <= (1+alpha)k/2, |Y'| >= y_floor,
/// every X' vertex keeping >= (1-alpha)|Y'| neighbors and every Y' vertex
/// keeping >= (1-alpha)k/2.
BipartiteCore detect_bipartite_core(const Graph& g, const std::vector<int>& part_x,
                                    const std::vector<int>& part_y, int k, const Rat& alpha,
                                    const Rat& y_floor, bool y_first = false);

}  // namespace esos
