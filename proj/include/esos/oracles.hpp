#pragma once

#include <cstdint>
#include <optional>

#include "esos/graph.hpp"
#include "esos/rational.hpp"
#include "esos/tree.hpp"

namespace esos {

enum class Verdict { Yes, No, Indeterminate };

struct ContainResult {
    Verdict verdict = Verdict::Indeterminate;
    std::optional<Embedding> witness;  // present iff verdict == Yes
    long long nodes_explored = 0;
};

/// Exhaustive backtracking tree-containment check. BFS variable order from
/// tree vertex 0, candidates tried lowest degree first, pruned by
/// deg_G(image) >= deg_T(vertex). Returns Indeterminate once more than
/// `budget` assignments have been attempted.
ContainResult contains_tree_bruteforce(const Graph& g, const Tree& t, long long budget);

/// Maximum total weight of a fractional matching by exhaustive search over
/// half-integral weights (optimal ones are half-integral). Capped at 12
/// edges; throws Error("cap") above that.
Rat fractional_matching_bruteforce(const Graph& g);

/// Exact maximum matching size via subset DP; capped at 16 vertices.
int max_matching_bruteforce(const Graph& g);

struct SampleStats {
    int trials = 0;
    int contained = 0;
    int violations = 0;
    int indeterminate = 0;
    std::vector<int> violation_trials;
};

/// Random trials of the extremal containment statement: a random n-vertex
/// graph with floor((d-1)n/2)+1 edges is tested against a random d-edge
/// tree. A definitive "not contained" is counted as a violation.
SampleStats erdos_sos_sample(int n, int d, int trials, uint64_t seed, long long budget,
                             int jobs = 1);

}  // namespace esos
