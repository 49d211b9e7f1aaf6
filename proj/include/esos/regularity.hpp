#pragma once

#include <cstdint>

#include "esos/graph.hpp"
#include "esos/matchings.hpp"
#include "esos/params.hpp"

namespace esos {

enum class PairCheckMode { Exact, Restricted, Sampled };

struct PairCheck {
    bool regular = false;
    Rat density;
    PairCheckMode mode = PairCheckMode::Exact;
    std::vector<int> bad_a, bad_b;  // violating subsets when irregular
    Rat bad_density;
};

/// Multiplicative regularity test for disjoint vertex sets: (a,b) is
/// eps-regular when every pair of subsets of sizes >= eps*|a|, eps*|b| sees
/// (1 +- eps) times the expected edge count. Mode by size: full enumeration
/// up to caps.regular_pair_full per side; up to caps.regular_pair_exact the
/// exact restricted check (subsets of sizes ceil(eps*|b|) and |b|/2 on one
/// side, extremal prefix/suffix sums on the other, both orientations); random
/// sampling above that.
PairCheck is_regular_pair(const Graph& g, const std::vector<int>& a, const std::vector<int>& b,
                          const Rat& eps, const Caps& caps, uint64_t seed);

struct RegPartition {
    std::vector<std::vector<int>> parts;  // equal sizes, sorted vertex lists
    std::vector<int> exceptional;
};

struct PairStatus {
    int i, j;
    bool regular;
    Rat density;
    PairCheckMode mode;
};

struct RegularityResult {
    RegPartition partition;
    std::vector<PairStatus> pairs;  // all i < j
    Rat energy;                     // mean square density over the final classes
    std::vector<Rat> energy_history;  // one entry per round, never decreasing
    int iterations = 0;
    bool resolved = false;  // every pair regular and exceptional set within eps*n
};

/// Iterated refinement: start from max(ceil(1/eps), ceil(n/regular_pair_exact))
/// equal parts, and while some pair fails its check, split every part along
/// the Venn atoms of the incident witness sets into chunks a quarter the old
/// size (leftovers pooled per part, the last scraps joining the exceptional
/// set). The mean square density never decreases along the way; singleton
/// parts end the descent since they are always regular.
RegularityResult regularity_refine(const Graph& g, const Rat& eps, const Caps& caps,
                                   uint64_t seed);

/// Splits every part into its lower and upper half (odd leftovers join the
/// exceptional set). Halving an eps-regular partition stays regular at 3*eps
/// with densities within (1 +- eps) of the originals.
RegPartition halve_partition(const RegPartition& rp);

struct ReducedGraph {
    Graph cluster;  // vertex i = part i; edges are the dense regular pairs
    std::vector<std::vector<Rat>> density;  // symmetric, all pairs
    Graph pruned;   // spanning subgraph of g keeping only edges of cluster pairs
};

/// Keeps exactly the edges lying between regular pairs of density >= eta.
ReducedGraph reduced_graph(const Graph& g, const RegularityResult& reg, const Rat& eta);

struct HalfCover {
    // Disjoint pairs of half-parts; each pair lies across a dense regular pair.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pieces;
    Rat matching_value;  // optimal fractional matching of the cluster graph
};

/// Optimal fractional matching of the cluster graph, blown up to pairs of
/// half-parts via the half-integral decomposition: exactly 2*value pieces.
HalfCover regularity_cover(const Graph& g, const RegularityResult& reg, const Rat& eta);

struct ReducedCover {
    std::vector<std::vector<int>> parts_x, parts_y;  // per-side partitions used
    std::vector<int> cover;                          // sorted vertices of g
    long long residual_edges = 0;                    // g-edges the cover misses
    bool all_regular = false;
};

/// Bipartite reduced-graph cover: chop each side into
/// max(ceil(1/eps), ceil(side/regular_pair_exact)) near-equal chunks, check
/// every cross chunk pair, build the cluster graph on the regular pairs of
/// density >= eta, and blow a Konig cover of that cluster up to vertices.
/// Every edge of g must cross the given parts.
ReducedCover regularity_vertex_cover(const Graph& g, const std::vector<int>& part_x,
                                     const std::vector<int>& part_y, const Rat& eps,
                                     const Rat& eta, const Caps& caps, uint64_t seed);

}  // namespace esos
