#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "esos/graph.hpp"
#include "esos/params.hpp"
#include "esos/tree.hpp"

namespace esos {

/// Structure certificate handed to the extremal embedders. The almost
/// complete variant carries the dense core K; the bipartite variant carries
/// the declared parts of B plus, once the embedder has derived them, the
/// working core sets. eps, k and max_deg size the hypothesis checks.
struct ExtremalWitness {
    bool bipartite = false;
    std::vector<int> core;  // dense core K (non-bipartite variant)

    std::vector<int> part_x, part_y;  // declared parts of B (bipartite variant)
    std::vector<int> xk, yk;          // working core X_K, Y_K
    std::vector<int> xk_big, yk_big;  // well-connected core subsets
    std::vector<int> x_extra;         // X' absorbed next to X
    std::vector<int> z_set;           // leftover vertices outside the core

    Rat eps;
    int k = 0;        // tree edge count the witness is sized for
    int max_deg = 0;  // degree cap for the trees this witness serves
};

struct EmbedStage {
    std::string label;
    std::vector<int> tree_vertices;  // embedded during this stage, in order
    std::vector<int> targets;        // sorted target set the stage drew from
    long long min_feasible = -1;     // smallest per-vertex candidate count, -1 if unused
};

/// Replayable record of a staged embedding run. On failure `f` holds the
/// partial embedding reached and `failure` names the stage that ran dry.
struct EmbedTrace {
    std::string case_label;
    std::vector<EmbedStage> stages;
    Embedding f;
    bool ok = false;
    std::string failure;
};

/// BFS-order greedy embedding of t rooted at root_target. Requires
/// d_floor >= e(t), delta_floor >= max degree of t, deg(root_target) >=
/// delta_floor and min degree of g - root_target >= d_floor; under those the
/// greedy count argument cannot fail.
Embedding greedy_embed(const Graph& g, const Tree& t, int root_target, int d_floor,
                       int delta_floor);

/// Completion engine: given a prescribed set S and a partial embedding f of
/// T[S and its outside neighbors] into the bipartite core of w, extends f to
/// all of t. x_part selects which tree side plays X_T (0 = part_x side of t).
/// Checks the core hypotheses (Error "hypothesis") and the four prescription
/// conditions (Error "precondition"), then runs stages a-e; a stage running
/// out of candidates returns ok=false with the stage label.
EmbedTrace complete_bipartite_embedding(const Graph& g, const ExtremalWitness& w, const Tree& t,
                                        int x_part, const std::vector<int>& s_set,
                                        const Embedding& f, const ParamProfile& prof);

/// Embeds a tree with e(t) = w.k edges into a connected graph holding an
/// almost complete core K: splits off a small subtree S, then either routes
/// S through the heavy attachment slice next to K (case 1) or through the
/// residue left after removing K and its attachments (case 2), finishing R
/// greedily inside K either way.
EmbedTrace embed_nonbipartite_extremal(const Graph& g, const ExtremalWitness& w, const Tree& t,
                                       const ParamProfile& prof);

/// Embeds a tree with e(t) = w.k edges into a connected graph holding an
/// almost complete bipartite core B: derives the saturated side Y', the
/// absorbable set X' and the leftover Z, then dispatches on whether Z is
/// empty, prescribing a seed embedding (split subtree, star pack, bare-path
/// reroute or leaf matching) and finishing with the completion engine.
EmbedTrace embed_bipartite_extremal(const Graph& g, const ExtremalWitness& w, const Tree& t,
                                    const ParamProfile& prof);

/// Samples a c^2*k sized subset Y' of part_y until the bipartite edge count
/// e(part_x, Y') reaches k|Y'| (the expectation argument guarantees a
/// sample exists), then keeps X' = {x : |N(x) cap Y'| >= c*k/4}. Returns the
/// bipartite slice on X' and Y'; |X'| >= k - |X|/c always holds.
Graph find_good_subgraph(const Graph& g, const std::vector<int>& part_x,
                         const std::vector<int>& part_y, int k, const Rat& c, uint64_t seed,
                         int resample_cap = 1000);

}  // namespace esos
