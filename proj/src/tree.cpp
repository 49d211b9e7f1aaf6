#include "esos/tree.hpp"

#include <algorithm>
#include <deque>

namespace esos {

Tree Tree::from_graph(Graph g) {
    if (g.order() == 0) throw Error("precondition", "tree must have at least one vertex");
    if (g.edge_count() != g.order() - 1)
        throw Error("precondition", "not a tree: edge count != order-1");
    if (!g.connected()) throw Error("precondition", "not a tree: disconnected");
    Tree t;
    t.k_ = (int)g.edge_count();
    t.max_degree_ = g.max_degree();
    auto bp = bipartition(g);
    // Acyclic and connected, so always 2-colorable with vertex 0 on side X.
    t.part_x_ = bp.side_x;
    t.part_y_ = bp.side_y;
    t.side_.assign(g.order(), 1);
    for (int v : t.part_x_) t.side_[v] = 0;
    t.g_ = std::move(g);
    // Fact: every tree on >= 2 vertices has both part sizes >= |V|/(2*maxdeg).
    if (t.g_.order() >= 2) {
        Rat bound(t.g_.order(), 2LL * t.max_degree_);
        if (Rat((long long)t.part_x_.size()) < bound || Rat((long long)t.part_y_.size()) < bound)
            throw Error("internal", "tree part-size bound violated");
    }
    return t;
}

std::vector<int> Tree::parents(int root) const {
    std::vector<int> parent(g_.order(), -1);
    std::vector<char> seen(g_.order(), 0);
    std::deque<int> q{root};
    seen[root] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g_.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = u;
                q.push_back(w);
            }
    }
    return parent;
}

std::vector<int> Tree::subtree_sizes(int root) const {
    auto order = g_.bfs_order(root);
    auto parent = parents(root);
    std::vector<int> size(g_.order(), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    return size;
}

std::vector<int> Tree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < g_.order(); ++v)
        if (g_.degree(v) == 1) out.push_back(v);
    return out;
}

std::vector<int> Embedding::domain() const {
    std::vector<int> out;
    for (int tv = 0; tv < (int)map_.size(); ++tv)
        if (map_[tv] >= 0) out.push_back(tv);
    return out;
}

std::vector<int> Embedding::image() const {
    std::vector<int> out;
    for (int gv : map_)
        if (gv >= 0) out.push_back(gv);
    std::sort(out.begin(), out.end());
    return out;
}

EmbeddingReport Embedding::validate(const Tree& t, const Graph& g) const {
    EmbeddingReport rep;
    if ((int)map_.size() != t.order())
        throw Error("precondition", "embedding sized for a different tree");
    std::vector<int> owner(g.order(), -1);
    for (int tv = 0; tv < (int)map_.size(); ++tv) {
        int gv = map_[tv];
        if (gv < 0) {
            rep.unassigned.push_back(tv);
            continue;
        }
        if (gv >= g.order()) throw Error("precondition", "embedding image out of range");
        if (owner[gv] >= 0) {
            rep.injective = false;
            rep.clashes.push_back({owner[gv], tv});
        } else {
            owner[gv] = tv;
        }
    }
    rep.total = rep.unassigned.empty();
    for (auto [a, b] : t.graph().edges()) {
        if (map_[a] < 0 || map_[b] < 0) continue;
        if (!g.has_edge(map_[a], map_[b])) {
            rep.edges_preserved = false;
            rep.missing_edges.push_back({a, b});
        }
    }
    return rep;
}

}  // namespace esos
