#include "esos/tree_ops.hpp"

#include <algorithm>
#include <deque>

namespace esos {

namespace {

// Lowest vertex whose subtree holds >= m vertices while every child subtree
// holds fewer, walking down from the root.
int descend_to_pivot(const Tree& t, const std::vector<int>& parent,
                     const std::vector<int>& size, int m) {
    int v = 0;
    for (;;) {
        int next = -1;
        for (int c : t.graph().neighbors(v)) {
            if (parent[c] != v) continue;
            if (size[c] >= m) {
                next = c;
                break;
            }
        }
        if (next == -1) return v;
        v = next;
    }
}

std::vector<int> subtree_vertices(const Tree& t, const std::vector<int>& parent, int root) {
    std::vector<int> out;
    std::deque<int> q{root};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        out.push_back(v);
        for (int c : t.graph().neighbors(v))
            if (parent[c] == v) q.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TreeDivision divide_tree(const Tree& t, int m) {
    int k = t.order();
    if (m < 1 || m > k)
        throw Error("precondition", "need 1 <= m <= |T|, got m=" + std::to_string(m));
    auto parent = t.parents(0);
    auto size = t.subtree_sizes(0);
    int v = descend_to_pivot(t, parent, size, m);

    TreeDivision out;
    out.pivot = v;
    out.side = {v};
    int total = 0;
    for (int c : t.graph().neighbors(v)) {
        if (parent[c] != v) continue;
        if (total >= m - 1) break;
        auto sub = subtree_vertices(t, parent, c);
        total += (int)sub.size();
        out.side.insert(out.side.end(), sub.begin(), sub.end());
    }
    std::sort(out.side.begin(), out.side.end());
    if ((int)out.side.size() < m)
        throw Error("internal", "divide_tree produced an undersized side");
    return out;
}

TreeSplit split_tree_by_edge(const Tree& t, const Rat& alpha) {
    int k = t.order();
    if (k < 2) throw Error("precondition", "tree must have at least 2 vertices");
    if (alpha <= Rat(0)) throw Error("precondition", "alpha must be positive");
    int delta = t.max_degree();
    if (alpha * Rat(4LL * delta) >= Rat(1))
        throw Error("precondition", "alpha must be below 1/(4 * max degree)");
    Rat lo = alpha * Rat(k);
    Rat hi = alpha * Rat(3LL * delta * k);
    auto parent = t.parents(0);
    auto size = t.subtree_sizes(0);

    auto in_window = [&](long long s) { return Rat(s) >= lo && Rat(s) <= hi; };
    auto finish = [&](int p, int c, bool child_side) {
        TreeSplit out;
        out.edge = {std::min(p, c), std::max(p, c)};
        auto sub = subtree_vertices(t, parent, c);
        if (child_side) {
            out.side = sub;
        } else {
            std::vector<char> in_sub(k, 0);
            for (int v : sub) in_sub[v] = 1;
            for (int v = 0; v < k; ++v)
                if (!in_sub[v]) out.side.push_back(v);
        }
        return out;
    };

    long long m = (alpha * Rat((long long)delta * k)).floor() + 1;
    if (m <= k) {
        int v = descend_to_pivot(t, parent, size, (int)m);
        int best = -1;
        for (int c : t.graph().neighbors(v)) {
            if (parent[c] != v) continue;
            if (best == -1 || size[c] > size[best]) best = c;
        }
        if (best != -1 && in_window(size[best])) return finish(v, best, true);
    }
    for (int c = 0; c < k; ++c) {
        if (parent[c] == -1) continue;
        if (in_window(size[c])) return finish(parent[c], c, true);
        if (in_window(k - size[c])) return finish(parent[c], c, false);
    }
    throw Error("infeasible", "no qualifying edge: no split lands in [alpha*k, 3*alpha*Delta*k]");
}

LeavesOrPaths leaves_or_bare_paths(const Tree& t, int len) {
    int k = t.order();
    if (len < 1) throw Error("precondition", "len must be positive");
    if (k < 2) throw Error("precondition", "tree must have at least 2 vertices");
    const Graph& g = t.graph();
    auto leaves = t.leaves();

    LeavesOrPaths out;
    if (Rat((long long)leaves.size()) >= Rat(k, 10LL * len)) {
        out.is_leaves = true;
        if (k == 2) {
            out.leaf_edges = {{0, 1}};
            return out;
        }
        std::vector<int> pick(k, -1);  // parent -> lowest leaf
        for (int l : leaves) {
            int p = g.neighbors(l)[0];
            if (pick[p] == -1) pick[p] = l;
        }
        for (int p = 0; p < k; ++p)
            if (pick[p] != -1) out.leaf_edges.emplace_back(p, pick[p]);
        return out;
    }

    // Maximal threads of degree-2 vertices, each walked from its lower
    // endpoint and chopped into len-edge segments.
    std::vector<char> deg2(k, 0), used(k, 0);
    for (int v = 0; v < k; ++v) deg2[v] = g.degree(v) == 2;
    auto emit_thread = [&](const std::vector<int>& thread) {
        for (size_t i = 0; i + len < thread.size(); i += len + 1)
            out.paths.push_back({thread.begin() + i, thread.begin() + i + len + 1});
    };
    for (int v = 0; v < k; ++v) {
        if (!deg2[v] || used[v]) continue;
        std::vector<int> comp{v};
        used[v] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
            for (int w : g.neighbors(comp[i]))
                if (deg2[w] && !used[w]) {
                    used[w] = 1;
                    comp.push_back(w);
                }
        std::vector<char> in_comp(k, 0);
        for (int w : comp) in_comp[w] = 1;
        int start = -1;
        for (int w : comp) {
            int inner = 0;
            for (int x : g.neighbors(w)) inner += in_comp[x];
            if (inner <= 1 && (start == -1 || w < start)) start = w;
        }
        std::vector<int> thread{start};
        int cur = start, prev = -1;
        while ((int)thread.size() < (int)comp.size()) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (in_comp[w] && w != prev) {
                    next = w;
                    break;
                }
            prev = cur;
            cur = next;
            thread.push_back(next);
        }
        emit_thread(thread);
    }
    std::sort(out.paths.begin(), out.paths.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return out;
}

std::vector<int> scattered_set(const Graph& g, const std::vector<int>& candidates, int count,
                               int min_dist, const std::vector<int>& keep_away) {
    if (count < 0) throw Error("precondition", "count must be nonnegative");
    int n = g.order();
    const int INF = 1 << 29;
    std::vector<int> near(n, INF);
    auto relax_from = [&](int src) {
        std::deque<int> q{src};
        std::vector<int> dist(n, -1);
        dist[src] = 0;
        near[src] = std::min(near[src], 0);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v))
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    near[w] = std::min(near[w], dist[w]);
                    q.push_back(w);
                }
        }
    };
    for (int v : keep_away) {
        if (v < 0 || v >= n) throw Error("precondition", "keep_away vertex out of range");
        relax_from(v);
    }
    std::vector<int> chosen;
    for (int v : candidates) {
        if (v < 0 || v >= n) throw Error("precondition", "candidate vertex out of range");
        if ((int)chosen.size() == count) break;
        if (near[v] < min_dist) continue;
        chosen.push_back(v);
        relax_from(v);
    }
    if ((int)chosen.size() < count)
        throw Error("infeasible", "could not scatter " + std::to_string(count) +
                                      " vertices at distance " + std::to_string(min_dist));
    return chosen;
}

}  // namespace esos
