#include "esos/oracles.hpp"

#include <algorithm>
#include <future>

#include "esos/constructions.hpp"
#include "esos/rng.hpp"

namespace esos {

namespace {

struct ContainSearch {
    const Graph& g;
    const Tree& t;
    long long budget;
    std::vector<int> order, parent;
    std::vector<int> image;
    std::vector<char> used;
    long long nodes = 0;
    bool out_of_budget = false;

    ContainSearch(const Graph& g_, const Tree& t_, long long budget_)
        : g(g_), t(t_), budget(budget_) {
        order = t.graph().bfs_order(0);
        parent = t.parents(0);
        image.assign(t.order(), -1);
        used.assign(g.order(), 0);
    }

    bool place(size_t depth) {
        if (depth == order.size()) return true;
        int tv = order[depth];
        int need = t.graph().degree(tv);
        std::vector<int> cands;
        if (parent[tv] < 0) {
            for (int v = 0; v < g.order(); ++v)
                if (g.degree(v) >= need) cands.push_back(v);
        } else {
            for (int v : g.neighbors(image[parent[tv]]))
                if (!used[v] && g.degree(v) >= need) cands.push_back(v);
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [&](int a, int b) { return g.degree(a) < g.degree(b); });
        for (int v : cands) {
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            image[tv] = v;
            used[v] = 1;
            if (place(depth + 1)) return true;
            used[v] = 0;
            image[tv] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

ContainResult contains_tree_bruteforce(const Graph& g, const Tree& t, long long budget) {
    if (budget <= 0) throw Error("precondition", "budget must be positive");
    ContainResult res;
    if (t.order() > g.order()) {
        res.verdict = Verdict::No;
        return res;
    }
    ContainSearch search(g, t, budget);
    bool found = search.place(0);
    res.nodes_explored = search.nodes;
    if (found) {
        res.verdict = Verdict::Yes;
        Embedding f(t.order());
        for (int tv = 0; tv < t.order(); ++tv) f.assign(tv, search.image[tv]);
        res.witness = f;
    } else {
        res.verdict = search.out_of_budget ? Verdict::Indeterminate : Verdict::No;
    }
    return res;
}

namespace {

/// DFS over edges with weights in half-units {0,1,2}; capacity 2 per vertex.
void nu_f_search(const Graph& g, size_t idx, int current, std::vector<int>& slack, int& best) {
    int m = (int)g.edges().size();
    if (current + 2 * (m - (int)idx) <= best) return;
    if (idx == g.edges().size()) {
        best = std::max(best, current);
        return;
    }
    auto [u, v] = g.edges()[idx];
    int room = std::min(slack[u], slack[v]);
    for (int w = std::min(room, 2); w >= 0; --w) {
        slack[u] -= w;
        slack[v] -= w;
        nu_f_search(g, idx + 1, current + w, slack, best);
        slack[u] += w;
        slack[v] += w;
    }
}

}  // namespace

Rat fractional_matching_bruteforce(const Graph& g) {
    if (g.edge_count() > 12)
        throw Error("cap", "fractional_matching_bruteforce capped at 12 edges");
    std::vector<int> slack(g.order(), 2);
    int best = 0;
    nu_f_search(g, 0, 0, slack, best);
    return Rat(best, 2);
}

int max_matching_bruteforce(const Graph& g) {
    if (g.order() > 16) throw Error("cap", "max_matching_bruteforce capped at 16 vertices");
    int n = g.order();
    auto masks = g.adjacency_masks();
    std::vector<int8_t> dp((size_t)1 << n, -1);
    dp[0] = 0;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        int v = __builtin_ctz(mask);
        uint32_t rest = mask & (mask - 1);  // drop v
        int best = dp[rest];
        uint32_t nbrs = (uint32_t)masks[v] & rest;
        while (nbrs) {
            int u = __builtin_ctz(nbrs);
            nbrs &= nbrs - 1;
            best = std::max(best, 1 + dp[rest & ~(1u << u)]);
        }
        dp[mask] = (int8_t)best;
    }
    return dp[((size_t)1 << n) - 1];
}

namespace {

SampleStats run_trials(int n, int d, int lo, int hi, uint64_t seed, long long budget) {
    SampleStats stats;
    long long m = (long long)(d - 1) * n / 2 + 1;
    for (int i = lo; i < hi; ++i) {
        Rng rng = derived_rng(seed, (uint64_t)i);
        Graph g = random_graph(n, m, rng());
        Tree t = random_tree(d, d, rng());
        auto res = contains_tree_bruteforce(g, t, budget);
        ++stats.trials;
        switch (res.verdict) {
            case Verdict::Yes: ++stats.contained; break;
            case Verdict::No:
                ++stats.violations;
                stats.violation_trials.push_back(i);
                break;
            case Verdict::Indeterminate: ++stats.indeterminate; break;
        }
    }
    return stats;
}

}  // namespace

SampleStats erdos_sos_sample(int n, int d, int trials, uint64_t seed, long long budget,
                             int jobs) {
    if (n < 2 || d < 1) throw Error("precondition", "need n >= 2 and d >= 1");
    long long m = (long long)(d - 1) * n / 2 + 1;
    if (m > (long long)n * (n - 1) / 2)
        throw Error("precondition", "edge demand exceeds complete graph");
    jobs = std::max(1, jobs);
    if (jobs == 1) return run_trials(n, d, 0, trials, seed, budget);
    std::vector<std::future<SampleStats>> futs;
    int chunk = (trials + jobs - 1) / jobs;
    for (int lo = 0; lo < trials; lo += chunk)
        futs.push_back(std::async(std::launch::async, run_trials, n, d, lo,
                                  std::min(trials, lo + chunk), seed, budget));
    SampleStats total;
    for (auto& f : futs) {
        SampleStats s = f.get();
        total.trials += s.trials;
        total.contained += s.contained;
        total.violations += s.violations;
        total.indeterminate += s.indeterminate;
        total.violation_trials.insert(total.violation_trials.end(), s.violation_trials.begin(),
                                      s.violation_trials.end());
    }
    std::sort(total.violation_trials.begin(), total.violation_trials.end());
    return total;
}

}  // namespace esos
