#include "esos/cut_density.hpp"

#include <algorithm>
#include <bit>

#include "esos/rng.hpp"

namespace esos {

namespace {

// Lexicographic order on the ascending vertex lists encoded by two bitmasks.
bool mask_lex_less(uint64_t m1, uint64_t m2) {
    uint64_t x = m1 ^ m2;
    if (x == 0) return false;
    uint64_t b = x & (~x + 1);
    uint64_t above = ~((b << 1) - 1);
    if (b << 1 == 0) above = 0;
    if (m1 & b) return (m2 & above) != 0;
    return (m1 & above) == 0;
}

bool ratio_less(long long c1, long long d1, long long c2, long long d2) {
    return (__int128)c1 * d2 < (__int128)c2 * d1;
}

struct CutState {
    const Graph* g;
    std::vector<char> in_b;
    int size_b = 0;
    long long cross = 0;

    void reset(const std::vector<int>& b_side) {
        int n = g->order();
        in_b.assign(n, 0);
        for (int v : b_side) in_b[v] = 1;
        size_b = (int)b_side.size();
        cross = 0;
        for (const auto& [u, v] : g->edges())
            if (in_b[u] != in_b[v]) ++cross;
    }

    long long cross_after_toggle(int v) const {
        long long cnt = 0;
        for (int w : g->neighbors(v)) cnt += in_b[w];
        return in_b[v] ? cross + 2 * cnt - g->degree(v) : cross + g->degree(v) - 2 * cnt;
    }

    void toggle(int v) {
        cross = cross_after_toggle(v);
        size_b += in_b[v] ? -1 : 1;
        in_b[v] = !in_b[v];
    }

    long long denom() const {
        return (long long)size_b * (g->order() - size_b);
    }

    // Steepest descent on the cut ratio by single-vertex moves.
    void descend() {
        int n = g->order();
        for (;;) {
            int best = -1;
            long long best_c = 0, best_d = 1;
            for (int v = 0; v < n; ++v) {
                if (in_b[v] ? size_b == 1 : size_b == n - 1) continue;
                long long c = cross_after_toggle(v);
                long long sb = size_b + (in_b[v] ? -1 : 1);
                long long d = sb * (n - sb);
                if (best == -1 ? ratio_less(c, d, cross, denom())
                               : ratio_less(c, d, best_c, best_d)) {
                    best = v;
                    best_c = c;
                    best_d = d;
                }
            }
            if (best == -1) return;
            toggle(best);
        }
    }

    CutWitness witness() const {
        CutWitness w;
        bool zero_in_b = in_b[0];
        for (int v = 0; v < g->order(); ++v)
            (in_b[v] == zero_in_b ? w.side_a : w.side_b).push_back(v);
        w.ratio = Rat(cross, denom());
        return w;
    }
};

}  // namespace

KappaResult kappa_exact(const Graph& g, int cap) {
    int n = g.order();
    if (n < 2) throw Error("precondition", "cut density needs at least 2 vertices");
    if (n > cap)
        throw Error("cap", "kappa_exact supports at most " + std::to_string(cap) +
                               " vertices, got " + std::to_string(n) +
                               "; use sparse_cut_search");
    auto masks = g.adjacency_masks();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    // B ranges over nonempty subsets of {1..n-1}; vertex 0 stays on side A,
    // which covers each bipartition exactly once.
    uint64_t bmask = 0;
    long long cross = 0;
    int bsize = 0;
    long long best_c = -1, best_d = 1;
    uint64_t best_mask = 0;
    uint64_t total = 1ULL << (n - 1);
    for (uint64_t i = 1; i < total; ++i) {
        int v = std::countr_zero(i) + 1;
        long long cnt = (long long)std::popcount(masks[v] & bmask);
        if (bmask & (1ULL << v)) {
            cross += 2 * cnt - deg[v];
            --bsize;
        } else {
            cross += deg[v] - 2 * cnt;
            ++bsize;
        }
        bmask ^= 1ULL << v;
        long long d = (long long)bsize * (n - bsize);
        if (best_c < 0 || ratio_less(cross, d, best_c, best_d) ||
            (!ratio_less(best_c, best_d, cross, d) && mask_lex_less(bmask, best_mask))) {
            best_c = cross;
            best_d = d;
            best_mask = bmask;
        }
    }

    KappaResult res;
    res.kappa = Rat(best_c, best_d);
    res.exact = true;
    for (int v = 0; v < n; ++v)
        ((best_mask >> v) & 1 ? res.witness.side_b : res.witness.side_a).push_back(v);
    res.witness.ratio = res.kappa;
    return res;
}

KappaResult sparse_cut_search(const Graph& g, int rounds, uint64_t seed) {
    int n = g.order();
    if (n < 2) throw Error("precondition", "cut density needs at least 2 vertices");
    if (rounds < 0) throw Error("precondition", "rounds must be nonnegative");

    CutState st;
    st.g = &g;
    bool have = false;
    long long best_c = 0, best_d = 1;
    std::vector<int> best_b;

    auto consider = [&](const std::vector<int>& start) {
        st.reset(start);
        st.descend();
        CutWitness w = st.witness();
        // Canonical B side: the one without vertex 0.
        const std::vector<int>& bside = w.side_b;
        long long c = st.cross, d = st.denom();
        if (!have || ratio_less(c, d, best_c, best_d) ||
            (!ratio_less(best_c, best_d, c, d) && bside < best_b)) {
            have = true;
            best_c = c;
            best_d = d;
            best_b = bside;
        }
    };

    for (int v = 1; v < n; ++v) consider({v});
    if (n >= 3) {
        for (int r = 0; r < rounds; ++r) {
            Rng rng = derived_rng(seed, (uint64_t)r);
            std::vector<int> start;
            for (int tries = 0; tries < 100; ++tries) {
                start.clear();
                for (int v = 1; v < n; ++v)
                    if (rng_chance(rng, 1, 2)) start.push_back(v);
                if (!start.empty() && (int)start.size() < n - 1) break;
            }
            if (start.empty() || (int)start.size() >= n - 1) start = {1 + r % (n - 1)};
            consider(start);
        }
    }

    KappaResult res;
    res.kappa = Rat(best_c, best_d);
    res.exact = false;
    std::vector<char> in_b(n, 0);
    for (int v : best_b) in_b[v] = 1;
    for (int v = 0; v < n; ++v)
        (in_b[v] ? res.witness.side_b : res.witness.side_a).push_back(v);
    res.witness.ratio = res.kappa;
    return res;
}

namespace {

KappaResult kappa_auto(const Graph& g, const Caps& caps, uint64_t seed) {
    if (g.order() <= caps.kappa_exact) return kappa_exact(g, caps.kappa_exact);
    return sparse_cut_search(g, caps.sample_count, seed);
}

}  // namespace

Decomposition cut_dense_decomposition(const Graph& g, const Rat& q, const Caps& caps,
                                      uint64_t seed) {
    if (q <= Rat(0)) throw Error("precondition", "q must be positive");
    Decomposition out;
    Graph current = g;
    out.exact = true;
    uint64_t ctr = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& comp : current.components()) {
            if ((int)comp.size() < 2) continue;
            Graph h = current.induced(comp);
            KappaResult kr = kappa_auto(h, caps, splitmix64(seed + ++ctr));
            out.exact = out.exact && kr.exact;
            if (kr.kappa >= q) continue;
            std::vector<char> in_a(h.order(), 0);
            for (int v : kr.witness.side_a) in_a[v] = 1;
            std::vector<Edge> cut;
            const auto& lab = h.labels();
            for (const auto& [u, v] : h.edges())
                if (in_a[u] != in_a[v])
                    cut.emplace_back(std::min(lab[u], lab[v]), std::max(lab[u], lab[v]));
            out.deleted_edges.insert(out.deleted_edges.end(), cut.begin(), cut.end());
            current = current.without_edges(cut);
            changed = true;
            break;
        }
    }
    out.components = current.components();
    std::sort(out.deleted_edges.begin(), out.deleted_edges.end());
    return out;
}

Graph find_cut_dense_subgraph(const Graph& g, const Rat& q, const Caps& caps, uint64_t seed) {
    long long n = g.order();
    if (n < 1) throw Error("precondition", "graph is empty");
    if (Rat(g.edge_count()) < q * Rat(2 * n * n))
        throw Error("precondition", "insufficient density: e(G) < 2q|G|^2 (e=" +
                                        std::to_string(g.edge_count()) + ", need >= " +
                                        (q * Rat(2 * n * n)).str() + ")");
    Decomposition dec = cut_dense_decomposition(g, q, caps, seed);
    Graph residue = g.without_edges(dec.deleted_edges);

    Rat deg_floor = q * Rat(2 * n);
    int pivot = -1;
    for (int v = 0; v < n; ++v)
        if (Rat(residue.degree(v)) >= deg_floor) {
            pivot = v;
            break;
        }
    if (pivot == -1) {
        if (dec.exact)
            throw Error("internal", "no residue vertex of degree >= 2q|G| despite exact cuts");
        throw Error("infeasible", "no qualifying subgraph found (heuristic cut checks)");
    }
    for (const auto& comp : residue.components()) {
        if (std::find(comp.begin(), comp.end(), pivot) == comp.end()) continue;
        Graph h = residue.induced(comp);
        if (Rat(h.order()) < q * Rat(n))
            throw Error("internal", "cut-dense component smaller than q|G|");
        if (h.order() >= 2 && h.order() <= caps.kappa_exact &&
            kappa_exact(h, caps.kappa_exact).kappa < q)
            throw Error("internal", "residue component is not q-cut-dense");
        return h;
    }
    throw Error("internal", "pivot vertex missing from residue components");
}

DominatedDecomposition dominated_decomposition(const Graph& g, const std::vector<int>& part_x,
                                               const std::vector<int>& part_y, const Rat& p,
                                               int k, const ParamProfile& prof, uint64_t seed) {
    int n = g.order();
    if (k < 1) throw Error("precondition", "k must be positive");
    if (p <= Rat(0) || p > Rat(1)) throw Error("precondition", "p must lie in (0,1]");
    std::vector<int> side(n, -1);
    for (int v : part_x) {
        if (v < 0 || v >= n || side[v] != -1)
            throw Error("precondition", "part_x is not a valid vertex set");
        side[v] = 0;
    }
    for (int v : part_y) {
        if (v < 0 || v >= n || side[v] != -1)
            throw Error("precondition", "part_y overlaps part_x or is invalid");
        side[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (side[v] == -1) throw Error("precondition", "parts do not cover the vertex set");
    for (const auto& [u, v] : g.edges())
        if (side[u] == side[v])
            throw Error("precondition", "graph is not bipartite with the given parts");

    Rat q_core = prof.coeff("dom_core_q", p * p);
    Rat order_floor = prof.coeff("dom_core_order", p * p * Rat(k));
    Rat attach_floor = prof.coeff("dom_attach", p * p * Rat(k));
    Rat join_slack = prof.coeff("dom_join_slack", Rat(1, 4));

    DominatedDecomposition out;
    Decomposition dec = cut_dense_decomposition(g, q_core, prof.caps, seed);
    out.exact = dec.exact;

    std::vector<std::vector<int>> cores;
    std::vector<Rat> kappa;
    uint64_t ctr = 1u << 20;
    for (const auto& comp : dec.components) {
        if ((int)comp.size() < 2 || Rat((long long)comp.size()) < order_floor) continue;
        KappaResult kr = kappa_auto(g.induced(comp), prof.caps, splitmix64(seed + ++ctr));
        out.exact = out.exact && kr.exact;
        cores.push_back(comp);
        kappa.push_back(kr.kappa);
    }

    // Join cores that remain dense together inside the original graph.
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < cores.size() && !merged; ++i) {
            for (size_t j = i + 1; j < cores.size() && !merged; ++j) {
                std::vector<int> uni = cores[i];
                uni.insert(uni.end(), cores[j].begin(), cores[j].end());
                std::sort(uni.begin(), uni.end());
                KappaResult kr = kappa_auto(g.induced(uni), prof.caps, splitmix64(seed + ++ctr));
                out.exact = out.exact && kr.exact;
                if (kr.kappa >= join_slack * std::min(kappa[i], kappa[j])) {
                    cores[i] = uni;
                    kappa[i] = kr.kappa;
                    cores.erase(cores.begin() + j);
                    kappa.erase(kappa.begin() + j);
                    merged = true;
                }
            }
        }
    }

    std::vector<char> in_core(n, 0);
    for (const auto& c : cores)
        for (int v : c) in_core[v] = 1;

    std::vector<std::vector<char>> in_s(cores.size(), std::vector<char>(n, 0));
    for (size_t i = 0; i < cores.size(); ++i)
        for (int v : cores[i]) in_s[i][v] = 1;
    for (int v = 0; v < n; ++v) {
        if (in_core[v]) continue;
        for (size_t i = 0; i < cores.size(); ++i) {
            long long cnt = 0;
            for (int w : g.neighbors(v)) cnt += in_s[i][w];
            if (Rat(cnt) >= attach_floor) in_s[i][v] = 1;
        }
    }

    std::vector<int> owner(n, -1);  // unique component, -1 when none or contested
    for (int v = 0; v < n; ++v) {
        int hits = 0, where = -1;
        for (size_t i = 0; i < cores.size(); ++i)
            if (in_s[i][v]) {
                ++hits;
                where = (int)i;
            }
        if (hits == 1) owner[v] = where;
    }

    for (size_t i = 0; i < cores.size(); ++i) {
        std::vector<int> comp;
        std::vector<char> in_final(n, 0);
        for (int v : cores[i]) in_final[v] = 1;
        for (int v = 0; v < n; ++v)
            if (owner[v] == (int)i) {
                comp.push_back(v);
                // The core absorbs the component's X-vertices.
                if (side[v] == 0) in_final[v] = 1;
            }
        std::vector<int> core;
        for (int v = 0; v < n; ++v)
            if (in_final[v]) core.push_back(v);
        out.components.push_back(comp);
        out.cores.push_back(core);
        out.core_kappa.push_back(kappa[i]);
    }

    std::vector<int> comp_of(n, -1);
    for (size_t i = 0; i < out.components.size(); ++i)
        for (int v : out.components[i]) comp_of[v] = (int)i;
    for (const auto& [u, v] : g.edges())
        if (comp_of[u] == -1 || comp_of[u] != comp_of[v]) out.deleted_edges.emplace_back(u, v);
    return out;
}

}  // namespace esos
