#include <set>

#include "doctest.h"
#include "esos/constructions.hpp"
#include "esos/cut_density.hpp"
#include "helpers.hpp"

using namespace esos;
using namespace esos::testing;

namespace {

Rat cut_ratio(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    return Rat(g.edges_between(a, b), (long long)a.size() * (long long)b.size());
}

void check_witness(const Graph& g, const KappaResult& res) {
    const auto& w = res.witness;
    CHECK(w.side_a.size() + w.side_b.size() == (size_t)g.order());
    CHECK_FALSE(w.side_a.empty());
    CHECK_FALSE(w.side_b.empty());
    std::set<int> all(w.side_a.begin(), w.side_a.end());
    all.insert(w.side_b.begin(), w.side_b.end());
    CHECK(all.size() == (size_t)g.order());
    CHECK(std::count(w.side_a.begin(), w.side_a.end(), 0) == 1);
    CHECK(cut_ratio(g, w.side_a, w.side_b) == res.kappa);
    CHECK(w.ratio == res.kappa);
}

Graph random_overlap_union(uint64_t seed, Graph& g1_out, Graph& g2_out, int& inter,
                           int& total) {
    Rng rng = derived_rng(8800, seed);
    int a = rng_range(rng, 4, 8);       // |V1|
    int olap = rng_range(rng, 1, 3);    // shared vertices
    int b = rng_range(rng, 4, 8);       // |V2|
    total = a + b - olap;
    inter = olap;
    auto dense_edges = [&](int lo, int hi) {
        std::vector<Edge> es;
        for (int u = lo; u < hi; ++u)
            for (int v = u + 1; v < hi; ++v)
                if (!rng_chance(rng, 1, 5)) es.emplace_back(u, v);
        return es;
    };
    auto e1 = dense_edges(0, a);
    auto e2 = dense_edges(a - olap, total);
    g1_out = Graph::from_edges(total, e1).induced(iota_vec(0, a));
    g2_out = Graph::from_edges(total, e2).induced(iota_vec(a - olap, total));
    std::set<Edge> merged(e1.begin(), e1.end());
    merged.insert(e2.begin(), e2.end());
    return Graph::from_edges(total, {merged.begin(), merged.end()});
}

}  // namespace

TEST_CASE("exact cut density on closed-form graphs") {
    auto kn = kappa_exact(complete_graph(6));
    CHECK(kn.kappa == Rat(1));
    CHECK(kn.exact);
    check_witness(complete_graph(6), kn);

    auto c4 = kappa_exact(cycle_graph(4));
    CHECK(c4.kappa == Rat(1, 2));
    CHECK(c4.witness.side_a.size() == 2);
    check_witness(cycle_graph(4), c4);

    auto c8 = kappa_exact(cycle_graph(8));
    CHECK(c8.kappa == Rat(1, 8));

    Graph split = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
    auto disc = kappa_exact(split);
    CHECK(disc.kappa == Rat(0));
    check_witness(split, disc);

    CHECK_THROWS_AS(kappa_exact(Graph::empty(1)), Error);
    CHECK_THROWS_AS(kappa_exact(complete_graph(21)), Error);
}

TEST_CASE("local search matches exact cut density on small graphs") {
    auto k6 = sparse_cut_search(complete_graph(6), 40, 3);
    CHECK(k6.kappa == Rat(1));
    CHECK_FALSE(k6.exact);

    auto bridged = sparse_cut_search(two_cliques_bridge(), 40, 3);
    CHECK(bridged.kappa == Rat(1, 25));

    for (uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng = derived_rng(8700, seed);
        int n = rng_range(rng, 2, 12);
        long long cap = (long long)n * (n - 1) / 2;
        Graph g = random_graph(n, (long long)rng_below(rng, (uint64_t)cap + 1), seed);
        auto exact = kappa_exact(g);
        auto local = sparse_cut_search(g, 40, seed);
        CHECK(local.kappa >= exact.kappa);
        CHECK(cut_ratio(g, local.witness.side_a, local.witness.side_b) == local.kappa);
        CHECK(local.kappa == exact.kappa);
    }
}

TEST_CASE("cut density implies the degree and edge count floors") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng = derived_rng(8600, seed);
        int n = rng_range(rng, 10, 16);
        long long cap = (long long)n * (n - 1) / 2;
        long long m = cap / 2 + (long long)rng_below(rng, (uint64_t)(cap / 2) + 1);
        Graph g = random_graph(n, m, seed);
        Rat p = kappa_exact(g).kappa;
        CHECK(Rat(g.min_degree()) >= p * Rat(n - 1));
        CHECK(Rat(g.edge_count()) >= p * Rat(n) * Rat(n) / Rat(4));
    }
}

TEST_CASE("cut-dense union bound holds exactly on overlapping pairs") {
    int checked = 0;
    for (uint64_t seed = 0; seed < 80; ++seed) {
        Graph g1, g2;
        int inter = 0, total = 0;
        Graph u = random_overlap_union(seed, g1, g2, inter, total);
        Rat q = std::min(kappa_exact(g1).kappa, kappa_exact(g2).kappa);
        if (q == Rat(0)) continue;
        ++checked;
        CHECK(kappa_exact(u).kappa >= q * Rat(inter) / (Rat(4) * Rat(total)));
    }
    CHECK(checked >= 40);
}

TEST_CASE("cut-dense extension bound holds exactly on attached vertices") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng = derived_rng(8500, seed);
        int m = rng_range(rng, 5, 9);
        int extra = rng_range(rng, 1, 4);
        int h = m + extra;
        Rat delta(rng_range(rng, 1, m), m);
        long long need = (delta * Rat(m)).ceil();
        std::vector<Edge> es;
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v)
                if (!rng_chance(rng, 1, 6)) es.emplace_back(u, v);
        Graph core = Graph::from_edges(h, es).induced(iota_vec(0, m));
        Rat q = kappa_exact(core).kappa;
        if (q == Rat(0)) continue;
        for (int v = m; v < h; ++v) {
            auto targets = rng_sample(rng, m, (int)need);
            for (int t : targets) es.emplace_back(t, v);
            if (v > m && rng_chance(rng, 1, 2)) es.emplace_back(v - 1, v);
        }
        Graph ext = Graph::from_edges(h, es);
        Rat bound = q * delta * Rat(m) * Rat(m) / (Rat(4) * Rat(h) * Rat(h));
        CHECK(kappa_exact(ext).kappa >= bound);
    }
}

TEST_CASE("decomposition removes exactly the violating cuts") {
    Graph g = two_cliques_bridge();
    auto dec = cut_dense_decomposition(g, Rat(1, 10), Caps{}, 1);
    CHECK(dec.exact);
    CHECK(dec.deleted_edges == std::vector<Edge>{{4, 5}});
    CHECK(dec.components.size() == 2);
    for (const auto& comp : dec.components) {
        Graph sub = g.induced(comp);
        CHECK(sub.order() == 5);
        CHECK(sub.edge_count() == 10);
    }

    auto whole = cut_dense_decomposition(complete_graph(6), Rat(1, 2), Caps{}, 1);
    CHECK(whole.deleted_edges.empty());
    CHECK(whole.components.size() == 1);

    auto empty = cut_dense_decomposition(Graph::empty(0), Rat(1, 10), Caps{}, 1);
    CHECK(empty.components.empty());
    CHECK(empty.deleted_edges.empty());
}

TEST_CASE("decomposition residue is cut-dense with bounded deletions") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng = derived_rng(8400, seed);
        int n = rng_range(rng, 2, 14);
        long long cap = (long long)n * (n - 1) / 2;
        Graph g = random_graph(n, (long long)rng_below(rng, (uint64_t)cap + 1), seed);
        Rat q(1, rng_range(rng, 4, 12));
        auto dec = cut_dense_decomposition(g, q, Caps{}, seed);
        CHECK(dec.exact);
        CHECK(Rat((long long)dec.deleted_edges.size()) <= q * Rat(n) * Rat(n));
        Graph residue = g.without_edges(dec.deleted_edges);
        long long residue_edges = 0;
        for (const auto& comp : dec.components) {
            Graph sub = residue.induced(comp);
            residue_edges += sub.edge_count();
            if (sub.order() >= 2) CHECK(kappa_exact(sub).kappa >= q);
        }
        CHECK(residue_edges + (long long)dec.deleted_edges.size() == g.edge_count());
    }
}

TEST_CASE("finding one cut-dense subgraph under the density precondition") {
    Graph k10 = complete_graph(10);
    Graph found = find_cut_dense_subgraph(k10, Rat(1, 5), Caps{}, 1);
    CHECK(found.order() == 10);
    CHECK(found.edge_count() == 45);

    CHECK_THROWS_AS(find_cut_dense_subgraph(k10, Rat(1, 4), Caps{}, 1), Error);

    Graph bridged = two_cliques_bridge();
    Graph part = find_cut_dense_subgraph(bridged, Rat(1, 20), Caps{}, 1);
    CHECK(part.order() == 5);
    CHECK(part.edge_count() == 10);
    CHECK(Rat(part.order()) >= Rat(1, 20) * Rat(10));

    std::vector<Edge> sparse;
    for (int i = 0; i < 10; ++i) sparse.emplace_back(2 * i, 2 * i + 1);
    CHECK_THROWS_AS(find_cut_dense_subgraph(Graph::from_edges(20, sparse), Rat(1, 5), Caps{}, 1),
                    Error);
}

TEST_CASE("dominated decomposition covers the small side with cores") {
    Graph g = complete_bipartite(5, 50);
    std::vector<int> px = iota_vec(0, 5), py = iota_vec(5, 55);
    ParamProfile prof;
    prof.p = Rat(1, 10);
    auto dd = dominated_decomposition(g, px, py, prof.p, 10, prof, 1);
    CHECK_FALSE(dd.exact);
    CHECK(dd.components.size() == 1);
    CHECK(dd.cores.size() == 1);
    CHECK(dd.deleted_edges.empty());
    std::set<int> core_set(dd.cores[0].begin(), dd.cores[0].end());
    for (int x : px) CHECK(core_set.count(x) == 1);
    CHECK(dd.core_kappa[0] >= Rat(1, 100));

    auto none = dominated_decomposition(Graph::empty(8), iota_vec(0, 3), iota_vec(3, 8),
                                        prof.p, 4, prof, 1);
    CHECK(none.components.empty());

    Graph small = complete_bipartite(3, 12);
    auto sd = dominated_decomposition(small, iota_vec(0, 3), iota_vec(3, 15), Rat(2, 5), 5,
                                      prof, 1);
    CHECK(sd.exact);
    CHECK(sd.components.size() == 1);
    std::set<int> small_core(sd.cores[0].begin(), sd.cores[0].end());
    for (int x = 0; x < 3; ++x) CHECK(small_core.count(x) == 1);
    CHECK(sd.core_kappa[0] >= Rat(4, 25));
}

TEST_CASE("dominated decomposition splits independent blocks apart") {
    Graph one = complete_bipartite(5, 50);
    int n1 = one.order();
    std::vector<Edge> es = one.edges();
    for (const auto& [u, v] : one.edges()) es.emplace_back(u + n1, v + n1);
    Graph two = Graph::from_edges(2 * n1, es);
    std::vector<int> px, py;
    for (int x = 0; x < 5; ++x) {
        px.push_back(x);
        px.push_back(x + n1);
    }
    for (int y = 5; y < 55; ++y) {
        py.push_back(y);
        py.push_back(y + n1);
    }
    std::sort(px.begin(), px.end());
    std::sort(py.begin(), py.end());
    ParamProfile prof;
    auto dd = dominated_decomposition(two, px, py, Rat(1, 10), 10, prof, 1);
    CHECK(dd.components.size() == 2);
    CHECK(dd.cores.size() == 2);
    CHECK(dd.deleted_edges.empty());
    CHECK(dd.core_kappa.size() == 2);
}
