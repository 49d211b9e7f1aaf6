#include <set>

#include "doctest.h"
#include "esos/graph.hpp"
#include "esos/graph_io.hpp"
#include "esos/rational.hpp"
#include "esos/rng.hpp"
#include "esos/tree.hpp"
#include "helpers.hpp"

using namespace esos;
using namespace esos::testing;

TEST_CASE("rational arithmetic and normalization") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(7, 3) * Rat(3, 7) == Rat(1));
    CHECK(Rat(1, 3) - Rat(1, 2) == Rat(-1, 6));
    CHECK(Rat(5, 2) / Rat(5, 4) == Rat(2));
    CHECK(Rat(1, 2) < Rat(2, 3));
    CHECK(Rat(-5).abs() == Rat(5));
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(-7, 2).ceil() == -3);
    CHECK(Rat(6, 3).is_integer());
    CHECK(Rat(0).str() == "0");
    CHECK(Rat(-3, 4).str() == "-3/4");
    CHECK(Rat::parse("22/7") == Rat(22, 7));
    CHECK(Rat::parse("-5") == Rat(-5));
    CHECK(Rat::parse(Rat(355, 113).str()) == Rat(355, 113));
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("floor and ceiling halves agree on (k+1)/2 vs k/2") {
    for (int k = -100; k <= 100; ++k) CHECK(Rat(k + 1, 2).floor() == Rat(k, 2).ceil());
}

TEST_CASE("graph construction accepts only simple edges in range") {
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 1}, {3, 0}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{-1, 0}}), Error);
}

TEST_CASE("neighbor lists are sorted and degrees satisfy handshake") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng = derived_rng(9000, seed);
        int n = rng_range(rng, 1, 24);
        long long cap = (long long)n * (n - 1) / 2;
        long long m = (long long)rng_below(rng, (uint64_t)cap + 1);
        Graph g = random_graph(n, m, seed + 77);
        CHECK(g.edge_count() == m);
        long long degsum = 0;
        for (int v = 0; v < n; ++v) {
            degsum += g.degree(v);
            CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
        }
        CHECK(degsum == 2 * m);
        CHECK(g.min_degree() <= g.max_degree());
    }
}

TEST_CASE("edge counting between and within vertex sets") {
    Graph g = complete_bipartite(3, 4);
    CHECK(g.edges_between(iota_vec(0, 3), iota_vec(3, 7)) == 12);
    CHECK(g.edges_within(iota_vec(0, 3)) == 0);
    CHECK(g.edges_within(iota_vec(0, 7)) == 12);
    Graph k5 = complete_graph(5);
    CHECK(k5.edges_within(iota_vec(0, 4)) == 6);
    CHECK(k5.edges_between({0, 1}, {2, 3, 4}) == 6);
}

TEST_CASE("induced subgraph labels compose back to the root graph") {
    Graph g = path_graph(6);
    Graph h = g.induced({1, 2, 3, 5});
    CHECK(h.order() == 4);
    CHECK(h.edge_count() == 2);
    CHECK(h.labels() == std::vector<int>{1, 2, 3, 5});
    Graph hh = h.induced({1, 2});
    CHECK(hh.labels() == std::vector<int>{2, 3});
    CHECK(hh.edge_count() == 1);
}

TEST_CASE("edge removal and addition preserve labels and validate input") {
    Graph g = cycle_graph(5).induced({0, 1, 2, 3});
    Graph h = g.without_edges({{0, 1}});
    CHECK(h.edge_count() == g.edge_count() - 1);
    CHECK(h.labels() == g.labels());
    Graph k = h.with_extra_edges({{0, 1}});
    CHECK(k.edge_count() == g.edge_count());
    CHECK_THROWS_AS(g.with_extra_edges({{0, 1}}), Error);
}

TEST_CASE("components, connectivity and BFS distances") {
    Graph g = two_cliques_bridge();
    CHECK(g.connected());
    CHECK(g.components().size() == 1);
    Graph h = g.without_edges({{4, 5}});
    CHECK_FALSE(h.connected());
    CHECK(h.components().size() == 2);
    Graph p = path_graph(7);
    auto dist = p.distances_from(0);
    for (int i = 0; i < 7; ++i) CHECK(dist[i] == i);
    auto order = p.bfs_order(3);
    CHECK(order[0] == 3);
    CHECK(order.size() == 7);
}

TEST_CASE("min degree subgraph achieves the average-degree bound") {
    for (uint64_t seed = 0; seed < 300; ++seed) {
        Rng rng = derived_rng(9100, seed);
        int n = rng_range(rng, 2, 20);
        long long cap = (long long)n * (n - 1) / 2;
        long long m = 1 + (long long)rng_below(rng, (uint64_t)cap);
        Graph g = random_graph(n, m, seed + 31);
        Rat x(m, n);
        Graph h = min_degree_subgraph(g, x);
        CHECK(h.order() > 0);
        CHECK(Rat(h.min_degree()) >= x);
    }
}

TEST_CASE("densest component keeps the best edge-to-order ratio") {
    std::vector<Edge> es;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) es.emplace_back(u, v);
    es.emplace_back(4, 5);
    Graph g = Graph::from_edges(6, es);
    Graph d = densest_component(g);
    CHECK(d.order() == 4);
    CHECK(d.edge_count() == 6);
}

TEST_CASE("bipartition two-colors even structures and witnesses odd ones") {
    auto bp = bipartition(complete_bipartite(3, 5));
    CHECK(bp.bipartite);
    CHECK(bp.side_x.size() + bp.side_y.size() == 8);
    auto odd = bipartition(cycle_graph(5));
    CHECK_FALSE(odd.bipartite);
    CHECK(odd.odd_walk.size() % 2 == 0);
    CHECK(odd.odd_walk.size() >= 4);
    for (size_t i = 0; i + 1 < odd.odd_walk.size(); ++i)
        CHECK(cycle_graph(5).has_edge(odd.odd_walk[i], odd.odd_walk[i + 1]));
    CHECK(odd.odd_walk.front() == odd.odd_walk.back());
}

TEST_CASE("tree structure, sides and the balanced-part lower bound") {
    Tree t = path_tree(6);
    CHECK(t.order() == 6);
    CHECK(t.edge_count() == 5);
    CHECK(t.max_degree() == 2);
    CHECK(t.part_x().size() == 3);
    CHECK(t.side(0) == 0);
    CHECK(t.side(1) == 1);
    CHECK_THROWS_AS(Tree::from_graph(cycle_graph(4)), Error);
    CHECK_THROWS_AS(Tree::from_graph(Graph::from_edges(4, {{0, 1}, {2, 3}})), Error);

    for (uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng = derived_rng(9200, seed);
        int k = rng_range(rng, 1, 60);
        int dmax = rng_range(rng, 2, 5);
        Tree r = random_tree(k, dmax, seed);
        long long k1 = (long long)std::min(r.part_x().size(), r.part_y().size());
        CHECK(Rat(k1) >= Rat(r.order(), 2 * r.max_degree()));
    }
}

TEST_CASE("parents, subtree sizes and leaves agree with the shape") {
    Tree t = star_tree(4);
    auto par = t.parents(0);
    for (int i = 1; i <= 4; ++i) CHECK(par[i] == 0);
    CHECK(par[0] == -1);
    auto sz = t.subtree_sizes(0);
    CHECK(sz[0] == 5);
    for (int i = 1; i <= 4; ++i) CHECK(sz[i] == 1);
    auto lv = t.leaves();
    CHECK(lv.size() == 4);
    Tree p = path_tree(5);
    CHECK(p.leaves() == std::vector<int>{0, 4});
    CHECK(p.subtree_sizes(0)[2] == 3);
}

TEST_CASE("embedding validation flags clashes and missing edges") {
    Tree t = path_tree(3);
    Graph g = complete_graph(4);
    Embedding f(3);
    f.assign(0, 1);
    f.assign(1, 2);
    auto partial = f.validate(t, g);
    CHECK(partial.valid_partial());
    CHECK_FALSE(partial.total);
    CHECK(partial.unassigned == std::vector<int>{2});
    f.assign(2, 3);
    CHECK(f.validate(t, g).valid());

    Embedding clash(3);
    clash.assign(0, 1);
    clash.assign(1, 1);
    clash.assign(2, 2);
    auto rep = clash.validate(t, g);
    CHECK_FALSE(rep.injective);
    CHECK_FALSE(rep.clashes.empty());

    Graph sparse = path_graph(4);
    Embedding miss(3);
    miss.assign(0, 0);
    miss.assign(1, 1);
    miss.assign(2, 3);
    auto rep2 = miss.validate(t, sparse);
    CHECK_FALSE(rep2.edges_preserved);
    CHECK(rep2.missing_edges.size() == 1);
}

TEST_CASE("graph serialization round-trips byte for byte") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng = derived_rng(9300, seed);
        int n = rng_range(rng, 1, 20);
        long long cap = (long long)n * (n - 1) / 2;
        Graph g = random_graph(n, (long long)rng_below(rng, (uint64_t)cap + 1), seed);
        std::string text = serialize_graph(g);
        Graph back = parse_graph(text);
        CHECK(back == g);
        CHECK(serialize_graph(back) == text);
    }
    Tree t = random_tree(12, 3, 5);
    CHECK(parse_tree(serialize_tree(t)).graph() == t.graph());
}

TEST_CASE("graph parser reports malformed input") {
    CHECK_THROWS_AS(parse_graph(""), Error);
    CHECK_THROWS_AS(parse_graph("graph x y\n"), Error);
    CHECK_THROWS_AS(parse_graph("graph 3 1\n0 zero\n"), Error);
    CHECK_THROWS_AS(parse_graph("graph 3 2\n0 1\n"), Error);
    CHECK_THROWS_AS(parse_graph("graph 3 1\n0 1\n1 2\n"), Error);
    CHECK_THROWS_AS(parse_tree(serialize_graph(cycle_graph(4))), Error);
}

TEST_CASE("content digest is stable and collision-averse on small edits") {
    std::string a = serialize_graph(complete_graph(5));
    CHECK(content_digest(a) == content_digest(a));
    CHECK(content_digest(a) != content_digest(a + " "));
    CHECK(content_digest(a).size() == 16);
}

TEST_CASE("derived rng streams are deterministic and independent") {
    Rng a = derived_rng(42, 7);
    Rng b = derived_rng(42, 7);
    for (int i = 0; i < 20; ++i) CHECK(a() == b());
    Rng c = derived_rng(42, 8);
    bool differs = false;
    Rng a2 = derived_rng(42, 7);
    for (int i = 0; i < 20; ++i) differs |= (a2() != c());
    CHECK(differs);
}

TEST_CASE("rng sample returns distinct indices inside the range") {
    Rng rng = derived_rng(17, 0);
    for (int trial = 0; trial < 50; ++trial) {
        int n = rng_range(rng, 1, 30);
        int k = rng_range(rng, 0, n);
        auto s = rng_sample(rng, n, k);
        CHECK((int)s.size() == k);
        std::set<int> uniq(s.begin(), s.end());
        CHECK((int)uniq.size() == k);
        for (int v : s) {
            CHECK(v >= 0);
            CHECK(v < n);
        }
    }
}
