#include <map>
#include <set>

#include "doctest.h"
#include "esos/constructions.hpp"
#include "esos/matchings.hpp"
#include "esos/oracles.hpp"
#include "helpers.hpp"

using namespace esos;
using namespace esos::testing;

namespace {

void check_half_matching(const Graph& g, const HalfMatching& fm) {
    std::map<Edge, Rat> weight;
    Rat value(0);
    for (const auto& [e, w] : fm.weights) {
        const auto& [u, v] = e;
        CHECK((w == Rat(1, 2) || w == Rat(1)));
        CHECK(g.has_edge(u, v));
        weight[{std::min(u, v), std::max(u, v)}] = w;
        value = value + w;
    }
    CHECK(value == fm.value);
    for (int v = 0; v < g.order(); ++v) {
        Rat incident(0);
        for (int u : g.neighbors(v)) {
            auto it = weight.find({std::min(u, v), std::max(u, v)});
            if (it != weight.end()) incident = incident + it->second;
        }
        CHECK(incident <= Rat(1));
    }
    Rat cover_total(0);
    CHECK(fm.cover.size() == (size_t)g.order());
    for (const auto& cv : fm.cover) {
        CHECK(cv >= Rat(0));
        cover_total = cover_total + cv;
    }
    for (const auto& [u, v] : g.edges()) CHECK(fm.cover[u] + fm.cover[v] >= Rat(1));
    CHECK(cover_total == fm.value);
}

Graph random_bipartite(Rng& rng, int a, int b, int chance_num, int chance_den) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            if (rng_chance(rng, chance_num, chance_den)) es.emplace_back(u, a + v);
    return Graph::from_edges(a + b, es);
}

}  // namespace

TEST_CASE("bipartite matching with certifying cover on closed forms") {
    auto c4 = max_bipartite_matching(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(c4.matching.size() == 2);
    CHECK(c4.cover_left.size() + c4.cover_right.size() == 2);

    std::vector<Edge> k33;
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) k33.emplace_back(u, v);
    auto m = max_bipartite_matching(3, 3, k33);
    CHECK(m.matching.size() == 3);
    CHECK(m.cover_left.size() + m.cover_right.size() == 3);

    auto empty = max_bipartite_matching(3, 4, {});
    CHECK(empty.matching.empty());
    CHECK(empty.cover_left.empty());
    CHECK(empty.cover_right.empty());
}

TEST_CASE("matching and cover certify each other on random instances") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng = derived_rng(7700, seed);
        int a = rng_range(rng, 1, 8);
        int b = rng_range(rng, 1, 8);
        std::vector<Edge> es;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v)
                if (rng_chance(rng, 1, 3)) es.emplace_back(u, v);
        auto res = max_bipartite_matching(a, b, es);
        CHECK(res.matching.size() == res.cover_left.size() + res.cover_right.size());
        std::set<int> lc(res.cover_left.begin(), res.cover_left.end());
        std::set<int> rc(res.cover_right.begin(), res.cover_right.end());
        for (const auto& [u, v] : es) CHECK((lc.count(u) || rc.count(v)));
        std::set<int> lm, rm;
        for (const auto& [u, v] : res.matching) {
            CHECK(lm.insert(u).second);
            CHECK(rm.insert(v).second);
        }
    }
}

TEST_CASE("graph level Konig cover equals the exhaustive matching number") {
    auto c4 = konig_cover(cycle_graph(4), {0, 2}, {1, 3});
    CHECK(c4.matching.size() == 2);
    CHECK(c4.cover.size() == 2);

    Graph k33 = complete_bipartite(3, 3);
    auto k = konig_cover(k33, iota_vec(0, 3), iota_vec(3, 6));
    CHECK(k.matching.size() == 3);

    for (uint64_t seed = 0; seed < 120; ++seed) {
        Rng rng = derived_rng(7600, seed);
        int a = rng_range(rng, 1, 8);
        int b = rng_range(rng, 1, 8);
        Graph g = random_bipartite(rng, a, b, 1, 3);
        auto res = konig_cover(g, iota_vec(0, a), iota_vec(a, a + b));
        CHECK((int)res.matching.size() == max_matching_bruteforce(g));
        CHECK(res.matching.size() == res.cover.size());
        std::set<int> cov(res.cover.begin(), res.cover.end());
        for (const auto& [u, v] : g.edges()) CHECK((cov.count(u) || cov.count(v)));
        for (const auto& [u, v] : res.matching) CHECK(g.has_edge(u, v));
    }

    CHECK_THROWS_AS(konig_cover(complete_graph(3), {0, 1}, {2}), Error);
    CHECK_THROWS_AS(konig_cover(cycle_graph(4), {0, 1}, {1, 2, 3}), Error);
}

TEST_CASE("greedy maximal matching cannot be extended") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng = derived_rng(7500, seed);
        int n = rng_range(rng, 2, 16);
        long long cap = (long long)n * (n - 1) / 2;
        Graph g = random_graph(n, (long long)rng_below(rng, (uint64_t)cap + 1), seed);
        auto match = greedy_maximal_matching(g);
        std::set<int> used;
        for (const auto& [u, v] : match) {
            CHECK(g.has_edge(u, v));
            CHECK(used.insert(u).second);
            CHECK(used.insert(v).second);
        }
        for (const auto& [u, v] : g.edges()) CHECK((used.count(u) || used.count(v)));
    }
}

TEST_CASE("fractional matching on closed forms") {
    CHECK(fractional_matching(Graph::from_edges(2, {{0, 1}})).value == Rat(1));
    CHECK(fractional_matching(complete_graph(3)).value == Rat(3, 2));
    CHECK(fractional_matching(path_graph(4)).value == Rat(2));
    CHECK(fractional_matching(cycle_graph(5)).value == Rat(5, 2));
    CHECK(fractional_matching(Graph::empty(4)).value == Rat(0));
    check_half_matching(complete_graph(3), fractional_matching(complete_graph(3)));
}

TEST_CASE("fractional matching equals brute force with certifying cover") {
    int cross_checked = 0;
    for (uint64_t seed = 0; seed < 300; ++seed) {
        Rng rng = derived_rng(7400, seed);
        int n = rng_range(rng, 1, 12);
        long long cap = (long long)n * (n - 1) / 2;
        Graph g = random_graph(n, (long long)rng_below(rng, (uint64_t)cap + 1), seed);
        HalfMatching fm = fractional_matching(g);
        check_half_matching(g, fm);
        if (g.edge_count() <= 12) {
            CHECK(fm.value == fractional_matching_bruteforce(g));
            ++cross_checked;
        }
    }
    CHECK(cross_checked >= 150);
}

TEST_CASE("half-integral matchings unfold into twice as many half pairs") {
    Graph tri = complete_graph(3);
    auto pairs = matching_from_fractional(tri, fractional_matching(tri));
    CHECK(pairs.size() == 3);

    Graph one = Graph::from_edges(2, {{0, 1}});
    CHECK(matching_from_fractional(one, fractional_matching(one)).size() == 2);

    CHECK(matching_from_fractional(Graph::empty(3), fractional_matching(Graph::empty(3)))
              .empty());

    for (uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng = derived_rng(7300, seed);
        int n = rng_range(rng, 1, 14);
        long long cap = (long long)n * (n - 1) / 2;
        Graph g = random_graph(n, (long long)rng_below(rng, (uint64_t)cap + 1), seed);
        HalfMatching fm = fractional_matching(g);
        auto hp = matching_from_fractional(g, fm);
        CHECK(Rat((long long)hp.size()) == Rat(2) * fm.value);
        std::set<std::pair<int, int>> slots;
        for (const auto& p : hp) {
            CHECK(g.has_edge(p.u, p.v));
            CHECK((p.u_half == 0 || p.u_half == 1));
            CHECK((p.v_half == 0 || p.v_half == 1));
            CHECK(slots.insert({p.u, p.u_half}).second);
            CHECK(slots.insert({p.v, p.v_half}).second);
        }
    }
}

TEST_CASE("star collection or long matching under the exchange guarantee") {
    std::vector<Edge> es;
    for (int i = 0; i < 10; ++i) es.emplace_back(2 * i, 2 * i + 1);
    Graph disjoint = Graph::from_edges(20, es);
    auto res = stars_or_matching(disjoint, 1, 2);
    CHECK_FALSE(res.is_stars);
    CHECK(res.matching.size() == 5);

    CHECK_THROWS_AS(stars_or_matching(path_graph(30), 2, 2), Error);
    CHECK_THROWS_AS(stars_or_matching(disjoint, 1, 3), Error);

    Graph dom = dominating_construction(60, 5);
    auto stars = stars_or_matching(dom, 2, 3);
    CHECK(stars.is_stars);
    CHECK(stars.stars.size() == 2);
    std::set<int> used;
    for (const auto& st : stars.stars) {
        CHECK(st.leaves.size() == 3);
        CHECK(used.insert(st.center).second);
        for (int leaf : st.leaves) {
            CHECK(used.insert(leaf).second);
            CHECK(dom.has_edge(st.center, leaf));
        }
    }
}

TEST_CASE("exchange contract holds across random minimum-degree instances") {
    for (uint64_t seed = 0; seed < 80; ++seed) {
        Rng rng = derived_rng(7200, seed);
        int d = rng_range(rng, 1, 2);
        int delta = rng_range(rng, 2, 3);
        int n = 10 * delta * d + rng_range(rng, 0, 20);
        if (n % 2 == 1) ++n;
        Graph g = regular_graph(n, d + 1, seed);
        auto res = stars_or_matching(g, d, delta);
        std::set<int> used;
        if (res.is_stars) {
            CHECK((int)res.stars.size() == d);
            for (const auto& st : res.stars) {
                CHECK((int)st.leaves.size() == delta);
                CHECK(used.insert(st.center).second);
                for (int leaf : st.leaves) {
                    CHECK(used.insert(leaf).second);
                    CHECK(g.has_edge(st.center, leaf));
                }
            }
        } else {
            CHECK((int)res.matching.size() == 5 * d);
            for (const auto& [u, v] : res.matching) {
                CHECK(g.has_edge(u, v));
                CHECK(used.insert(u).second);
                CHECK(used.insert(v).second);
            }
        }
    }
}
