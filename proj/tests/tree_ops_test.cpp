#include <set>

#include "doctest.h"
#include "esos/constructions.hpp"
#include "esos/tree_ops.hpp"
#include "helpers.hpp"

using namespace esos;
using namespace esos::testing;

namespace {

void check_division(const Tree& t, int m, const TreeDivision& div) {
    CHECK((int)div.side.size() >= m);
    CHECK((int)div.side.size() <= 3 * m);
    std::set<int> side(div.side.begin(), div.side.end());
    CHECK(side.count(div.pivot) == 1);
    long long inner = t.graph().edges_within(div.side);
    std::vector<int> rest{div.pivot};
    for (int v = 0; v < t.order(); ++v)
        if (!side.count(v)) rest.push_back(v);
    long long outer = t.graph().edges_within(rest);
    CHECK(inner + outer == t.edge_count());
    CHECK(t.graph().induced(div.side).connected());
    CHECK(t.graph().induced(rest).connected());
}

void check_split(const Tree& t, const Rat& alpha, const TreeSplit& sp) {
    Rat k(t.order());
    Rat size((long long)sp.side.size());
    CHECK(size >= alpha * k);
    CHECK(size <= Rat(3 * t.max_degree()) * alpha * k);
    CHECK(t.graph().has_edge(sp.edge.first, sp.edge.second));
    std::set<int> side(sp.side.begin(), sp.side.end());
    CHECK(side.count(sp.edge.first) + side.count(sp.edge.second) == 1);
    Graph cut = t.graph().without_edges({sp.edge});
    bool matched = false;
    for (const auto& comp : cut.components())
        if (std::set<int>(comp.begin(), comp.end()) == side) matched = true;
    CHECK(matched);
}

void check_leaves_or_paths(const Tree& t, int len, const LeavesOrPaths& lp) {
    if (lp.is_leaves) {
        CHECK(Rat((long long)lp.leaf_edges.size()) >=
              Rat(t.order(), 10ll * t.max_degree() * len));
        std::set<int> parents, leaves;
        for (const auto& [parent, leaf] : lp.leaf_edges) {
            CHECK(t.graph().has_edge(parent, leaf));
            CHECK(t.graph().degree(leaf) == 1);
            CHECK(parents.insert(parent).second);
            CHECK(leaves.insert(leaf).second);
            CHECK(parents.count(leaf) == 0);
            CHECK(leaves.count(parent) == 0);
        }
    } else {
        CHECK(Rat((long long)lp.paths.size()) >= Rat(t.order(), 10ll * len));
        std::set<int> used;
        for (const auto& path : lp.paths) {
            CHECK((int)path.size() == len + 1);
            for (size_t i = 0; i + 1 < path.size(); ++i)
                CHECK(t.graph().has_edge(path[i], path[i + 1]));
            for (size_t i = 1; i + 1 < path.size(); ++i)
                CHECK(t.graph().degree(path[i]) == 2);
            for (int v : path) CHECK(used.insert(v).second);
        }
    }
}

}  // namespace

TEST_CASE("tree division lands inside the prescribed window") {
    Tree p9 = path_tree(9);
    auto div = divide_tree(p9, 3);
    check_division(p9, 3, div);

    Tree star = star_tree(9);
    check_division(star, 3, divide_tree(star, 3));
    check_division(star, 1, divide_tree(star, 1));

    for (uint64_t seed = 0; seed < 300; ++seed) {
        Rng rng = derived_rng(6600, seed);
        int k = rng_range(rng, 2, 80);
        int dmax = rng_range(rng, 2, 5);
        Tree t = random_tree(k, dmax, seed);
        int m = rng_range(rng, 1, std::max(1, t.order() / 3));
        check_division(t, m, divide_tree(t, m));
    }
}

TEST_CASE("splitting off a subtree respects the alpha window") {
    Tree p100 = path_tree(100);
    auto sp = split_tree_by_edge(p100, Rat(1, 10));
    CHECK((int)sp.side.size() >= 10);
    CHECK((int)sp.side.size() <= 60);
    check_split(p100, Rat(1, 10), sp);

    std::vector<Edge> spider;
    for (int leg = 0; leg < 3; ++leg)
        for (int i = 0; i < 33; ++i)
            spider.emplace_back(i == 0 ? 0 : leg * 33 + i, leg * 33 + i + 1);
    Tree sp3 = Tree::from_graph(Graph::from_edges(100, spider));
    auto sps = split_tree_by_edge(sp3, Rat(1, 20));
    CHECK((int)sps.side.size() >= 5);
    CHECK((int)sps.side.size() <= 45);
    check_split(sp3, Rat(1, 20), sps);

    CHECK_THROWS_AS(split_tree_by_edge(p100, Rat(1, 8)), Error);

    for (uint64_t seed = 0; seed < 300; ++seed) {
        Rng rng = derived_rng(6500, seed);
        int k = rng_range(rng, 8, 200);
        int dmax = rng_range(rng, 2, 5);
        Tree t = random_tree(k, dmax, seed);
        Rat alpha(1, 4 * t.max_degree() + rng_range(rng, 1, 20));
        if (alpha * Rat(t.order()) < Rat(1)) alpha = Rat(1, t.order());
        if (alpha >= Rat(1, 4 * t.max_degree())) continue;
        check_split(t, alpha, split_tree_by_edge(t, alpha));
    }
}

TEST_CASE("leaf or bare path dichotomy with verified witnesses") {
    Tree p50 = path_tree(50);
    auto paths = leaves_or_bare_paths(p50, 2);
    CHECK_FALSE(paths.is_leaves);
    check_leaves_or_paths(p50, 2, paths);

    Tree star = star_tree(20);
    auto lv = leaves_or_bare_paths(star, 3);
    CHECK(lv.is_leaves);
    check_leaves_or_paths(star, 3, lv);

    std::vector<Edge> bin;
    for (int v = 1; v < 63; ++v) bin.emplace_back((v - 1) / 2, v);
    Tree btree = Tree::from_graph(Graph::from_edges(63, bin));
    auto blv = leaves_or_bare_paths(btree, 2);
    CHECK(blv.is_leaves);
    check_leaves_or_paths(btree, 2, blv);

    for (uint64_t seed = 0; seed < 300; ++seed) {
        Rng rng = derived_rng(6400, seed);
        int k = rng_range(rng, 10, 250);
        int dmax = rng_range(rng, 2, 5);
        Tree t = random_tree(k, dmax, seed);
        int len = rng_range(rng, 1, 6);
        check_leaves_or_paths(t, len, leaves_or_bare_paths(t, len));
    }
}

TEST_CASE("scattered sets keep the required pairwise distance") {
    Graph p21 = path_graph(21);
    auto sc = scattered_set(p21, iota_vec(0, 21), 3, 4, {});
    CHECK(sc.size() == 3);
    for (size_t i = 0; i < sc.size(); ++i)
        for (size_t j = i + 1; j < sc.size(); ++j)
            CHECK(p21.distances_from(sc[i])[sc[j]] >= 4);

    CHECK(scattered_set(p21, iota_vec(0, 21), 1, 4, {}).size() == 1);
    CHECK_THROWS_AS(scattered_set(path_graph(5), iota_vec(0, 5), 10, 2, {}), Error);

    auto away = scattered_set(p21, iota_vec(0, 21), 2, 3, {0, 1, 2});
    for (int v : away) {
        CHECK(v > 2);
        for (int k : {0, 1, 2}) CHECK(p21.distances_from(v)[k] >= 3);
    }

    for (uint64_t seed = 0; seed < 120; ++seed) {
        Rng rng = derived_rng(6300, seed);
        Tree t = random_tree(rng_range(rng, 20, 120), rng_range(rng, 2, 4), seed);
        int want = rng_range(rng, 1, 4);
        int dist = rng_range(rng, 2, 5);
        std::vector<int> picked;
        try {
            picked = scattered_set(t.graph(), iota_vec(0, t.order()), want, dist, {});
        } catch (const Error& e) {
            CHECK(e.kind() == "infeasible");
            continue;
        }
        CHECK((int)picked.size() == want);
        for (size_t i = 0; i < picked.size(); ++i)
            for (size_t j = i + 1; j < picked.size(); ++j)
                CHECK(t.graph().distances_from(picked[i])[picked[j]] >= dist);
    }
}
