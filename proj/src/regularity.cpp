#include "esos/regularity.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

#include "esos/rng.hpp"

namespace esos {

namespace {

struct Window {
    Rat lo, hi;
};

Window window(const Rat& d, const Rat& eps, long long sa, long long sb) {
    Rat expected = d * Rat(sa * sb);
    return {(Rat(1) - eps) * expected, (Rat(1) + eps) * expected};
}

long long size_floor(const Rat& eps, int n) {
    long long f = (eps * Rat(n)).ceil();
    return std::max(1LL, f);
}

struct Violation {
    std::vector<int> sub_a, sub_b;  // in local indices of the two sides
    long long edges;
};

// Every qualifying subset pair, for small sides.
std::optional<Violation> full_scan(const std::vector<uint32_t>& bm, int na, int nb,
                                   const Rat& eps, const Rat& d) {
    int min_a = (int)size_floor(eps, na), min_b = (int)size_floor(eps, nb);
    std::vector<long long> sum(1u << na);
    for (uint32_t mb = 1; mb < (1u << nb); ++mb) {
        int sb = std::popcount(mb);
        if (sb < min_b) continue;
        std::vector<int> w(na);
        for (int i = 0; i < na; ++i) w[i] = std::popcount(bm[i] & mb);
        for (uint32_t ma = 1; ma < (1u << na); ++ma) {
            sum[ma] = sum[ma & (ma - 1)] + w[std::countr_zero(ma)];
            int sa = std::popcount(ma);
            if (sa < min_a) continue;
            Window win = window(d, eps, sa, sb);
            Rat e((long long)sum[ma]);
            if (e < win.lo || e > win.hi) {
                Violation v;
                v.edges = sum[ma];
                for (int i = 0; i < na; ++i)
                    if (ma & (1u << i)) v.sub_a.push_back(i);
                for (int j = 0; j < nb; ++j)
                    if (mb & (1u << j)) v.sub_b.push_back(j);
                return v;
            }
        }
    }
    return std::nullopt;
}

// Subsets of the right side at the two pinned sizes; extremal prefix and
// suffix sums make the left side exact over every size at once.
std::optional<Violation> restricted_scan(const std::vector<uint32_t>& bm, int nl, int nr,
                                         const Rat& eps, const Rat& d) {
    int min_l = (int)size_floor(eps, nl);
    std::vector<int> sizes{(int)size_floor(eps, nr), nr / 2};
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    for (int sz : sizes) {
        if (sz < 1 || sz > nr) continue;
        uint32_t mr = (1u << sz) - 1;
        while (mr < (1u << nr)) {
            std::vector<std::pair<int, int>> w(nl);
            for (int i = 0; i < nl; ++i) w[i] = {std::popcount(bm[i] & mr), i};
            std::sort(w.begin(), w.end());
            std::vector<long long> pre(nl + 1, 0);
            for (int i = 0; i < nl; ++i) pre[i + 1] = pre[i] + w[i].first;
            for (int s = min_l; s <= nl; ++s) {
                Window win = window(d, eps, s, sz);
                long long lo_sum = pre[s];
                long long hi_sum = pre[nl] - pre[nl - s];
                long long bad = -1;
                int from = 0;
                if (Rat(lo_sum) < win.lo) {
                    bad = lo_sum;
                    from = 0;
                } else if (Rat(hi_sum) > win.hi) {
                    bad = hi_sum;
                    from = nl - s;
                }
                if (bad >= 0) {
                    Violation v;
                    v.edges = bad;
                    for (int i = from; i < from + s; ++i) v.sub_a.push_back(w[i].second);
                    std::sort(v.sub_a.begin(), v.sub_a.end());
                    for (int j = 0; j < nr; ++j)
                        if (mr & (1u << j)) v.sub_b.push_back(j);
                    return v;
                }
            }
            // Gosper's hack: next mask with the same popcount.
            uint32_t x = mr & (~mr + 1), y = mr + x;
            mr = (((mr ^ y) >> 2) / x) | y;
        }
    }
    return std::nullopt;
}

}  // namespace

PairCheck is_regular_pair(const Graph& g, const std::vector<int>& a, const std::vector<int>& b,
                          const Rat& eps, const Caps& caps, uint64_t seed) {
    if (eps <= Rat(0) || eps >= Rat(1))
        throw Error("precondition", "eps must lie in (0,1)");
    if (a.empty() || b.empty())
        throw Error("precondition", "regularity check needs nonempty sides");
    std::vector<char> seen(g.order(), 0);
    for (int v : a) {
        if (v < 0 || v >= g.order() || seen[v])
            throw Error("precondition", "side A is not a valid vertex set");
        seen[v] = 1;
    }
    for (int v : b) {
        if (v < 0 || v >= g.order() || seen[v])
            throw Error("precondition", "sides must be disjoint vertex sets");
        seen[v] = 1;
    }

    int na = (int)a.size(), nb = (int)b.size();
    long long e = g.edges_between(a, b);
    PairCheck out;
    out.density = Rat(e, (long long)na * nb);
    int big = std::max(na, nb);
    out.mode = big <= caps.regular_pair_full  ? PairCheckMode::Exact
               : big <= caps.regular_pair_exact ? PairCheckMode::Restricted
                                                : PairCheckMode::Sampled;
    out.regular = true;
    if (e == 0) return out;

    auto neighbor_masks = [&](const std::vector<int>& left, const std::vector<int>& right) {
        std::vector<uint32_t> bm(left.size(), 0);
        for (size_t i = 0; i < left.size(); ++i)
            for (size_t j = 0; j < right.size(); ++j)
                if (g.has_edge(left[i], right[j])) bm[i] |= 1u << j;
        return bm;
    };
    auto fail_with = [&](const Violation& v, const std::vector<int>& left,
                         const std::vector<int>& right, bool swapped) {
        out.regular = false;
        std::vector<int> wa, wb;
        for (int i : v.sub_a) wa.push_back(left[i]);
        for (int j : v.sub_b) wb.push_back(right[j]);
        out.bad_a = swapped ? wb : wa;
        out.bad_b = swapped ? wa : wb;
        std::sort(out.bad_a.begin(), out.bad_a.end());
        std::sort(out.bad_b.begin(), out.bad_b.end());
        out.bad_density = Rat(v.edges, (long long)v.sub_a.size() * v.sub_b.size());
    };

    if (out.mode == PairCheckMode::Exact) {
        auto v = full_scan(neighbor_masks(a, b), na, nb, eps, out.density);
        if (v) fail_with(*v, a, b, false);
        return out;
    }
    if (out.mode == PairCheckMode::Restricted) {
        auto v = restricted_scan(neighbor_masks(a, b), na, nb, eps, out.density);
        if (v) {
            fail_with(*v, a, b, false);
            return out;
        }
        v = restricted_scan(neighbor_masks(b, a), nb, na, eps, out.density);
        if (v) fail_with(*v, b, a, true);
        return out;
    }

    long long min_a = size_floor(eps, na), min_b = size_floor(eps, nb);
    for (int round = 0; round < caps.sample_count; ++round) {
        Rng rng = derived_rng(seed, (uint64_t)round);
        int sa = (int)rng_range(rng, min_a, na);
        int sb = (int)rng_range(rng, min_b, nb);
        auto ia = rng_sample(rng, na, sa);
        auto ib = rng_sample(rng, nb, sb);
        long long cnt = 0;
        for (int i : ia)
            for (int j : ib) cnt += g.has_edge(a[i], b[j]);
        Window win = window(out.density, eps, sa, sb);
        if (Rat(cnt) < win.lo || Rat(cnt) > win.hi) {
            Violation v;
            v.edges = cnt;
            v.sub_a = ia;
            v.sub_b = ib;
            fail_with(v, a, b, false);
            return out;
        }
    }
    return out;
}

namespace {

Rat mean_square_density(const Graph& g, const std::vector<std::vector<int>>& parts,
                        const std::vector<int>& exceptional) {
    long long n = g.order();
    std::vector<std::vector<int>> classes = parts;
    for (int v : exceptional) classes.push_back({v});
    int t = (int)classes.size();
    std::vector<int> cls(n, -1);
    for (int i = 0; i < t; ++i)
        for (int v : classes[i]) cls[v] = i;
    std::vector<std::vector<long long>> cnt(t, std::vector<long long>(t, 0));
    for (const auto& [u, v] : g.edges()) {
        int cu = cls[u], cv = cls[v];
        if (cu == -1 || cv == -1 || cu == cv) continue;
        ++cnt[std::min(cu, cv)][std::max(cu, cv)];
    }
    Rat q(0);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            long long e = cnt[i][j];
            if (e == 0) continue;
            q = q + Rat(2 * e * e,
                        (long long)classes[i].size() * (long long)classes[j].size() * n * n);
        }
    return q;
}

}  // namespace

RegularityResult regularity_refine(const Graph& g, const Rat& eps, const Caps& caps,
                                   uint64_t seed) {
    int n = g.order();
    if (n < 1) throw Error("precondition", "graph is empty");
    if (eps <= Rat(0) || eps >= Rat(1))
        throw Error("precondition", "eps must lie in (0,1)");

    long long t0 = (Rat(1) / eps).ceil();
    t0 = std::max(t0, (Rat(n) / Rat(caps.regular_pair_exact)).ceil());
    t0 = std::min<long long>(t0, std::min(n, caps.max_parts));
    t0 = std::max<long long>(t0, 1);
    int s = n / (int)t0;

    RegularityResult res;
    for (int i = 0; i < (int)t0; ++i) {
        std::vector<int> part;
        for (int v = i * s; v < (i + 1) * s; ++v) part.push_back(v);
        res.partition.parts.push_back(part);
    }
    for (int v = (int)t0 * s; v < n; ++v) res.partition.exceptional.push_back(v);

    Rat last_energy(-1);
    uint64_t ctr = 0;
    for (int it = 0;; ++it) {
        res.iterations = it;
        auto& parts = res.partition.parts;
        int t = (int)parts.size();
        res.pairs.clear();
        struct Bad {
            int i, j;
            std::vector<int> wa, wb;
        };
        std::vector<Bad> bads;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) {
                PairCheck pc =
                    is_regular_pair(g, parts[i], parts[j], eps, caps, splitmix64(seed + ++ctr));
                res.pairs.push_back({i, j, pc.regular, pc.density, pc.mode});
                if (!pc.regular) bads.push_back({i, j, pc.bad_a, pc.bad_b});
            }
        res.energy = mean_square_density(g, parts, res.partition.exceptional);
        res.energy_history.push_back(res.energy);
        if (res.energy < last_energy)
            throw Error("internal", "mean square density decreased under refinement");
        last_energy = res.energy;

        if (bads.empty()) {
            res.resolved =
                Rat((long long)res.partition.exceptional.size()) <= eps * Rat(n);
            return res;
        }
        if (it >= caps.max_iters) {
            res.resolved = false;
            return res;
        }

        // Venn atoms of the witness sets inside each part, chopped to a
        // quarter of the old size; per-part leftovers pooled, scraps join the
        // exceptional set.
        int s2 = std::max(1, s / 4);
        std::vector<std::vector<int>> fresh;
        for (int p = 0; p < t; ++p) {
            std::vector<std::pair<const std::vector<int>*, int>> marks;
            for (const auto& bd : bads) {
                if (bd.i == p) marks.push_back({&bd.wa, 0});
                if (bd.j == p) marks.push_back({&bd.wb, 0});
            }
            std::map<std::vector<char>, std::vector<int>> atoms;
            for (int v : parts[p]) {
                std::vector<char> sig;
                for (const auto& mk : marks)
                    sig.push_back(std::binary_search(mk.first->begin(), mk.first->end(), v));
                atoms[sig].push_back(v);
            }
            std::vector<int> pool;
            for (const auto& [sig, verts] : atoms) {
                size_t full = verts.size() / s2 * s2;
                for (size_t i = 0; i < full; i += s2)
                    fresh.push_back({verts.begin() + i, verts.begin() + i + s2});
                pool.insert(pool.end(), verts.begin() + full, verts.end());
            }
            std::sort(pool.begin(), pool.end());
            size_t full = pool.size() / s2 * s2;
            for (size_t i = 0; i < full; i += s2)
                fresh.push_back({pool.begin() + i, pool.begin() + i + s2});
            res.partition.exceptional.insert(res.partition.exceptional.end(),
                                             pool.begin() + full, pool.end());
        }
        std::sort(res.partition.exceptional.begin(), res.partition.exceptional.end());
        res.partition.parts = fresh;
        s = s2;
    }
}

RegPartition halve_partition(const RegPartition& rp) {
    RegPartition out;
    out.exceptional = rp.exceptional;
    for (const auto& part : rp.parts) {
        if ((int)part.size() < 2)
            throw Error("precondition", "cannot halve a part with fewer than 2 vertices");
        int h = (int)part.size() / 2;
        out.parts.push_back({part.begin(), part.begin() + h});
        out.parts.push_back({part.begin() + h, part.begin() + 2 * h});
        for (size_t i = 2 * h; i < part.size(); ++i) out.exceptional.push_back(part[i]);
    }
    std::sort(out.exceptional.begin(), out.exceptional.end());
    return out;
}

ReducedGraph reduced_graph(const Graph& g, const RegularityResult& reg, const Rat& eta) {
    int t = (int)reg.partition.parts.size();
    ReducedGraph out;
    out.density.assign(t, std::vector<Rat>(t, Rat(0)));
    std::vector<Edge> cedges;
    for (const auto& ps : reg.pairs) {
        out.density[ps.i][ps.j] = ps.density;
        out.density[ps.j][ps.i] = ps.density;
        if (ps.regular && ps.density >= eta) cedges.emplace_back(ps.i, ps.j);
    }
    out.cluster = Graph::from_edges(t, cedges);

    std::vector<int> part_of(g.order(), -1);
    for (int i = 0; i < t; ++i)
        for (int v : reg.partition.parts[i]) part_of[v] = i;
    std::vector<Edge> kept;
    for (const auto& [u, v] : g.edges()) {
        int pu = part_of[u], pv = part_of[v];
        if (pu == -1 || pv == -1 || pu == pv) continue;
        if (out.cluster.has_edge(std::min(pu, pv), std::max(pu, pv)))
            kept.emplace_back(u, v);
    }
    out.pruned = Graph::from_edges(g.order(), kept);
    return out;
}

HalfCover regularity_cover(const Graph& g, const RegularityResult& reg, const Rat& eta) {
    ReducedGraph rg = reduced_graph(g, reg, eta);
    for (const auto& part : reg.partition.parts)
        if ((int)part.size() < 2)
            throw Error("precondition", "cover needs parts of at least 2 vertices");
    HalfMatching fm = fractional_matching(rg.cluster);
    auto pairs = matching_from_fractional(rg.cluster, fm);

    auto half_of = [&](int cluster_v, int which) {
        const auto& part = reg.partition.parts[cluster_v];
        int h = (int)part.size() / 2;
        return which == 0 ? std::vector<int>(part.begin(), part.begin() + h)
                          : std::vector<int>(part.begin() + h, part.begin() + 2 * h);
    };
    HalfCover out;
    out.matching_value = fm.value;
    for (const auto& p : pairs)
        out.pieces.push_back({half_of(p.u, p.u_half), half_of(p.v, p.v_half)});
    return out;
}

ReducedCover regularity_vertex_cover(const Graph& g, const std::vector<int>& part_x,
                                     const std::vector<int>& part_y, const Rat& eps,
                                     const Rat& eta, const Caps& caps, uint64_t seed) {
    std::vector<char> in_x(g.order(), 0), in_y(g.order(), 0);
    for (int v : part_x) {
        if (v < 0 || v >= g.order() || in_x[v]) throw Error("precondition", "part_x invalid");
        in_x[v] = 1;
    }
    for (int v : part_y) {
        if (v < 0 || v >= g.order() || in_y[v] || in_x[v])
            throw Error("precondition", "part_y invalid or overlapping part_x");
        in_y[v] = 1;
    }
    for (auto [u, v] : g.edges())
        if (!((in_x[u] && in_y[v]) || (in_y[u] && in_x[v])))
            throw Error("precondition", "non-bipartite input: edge not crossing the parts");

    auto chop = [&](std::vector<int> side) {
        std::sort(side.begin(), side.end());
        std::vector<std::vector<int>> parts;
        if (side.empty()) return parts;
        long long n = (long long)side.size();
        long long t = std::max((Rat(1) / eps).ceil(),
                               (Rat(n) / Rat(caps.regular_pair_exact)).ceil());
        t = std::max<long long>(1, std::min<long long>(t, n));
        long long base = n / t, extra = n % t;
        size_t at = 0;
        for (long long i = 0; i < t; ++i) {
            long long sz = base + (i < extra ? 1 : 0);
            parts.emplace_back(side.begin() + at, side.begin() + at + sz);
            at += sz;
        }
        return parts;
    };

    ReducedCover out;
    out.parts_x = chop(part_x);
    out.parts_y = chop(part_y);
    out.all_regular = true;
    std::vector<Edge> cluster;
    uint64_t idx = 0;
    for (size_t i = 0; i < out.parts_x.size(); ++i) {
        for (size_t j = 0; j < out.parts_y.size(); ++j, ++idx) {
            auto chk = is_regular_pair(g, out.parts_x[i], out.parts_y[j], eps, caps,
                                       splitmix64(seed + idx));
            if (!chk.regular) {
                out.all_regular = false;
                continue;
            }
            if (chk.density >= eta) cluster.push_back({(int)i, (int)j});
        }
    }
    auto bm = max_bipartite_matching((int)out.parts_x.size(), (int)out.parts_y.size(), cluster);
    for (int l : bm.cover_left)
        out.cover.insert(out.cover.end(), out.parts_x[l].begin(), out.parts_x[l].end());
    for (int r : bm.cover_right)
        out.cover.insert(out.cover.end(), out.parts_y[r].begin(), out.parts_y[r].end());
    std::sort(out.cover.begin(), out.cover.end());
    std::vector<char> covered(g.order(), 0);
    for (int v : out.cover) covered[v] = 1;
    for (auto [u, v] : g.edges())
        if (!covered[u] && !covered[v]) ++out.residual_edges;
    return out;
}

}  // namespace esos
