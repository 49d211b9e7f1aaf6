#include "esos/embed.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "esos/matchings.hpp"
#include "esos/rng.hpp"
#include "esos/tree_ops.hpp"

namespace esos {

namespace {

std::vector<char> flags(int n, const std::vector<int>& verts, const char* what) {
    std::vector<char> f(n, 0);
    for (int v : verts) {
        if (v < 0 || v >= n) throw Error("precondition", std::string(what) + ": vertex out of range");
        if (f[v]) throw Error("precondition", std::string(what) + ": duplicate vertex");
        f[v] = 1;
    }
    return f;
}

int count_in(const Graph& g, int v, const std::vector<char>& in_set) {
    int c = 0;
    for (int u : g.neighbors(v)) c += in_set[u];
    return c;
}

int min_inner_degree(const Graph& g, const std::vector<int>& verts) {
    if (verts.empty()) return 0;
    auto in = flags(g.order(), verts, "vertex set");
    int best = g.order();
    for (int v : verts) best = std::min(best, count_in(g, v, in));
    return best;
}

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

struct PieceRun {
    bool ok = true;
    int stuck = -1;
    long long min_feasible = -1;
    std::vector<int> placed;
};

/// Extends f over the tree vertices flagged by `piece`, walking the tree BFS
/// from `root` (already assigned) and giving each vertex the lowest unused
/// host neighbor of its parent image inside `allowed`. `used` flags host
/// vertices and is kept current.
PieceRun embed_piece(const Graph& host, const Tree& t, Embedding& f, std::vector<char>& used,
                     int root, const std::vector<char>& piece, const std::vector<char>& allowed) {
    PieceRun run;
    std::deque<int> queue{root};
    std::vector<char> seen(t.order(), 0);
    seen[root] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int c : t.graph().neighbors(v)) {
            if (!piece[c] || seen[c]) continue;
            seen[c] = 1;
            if (f.assigned(c)) throw Error("internal", "piece vertex already embedded");
            int pick = -1;
            long long count = 0;
            for (int u : host.neighbors(f[v])) {
                if (!allowed[u] || used[u]) continue;
                if (pick == -1) pick = u;
                ++count;
            }
            if (run.min_feasible < 0 || count < run.min_feasible) run.min_feasible = count;
            if (pick == -1) {
                run.ok = false;
                run.stuck = c;
                return run;
            }
            f.assign(c, pick);
            used[pick] = 1;
            run.placed.push_back(c);
            queue.push_back(c);
        }
    }
    return run;
}

EmbedStage make_stage(std::string label, std::vector<int> tree_vertices, std::vector<int> targets,
                      long long min_feasible = -1) {
    EmbedStage st;
    st.label = std::move(label);
    st.tree_vertices = std::move(tree_vertices);
    st.targets = std::move(targets);
    st.min_feasible = min_feasible;
    return st;
}

EmbedTrace fail_trace(EmbedTrace tr, const std::string& label, Embedding f) {
    tr.ok = false;
    tr.failure = label;
    tr.f = std::move(f);
    return tr;
}

Rat cube(int x) { return Rat(x) * Rat(x) * Rat(x); }
Rat square(int x) { return Rat(x) * Rat(x); }

Rat eps_ceiling(int delta) {
    long long p = 1;
    for (int i = 0; i < 7; ++i) p *= delta;
    return Rat(1, 1000 * p);
}

void check(bool ok, const char* name, const std::string& detail) {
    if (!ok) throw Error("hypothesis", std::string(name) + ": " + detail);
}

}  // namespace

Embedding greedy_embed(const Graph& g, const Tree& t, int root_target, int d_floor,
                       int delta_floor) {
    int n = g.order();
    if (root_target < 0 || root_target >= n)
        throw Error("precondition", "root_target out of range");
    if (d_floor < t.edge_count()) throw Error("precondition", "d_floor below e(T)");
    if (delta_floor < t.max_degree())
        throw Error("precondition", "delta_floor below the max degree of T");
    if (g.degree(root_target) < delta_floor)
        throw Error("precondition", "deg(root_target) below delta_floor");
    for (int v = 0; v < n; ++v) {
        if (v == root_target) continue;
        int d = 0;
        for (int u : g.neighbors(v)) d += (u != root_target);
        if (d < d_floor)
            throw Error("precondition", "min degree of g minus root_target below d_floor");
    }
    Embedding f(t.order());
    f.assign(0, root_target);
    std::vector<char> used(n, 0), piece(t.order(), 1), allowed(n, 1);
    used[root_target] = 1;
    auto run = embed_piece(g, t, f, used, 0, piece, allowed);
    if (!run.ok || (int)run.placed.size() != t.order() - 1)
        throw Error("internal", "greedy embedding stalled despite the degree floors");
    return f;
}

EmbedTrace complete_bipartite_embedding(const Graph& g, const ExtremalWitness& w, const Tree& t,
                                        int x_part, const std::vector<int>& s_set,
                                        const Embedding& f0, const ParamProfile& prof) {
    int n = g.order();
    int tn = t.order();
    int k = w.k;
    int delta = w.max_deg;
    Rat eps = w.eps;
    check(k >= 1, "k", "tree edge budget must be positive");
    check(delta >= 1, "Delta", "degree cap must be positive");
    check(t.edge_count() == k, "e(T)",
          "tree has " + std::to_string(t.edge_count()) + " edges, witness sized for " +
              std::to_string(k));
    check(t.max_degree() <= delta, "Delta(T)", "tree degree exceeds the declared cap");
    check(eps <= prof.coeff("cb_eps_max", eps_ceiling(delta)), "eps upper window",
          "eps too large for the degree cap");
    check(eps >= prof.coeff("cb_eps_min", Rat(1, k)), "eps lower window", "eps below 1/k");

    auto xk = sorted_copy(w.xk);
    auto yk = sorted_copy(w.yk);
    auto xk_big = sorted_copy(w.xk_big);
    auto yk_big = sorted_copy(w.yk_big);
    check(!xk.empty() && !yk.empty(), "core", "X_K and Y_K must be nonempty");
    auto in_xk = flags(n, xk, "X_K");
    auto in_yk = flags(n, yk, "Y_K");
    for (int v : yk) check(!in_xk[v], "core", "X_K and Y_K overlap");
    auto in_xk_big = flags(n, xk_big, "X_K^big");
    auto in_yk_big = flags(n, yk_big, "Y_K^big");
    for (int v : xk_big) check(in_xk[v], "core", "X_K^big must sit inside X_K");
    for (int v : yk_big) check(in_yk[v], "core", "Y_K^big must sit inside Y_K");

    Rat kk((long long)k);
    check(Rat((long long)xk.size()) <= prof.coeff("cb_xk_cap", (Rat(1) + Rat(3) * eps) / Rat(2)) * kk,
          "|X_K|", "core X side too large");
    Rat yk_deg_floor = prof.coeff("cb_yk_deg", Rat(90) * cube(delta) * eps) * kk;
    for (int v : xk)
        check(Rat(count_in(g, v, in_yk)) >= yk_deg_floor, "delta_YK(X_K)",
              "vertex " + std::to_string(v) + " has too few Y_K neighbors");
    Rat xk_deg_floor = prof.coeff("cb_xk_deg", (Rat(1) - Rat(160) * cube(delta) * eps) / Rat(2)) * kk;
    for (int v : yk)
        check(Rat(count_in(g, v, in_xk)) >= xk_deg_floor, "delta_XK(Y_K)",
              "vertex " + std::to_string(v) + " has too few X_K neighbors");
    std::vector<int> xk_small;
    for (int v : xk)
        if (!in_xk_big[v]) xk_small.push_back(v);
    check(Rat((long long)xk_small.size()) <= prof.coeff("cb_xk_small", eps) * kk, "|X_K \\ X_K^big|",
          "too many X_K vertices outside X_K^big");
    check(Rat((long long)yk_big.size()) >= prof.coeff("cb_yk_big", Rat(4)) * kk, "|Y_K^big|",
          "Y_K^big too small");
    Rat big_floor = prof.coeff("cb_yk_big_deg", Rat(1) - Rat(20) * Rat(delta) * eps) *
                    Rat((long long)yk_big.size());
    for (int v : xk_big)
        check(Rat(count_in(g, v, in_yk_big)) >= big_floor, "delta_YKbig(X_K^big)",
              "vertex " + std::to_string(v) + " has too few Y_K^big neighbors");

    if (x_part != 0 && x_part != 1) throw Error("precondition", "x_part must be 0 or 1");
    if (f0.tree_order() != tn) throw Error("precondition", "f is sized for a different tree");
    auto in_s = flags(tn, s_set, "S");

    Rat s_cap = prof.coeff("cb_s_cap", Rat(32) * eps * square(delta)) * kk;
    if (Rat((long long)s_set.size()) > s_cap)
        throw Error("precondition", "condition 1: |S| = " + std::to_string(s_set.size()) +
                                        " exceeds " + s_cap.str());

    std::vector<int> ns;
    std::vector<char> in_ns(tn, 0);
    for (int v = 0; v < tn; ++v) {
        if (in_s[v]) continue;
        for (int u : t.graph().neighbors(v)) {
            if (in_s[u]) {
                ns.push_back(v);
                in_ns[v] = 1;
                break;
            }
        }
    }
    for (int v : ns)
        if (t.side(v) == x_part)
            throw Error("precondition",
                        "condition 2: outside neighbor " + std::to_string(v) + " lies in X_T");
    for (int v = 0; v < tn; ++v) {
        bool want = in_s[v] || in_ns[v];
        if (f0.assigned(v) != want)
            throw Error("precondition", "f must cover exactly S and its outside neighbors");
        if (f0.assigned(v) && (f0[v] < 0 || f0[v] >= n))
            throw Error("precondition", "f image out of range");
    }
    auto rep0 = f0.validate(t, g);
    if (!rep0.valid_partial()) throw Error("precondition", "f is not a partial embedding");
    for (int v : ns)
        if (!in_yk[f0[v]])
            throw Error("precondition", "condition 3: f(" + std::to_string(v) + ") lies outside Y_K");
    long long xk_free = 0;
    {
        std::vector<char> hit(n, 0);
        for (int v : s_set)
            if (f0.assigned(v)) hit[f0[v]] = 1;
        for (int v : xk) xk_free += !hit[v];
    }
    long long xt_left = 0;
    for (int v = 0; v < tn; ++v) xt_left += (t.side(v) == x_part && !in_s[v]);
    if (xk_free < xt_left)
        throw Error("precondition", "condition 4: |X_K \\ f(S)| = " + std::to_string(xk_free) +
                                        " below |X_T \\ S| = " + std::to_string(xt_left));

    EmbedTrace tr;
    Embedding f = f0;
    std::vector<char> used(n, 0);
    for (int v = 0; v < tn; ++v)
        if (f.assigned(v)) used[f[v]] = 1;

    std::vector<int> small_free;
    for (int v : xk_small)
        if (!used[v]) small_free.push_back(v);
    std::vector<int> cand;
    for (int v = 0; v < tn; ++v)
        if (t.side(v) == x_part && !in_s[v]) cand.push_back(v);
    std::vector<int> r_set;
    if (!small_free.empty()) {
        try {
            r_set = scattered_set(t.graph(), cand, (int)small_free.size(), 4, s_set);
        } catch (const Error& e) {
            if (std::string(e.kind()) != "infeasible") throw;
            tr.stages.push_back(make_stage("stage a: scatter into the spare X side", {}, small_free));
            return fail_trace(std::move(tr), "stage a: scatter into the spare X side", std::move(f));
        }
        for (size_t i = 0; i < r_set.size(); ++i) {
            f.assign(r_set[i], small_free[i]);
            used[small_free[i]] = 1;
        }
    }
    tr.stages.push_back(make_stage("stage a: scatter into the spare X side", r_set, small_free,
                                   (long long)cand.size()));

    std::vector<int> placed_b;
    long long feas_b = -1;
    for (int r : r_set) {
        for (int y : t.graph().neighbors(r)) {
            if (f.assigned(y)) throw Error("internal", "scattered vertex has an embedded neighbor");
            int pick = -1;
            long long count = 0;
            for (int u : g.neighbors(f[r])) {
                if (!in_yk[u] || used[u]) continue;
                if (pick == -1) pick = u;
                ++count;
            }
            if (feas_b < 0 || count < feas_b) feas_b = count;
            if (pick == -1) {
                tr.stages.push_back(
                    make_stage("stage b: first neighborhoods into Y_K", placed_b, yk, feas_b));
                return fail_trace(std::move(tr), "stage b: first neighborhoods into Y_K",
                                  std::move(f));
            }
            f.assign(y, pick);
            used[pick] = 1;
            placed_b.push_back(y);
        }
    }
    tr.stages.push_back(make_stage("stage b: first neighborhoods into Y_K", placed_b, yk, feas_b));

    for (int v : xk_small)
        if (!used[v]) throw Error("internal", "spare X side not exhausted after stage a");

    std::vector<int> second;
    for (int v = 0; v < tn; ++v) {
        if (t.side(v) != x_part || f.assigned(v)) continue;
        for (int u : t.graph().neighbors(v)) {
            if (f.assigned(u)) {
                second.push_back(v);
                break;
            }
        }
    }
    std::vector<int> placed_c;
    long long feas_c = -1;
    for (int x : second) {
        std::vector<int> anchors;
        for (int u : t.graph().neighbors(x))
            if (f.assigned(u)) anchors.push_back(u);
        int pick = -1;
        long long count = 0;
        for (int u : g.neighbors(f[anchors[0]])) {
            if (!in_xk[u] || used[u]) continue;
            bool all = true;
            for (size_t a = 1; a < anchors.size() && all; ++a) all = g.has_edge(u, f[anchors[a]]);
            if (!all) continue;
            if (pick == -1) pick = u;
            ++count;
        }
        if (feas_c < 0 || count < feas_c) feas_c = count;
        if (pick == -1) {
            tr.stages.push_back(
                make_stage("stage c: second neighborhoods into X_K", placed_c, xk, feas_c));
            return fail_trace(std::move(tr), "stage c: second neighborhoods into X_K", std::move(f));
        }
        if (!in_xk_big[pick]) throw Error("internal", "stage c image escaped X_K^big");
        f.assign(x, pick);
        used[pick] = 1;
        placed_c.push_back(x);
    }
    tr.stages.push_back(make_stage("stage c: second neighborhoods into X_K", placed_c, xk, feas_c));

    std::vector<int> rest_x;
    for (int v = 0; v < tn; ++v)
        if (t.side(v) == x_part && !f.assigned(v)) rest_x.push_back(v);
    std::vector<int> pool;
    for (int v : xk)
        if (!used[v]) pool.push_back(v);
    if ((long long)pool.size() < (long long)rest_x.size()) {
        tr.stages.push_back(make_stage("stage d: complete the X side", {}, pool,
                                       (long long)pool.size()));
        return fail_trace(std::move(tr), "stage d: complete the X side", std::move(f));
    }
    for (size_t i = 0; i < rest_x.size(); ++i) {
        for (int u : t.graph().neighbors(rest_x[i]))
            if (f.assigned(u)) throw Error("internal", "leftover X vertex has an embedded neighbor");
        f.assign(rest_x[i], pool[i]);
        used[pool[i]] = 1;
    }
    tr.stages.push_back(
        make_stage("stage d: complete the X side", rest_x, pool, (long long)pool.size()));

    std::vector<int> rest_y;
    for (int v = 0; v < tn; ++v)
        if (!f.assigned(v)) rest_y.push_back(v);
    std::vector<int> placed_e;
    long long feas_e = -1;
    for (int y : rest_y) {
        if (t.side(y) == x_part) throw Error("internal", "X side incomplete at stage e");
        const auto& nbrs = t.graph().neighbors(y);
        for (int u : nbrs)
            if (!f.assigned(u)) throw Error("internal", "stage e neighbor unembedded");
        int pick = -1;
        long long count = 0;
        for (int u : g.neighbors(f[nbrs[0]])) {
            if (!in_yk_big[u] || used[u]) continue;
            bool all = true;
            for (size_t a = 1; a < nbrs.size() && all; ++a) all = g.has_edge(u, f[nbrs[a]]);
            if (!all) continue;
            if (pick == -1) pick = u;
            ++count;
        }
        if (feas_e < 0 || count < feas_e) feas_e = count;
        if (pick == -1) {
            tr.stages.push_back(
                make_stage("stage e: complete the Y side", placed_e, yk_big, feas_e));
            return fail_trace(std::move(tr), "stage e: complete the Y side", std::move(f));
        }
        f.assign(y, pick);
        used[pick] = 1;
        placed_e.push_back(y);
    }
    tr.stages.push_back(make_stage("stage e: complete the Y side", placed_e, yk_big, feas_e));

    auto rep = f.validate(t, g);
    if (!rep.valid()) throw Error("internal", "completion engine produced an invalid embedding");
    tr.f = std::move(f);
    tr.ok = true;
    return tr;
}

EmbedTrace embed_nonbipartite_extremal(const Graph& g, const ExtremalWitness& w, const Tree& t,
                                       const ParamProfile& prof) {
    if (w.bipartite) throw Error("precondition", "witness is not the almost complete variant");
    int n = g.order();
    int tn = t.order();
    int d = w.k;
    int delta = w.max_deg;
    Rat eps = w.eps;
    Rat dd((long long)d);
    check(d >= 1, "k", "tree edge budget must be positive");
    check(delta >= 1, "Delta", "degree cap must be positive");
    check(t.edge_count() == d, "e(T)",
          "tree has " + std::to_string(t.edge_count()) + " edges, witness sized for " +
              std::to_string(d));
    check(t.max_degree() <= delta, "Delta(T)", "tree degree exceeds the declared cap");
    check(eps <= prof.coeff("nb_eps_max", eps_ceiling(delta)), "eps upper window",
          "eps too large for the degree cap");
    check(eps >= prof.coeff("nb_eps_min", Rat(3, d)), "eps lower window", "eps below 3/d");
    check(g.connected(), "G connected", "graph is disconnected");
    Rat root_eps = sqrt_upper(eps);
    check(Rat((long long)n) >=
              (Rat(1) + prof.coeff("nb_order", Rat(256) * square(delta) * root_eps)) * dd,
          "order(G)", "graph too small");
    Rat deg_floor = prof.coeff("nb_min_deg", Rat(128) * square(delta) * root_eps) * dd;
    check(Rat(g.min_degree()) >= deg_floor, "delta(G)", "minimum degree below the floor");
    auto core = sorted_copy(w.core);
    check(!core.empty(), "K", "core must be nonempty");
    auto in_k = flags(n, core, "K");
    check(Rat((long long)core.size()) <= prof.coeff("nb_core_cap", Rat(1) + eps) * dd, "|K|",
          "core too large");
    Rat core_floor = prof.coeff("nb_core_deg", Rat(1) - eps) * dd;
    check(Rat(min_inner_degree(g, core)) >= core_floor, "delta(K)",
          "core minimum degree below the floor");

    EmbedTrace tr;
    TreeSplit split;
    try {
        split = split_tree_by_edge(t, prof.coeff("nb_split_alpha", Rat(4) * Rat(delta) * eps));
    } catch (const Error& e) {
        if (std::string(e.kind()) != "infeasible") throw;
        return fail_trace(std::move(tr), "split the tree", Embedding(tn));
    }
    auto in_side = flags(tn, split.side, "split side");
    int s_t = in_side[split.edge.first] ? split.edge.first : split.edge.second;
    int r_t = in_side[split.edge.first] ? split.edge.second : split.edge.first;
    tr.stages.push_back(make_stage("split the tree", split.side, {}, (long long)split.side.size()));

    Rat attach = prof.coeff("nb_attach", Rat(64) * square(delta) * root_eps) * dd;
    std::vector<int> a_set;
    for (int v = 0; v < n; ++v)
        if (!in_k[v] && Rat(count_in(g, v, in_k)) >= attach) a_set.push_back(v);
    tr.stages.push_back(make_stage("attachment set", {}, a_set, (long long)a_set.size()));

    Embedding f(tn);
    std::vector<char> used(n, 0);
    std::vector<char> piece_r(tn, 1);
    for (int v : split.side) piece_r[v] = 0;
    long long rest = tn - (long long)split.side.size();

    if (Rat((long long)a_set.size()) >= attach) {
        long long want = std::max<long long>(attach.ceil(), 1);
        std::vector<int> a_prime(a_set.begin(), a_set.begin() + (size_t)want);
        std::vector<int> verts;
        verts.insert(verts.end(), a_prime.begin(), a_prime.end());
        verts.insert(verts.end(), core.begin(), core.end());
        std::sort(verts.begin(), verts.end());
        std::vector<int> pos(n, -1);
        for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = (int)i;
        auto in_ap = flags(n, a_prime, "A'");
        std::vector<Edge> cross;
        for (auto [u, v] : g.edges()) {
            if (pos[u] < 0 || pos[v] < 0) continue;
            if (in_ap[u] == in_ap[v]) continue;
            cross.push_back({pos[u], pos[v]});
        }
        Graph slice = Graph::from_edges((int)verts.size(), cross);
        Rat h_floor = prof.coeff("nb_h_deg", Rat(13) * square(delta) * eps) * dd;
        std::vector<char> alive(verts.size(), 1);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < slice.order(); ++v) {
                if (!alive[v]) continue;
                int deg = 0;
                for (int u : slice.neighbors(v)) deg += alive[u];
                if (Rat(deg) < h_floor) {
                    alive[v] = 0;
                    changed = true;
                }
            }
        }
        std::vector<int> h_local;
        for (int v = 0; v < slice.order(); ++v)
            if (alive[v]) h_local.push_back(v);
        std::vector<int> h_verts;
        for (int v : h_local) h_verts.push_back(verts[v]);
        if (h_local.empty())
            return fail_trace(std::move(tr), "case 1: attachment slice too thin", std::move(f));
        int h_min = (int)verts.size();
        for (int v : h_local) {
            int deg = 0;
            for (int u : slice.neighbors(v)) deg += alive[u];
            h_min = std::min(h_min, deg);
        }
        if (h_min < (int)split.side.size())
            return fail_trace(std::move(tr), "case 1: attachment slice degree", std::move(f));
        int root_local = -1;
        for (int v : h_local) {
            if (in_k[verts[v]]) {
                root_local = v;
                break;
            }
        }
        if (root_local == -1)
            return fail_trace(std::move(tr), "case 1: no core vertex in the slice", std::move(f));
        Embedding f_local(tn);
        f_local.assign(r_t, root_local);
        std::vector<char> used_local(slice.order(), 0);
        used_local[root_local] = 1;
        std::vector<char> piece_s(tn, 0);
        for (int v : split.side) piece_s[v] = 1;
        piece_s[r_t] = 1;
        auto run = embed_piece(slice, t, f_local, used_local, r_t, piece_s, alive);
        std::vector<int> placed{r_t};
        for (int v = 0; v < tn; ++v) {
            if (!f_local.assigned(v)) continue;
            f.assign(v, verts[f_local[v]]);
            used[verts[f_local[v]]] = 1;
            if (v != r_t && piece_s[v]) placed.push_back(v);
        }
        tr.stages.push_back(make_stage("case 1: embed the split piece into the attachment slice",
                                       placed, h_verts, run.min_feasible));
        if (!run.ok)
            return fail_trace(std::move(tr),
                              "case 1: embed the split piece into the attachment slice",
                              std::move(f));
        std::vector<int> kr;
        for (int v : core)
            if (!used[v] || v == f[r_t]) kr.push_back(v);
        if (min_inner_degree(g, kr) < rest - 1)
            return fail_trace(std::move(tr), "case 1: core remainder degree", std::move(f));
        auto in_kr = flags(n, kr, "core remainder");
        auto run_r = embed_piece(g, t, f, used, r_t, piece_r, in_kr);
        tr.stages.push_back(make_stage("case 1: embed the rest into the core", run_r.placed, kr,
                                       run_r.min_feasible));
        if (!run_r.ok)
            return fail_trace(std::move(tr), "case 1: embed the rest into the core", std::move(f));
        tr.case_label = "case 1";
    } else {
        std::vector<char> in_a(n, 0);
        for (int v : a_set) in_a[v] = 1;
        std::vector<int> h_set;
        for (int v = 0; v < n; ++v)
            if (!in_k[v] && !in_a[v]) h_set.push_back(v);
        if (h_set.empty()) return fail_trace(std::move(tr), "case 2: residue empty", std::move(f));
        if (min_inner_degree(g, h_set) < (int)split.side.size() - 1)
            return fail_trace(std::move(tr), "case 2: residue degree", std::move(f));
        auto in_h = flags(n, h_set, "residue");
        int sv = -1, rv = -1;
        for (int h : h_set) {
            for (int u : g.neighbors(h)) {
                if (!in_h[u]) {
                    sv = h;
                    rv = u;
                    break;
                }
            }
            if (sv != -1) break;
        }
        if (sv == -1) throw Error("internal", "no edge leaves the residue in a connected graph");
        f.assign(s_t, sv);
        used[sv] = 1;
        std::vector<char> piece_s(tn, 0);
        for (int v : split.side) piece_s[v] = 1;
        auto run = embed_piece(g, t, f, used, s_t, piece_s, in_h);
        std::vector<int> placed{s_t};
        placed.insert(placed.end(), run.placed.begin(), run.placed.end());
        tr.stages.push_back(make_stage("case 2: embed the split piece into the residue", placed,
                                       h_set, run.min_feasible));
        if (!run.ok)
            return fail_trace(std::move(tr), "case 2: embed the split piece into the residue",
                              std::move(f));
        std::vector<int> kr = core;
        if (!in_k[rv]) {
            kr.push_back(rv);
            std::sort(kr.begin(), kr.end());
        }
        if (min_inner_degree(g, kr) < rest - 1)
            return fail_trace(std::move(tr), "case 2: core degree", std::move(f));
        f.assign(r_t, rv);
        used[rv] = 1;
        auto in_kr = flags(n, kr, "core plus bridge");
        auto run_r = embed_piece(g, t, f, used, r_t, piece_r, in_kr);
        std::vector<int> placed_r{r_t};
        placed_r.insert(placed_r.end(), run_r.placed.begin(), run_r.placed.end());
        tr.stages.push_back(
            make_stage("case 2: embed the rest into the core", placed_r, kr, run_r.min_feasible));
        if (!run_r.ok)
            return fail_trace(std::move(tr), "case 2: embed the rest into the core", std::move(f));
        tr.case_label = "case 2";
    }
    auto rep = f.validate(t, g);
    if (!rep.valid()) throw Error("internal", "extremal embedder produced an invalid embedding");
    tr.f = std::move(f);
    tr.ok = true;
    return tr;
}

EmbedTrace embed_bipartite_extremal(const Graph& g, const ExtremalWitness& w, const Tree& t,
                                    const ParamProfile& prof) {
    if (!w.bipartite) throw Error("precondition", "witness is not the bipartite variant");
    int n = g.order();
    int tn = t.order();
    int k = w.k;
    int delta = w.max_deg;
    Rat eps = w.eps;
    Rat kk((long long)k);
    check(k >= 1, "k", "tree edge budget must be positive");
    check(delta >= 1, "Delta", "degree cap must be positive");
    check(t.edge_count() == k, "e(T)",
          "tree has " + std::to_string(t.edge_count()) + " edges, witness sized for " +
              std::to_string(k));
    check(t.max_degree() <= delta, "Delta(T)", "tree degree exceeds the declared cap");
    check(eps <= prof.coeff("bx_eps_max", eps_ceiling(delta)), "eps upper window",
          "eps too large for the degree cap");
    check(eps >= prof.coeff("bx_eps_min", Rat(1, k)), "eps lower window", "eps below 1/k");
    check(g.connected(), "G connected", "graph is disconnected");
    check(Rat(g.min_degree()) >= Rat(k, 2), "delta(G)", "minimum degree below k/2");

    auto bx = sorted_copy(w.part_x);
    auto by = sorted_copy(w.part_y);
    check(!bx.empty() && !by.empty(), "B", "witness parts must be nonempty");
    auto in_x = flags(n, bx, "X");
    auto in_y = flags(n, by, "Y");
    for (int v : by) check(!in_x[v], "B", "witness parts overlap");
    check(Rat((long long)bx.size()) <= prof.coeff("bx_x_cap", (Rat(1) + eps) / Rat(2)) * kk, "|X|",
          "X side too large");
    check(Rat((long long)by.size()) >= prof.coeff("bx_y_order", Rat(6)) * kk, "|Y|",
          "Y side too small");
    Rat x_deg_floor = prof.coeff("bx_x_deg", Rat(1) - eps) * Rat((long long)by.size());
    for (int v : bx)
        check(Rat(count_in(g, v, in_y)) >= x_deg_floor, "delta_B(X)",
              "vertex " + std::to_string(v) + " has too few Y neighbors");
    Rat y_deg_floor = prof.coeff("bx_y_deg", (Rat(1) - eps) / Rat(2)) * kk;
    for (int v : by)
        check(Rat(count_in(g, v, in_x)) >= y_deg_floor, "delta_B(Y)",
              "vertex " + std::to_string(v) + " has too few X neighbors");

    EmbedTrace pre;
    Rat y_thr = prof.coeff("bx_y_prime_deg", (Rat(1) - Rat(160) * cube(delta) * eps) / Rat(2)) * kk;
    std::vector<int> yp;
    for (int v = 0; v < n; ++v)
        if (!in_x[v] && Rat(count_in(g, v, in_x)) >= y_thr) yp.push_back(v);
    auto in_yp = flags(n, yp, "Y'");
    pre.stages.push_back(make_stage("derive Y'", {}, yp, (long long)yp.size()));

    Rat x_thr = prof.coeff("bx_x_prime_deg", Rat(90) * cube(delta) * eps) * kk;
    std::vector<int> xp_cand;
    for (int v = 0; v < n; ++v)
        if (!in_x[v] && !in_yp[v] && Rat(count_in(g, v, in_yp)) >= x_thr) xp_cand.push_back(v);
    long long xp_cap = (prof.coeff("bx_x_prime_cap", eps) * kk).floor();
    if (xp_cap < 0) xp_cap = 0;
    std::vector<int> xp(xp_cand.begin(),
                        xp_cand.begin() + std::min<size_t>(xp_cand.size(), (size_t)xp_cap));
    pre.stages.push_back(make_stage("derive X'", {}, xp, (long long)xp_cand.size()));

    std::vector<int> xk = bx;
    xk.insert(xk.end(), xp.begin(), xp.end());
    std::sort(xk.begin(), xk.end());
    auto in_xk = flags(n, xk, "X_K");
    std::vector<int> z;
    for (int v = 0; v < n; ++v)
        if (!in_xk[v] && !in_yp[v]) z.push_back(v);
    pre.stages.push_back(make_stage("derive Z", {}, z, (long long)z.size()));

    ExtremalWitness core = w;
    core.xk = xk;
    core.yk = yp;
    core.xk_big = bx;
    core.yk_big = by;
    core.x_extra = xp;
    core.z_set = z;

    int k1_side = (int)t.part_y().size() < (int)t.part_x().size() ? 1 : 0;
    long long k1 = std::min(t.part_x().size(), t.part_y().size());
    long long k2 = std::max(t.part_x().size(), t.part_y().size());

    auto run_engine = [&](const char* label, int x_part, const std::vector<int>& s,
                          const Embedding& f) {
        auto tr = complete_bipartite_embedding(g, core, t, x_part, s, f, prof);
        tr.case_label = label;
        tr.stages.insert(tr.stages.begin(), pre.stages.begin(), pre.stages.end());
        return tr;
    };
    auto local_fail = [&](const std::string& label, Embedding f) {
        return fail_trace(std::move(pre), label, std::move(f));
    };

    if ((long long)xk.size() >= k1) {
        return run_engine("case 0", k1_side, {}, Embedding(tn));
    }

    if (!z.empty()) {
        auto in_z = flags(n, z, "Z");
        int zv = -1, vv = -1;
        for (int cz : z) {
            for (int u : g.neighbors(cz)) {
                if (!in_z[u]) {
                    zv = cz;
                    vv = u;
                    break;
                }
            }
            if (zv != -1) break;
        }
        if (zv == -1) throw Error("internal", "no edge leaves Z in a connected graph");
        TreeSplit split;
        try {
            split = split_tree_by_edge(t, prof.coeff("bx_split_alpha", Rat(4) * Rat(delta) * eps));
        } catch (const Error& e) {
            if (std::string(e.kind()) != "infeasible") throw;
            return local_fail("case 1: tree split", Embedding(tn));
        }
        Rat split_hi = prof.coeff("bx_split_hi", Rat(16) * square(delta) * eps) * kk;
        if (Rat((long long)split.side.size() - 1) > split_hi)
            return local_fail("case 1: split window", Embedding(tn));
        auto in_side = flags(tn, split.side, "split side");
        int z_t = in_side[split.edge.first] ? split.edge.first : split.edge.second;
        int v_t = in_side[split.edge.first] ? split.edge.second : split.edge.first;
        if (min_inner_degree(g, z) < (int)split.side.size() - 1)
            return local_fail("case 1: Z minimum degree", Embedding(tn));
        Embedding f(tn);
        std::vector<char> used(n, 0);
        f.assign(z_t, zv);
        used[zv] = 1;
        auto run = embed_piece(g, t, f, used, z_t, in_side, in_z);
        std::vector<int> placed{z_t};
        placed.insert(placed.end(), run.placed.begin(), run.placed.end());
        pre.stages.push_back(
            make_stage("case 1: embed the split piece into Z", placed, z, run.min_feasible));
        if (!run.ok) return local_fail("case 1: embed the split piece into Z", std::move(f));
        f.assign(v_t, vv);
        used[vv] = 1;
        pre.stages.push_back(make_stage("case 1: attach the split edge", {v_t}, {vv}));
        if (in_yp[vv]) {
            return run_engine("case 1.1", 1 - t.side(v_t), split.side, f);
        }
        std::vector<int> placed_att;
        long long feas = -1;
        for (int y : t.graph().neighbors(v_t)) {
            if (y == z_t) continue;
            int pick = -1;
            long long count = 0;
            for (int u : g.neighbors(vv)) {
                if (!in_yp[u] || used[u]) continue;
                if (pick == -1) pick = u;
                ++count;
            }
            if (feas < 0 || count < feas) feas = count;
            if (pick == -1) {
                pre.stages.push_back(make_stage("case 1.2: attach neighbors of the split vertex",
                                                placed_att, yp, feas));
                return local_fail("case 1.2: attach neighbors of the split vertex", std::move(f));
            }
            f.assign(y, pick);
            used[pick] = 1;
            placed_att.push_back(y);
        }
        pre.stages.push_back(
            make_stage("case 1.2: attach neighbors of the split vertex", placed_att, yp, feas));
        std::vector<int> s2 = split.side;
        s2.push_back(v_t);
        std::sort(s2.begin(), s2.end());
        return run_engine("case 1.2", t.side(v_t), s2, f);
    }

    long long deficiency = (long long)(k + 1) / 2 - (long long)xk.size();
    if (deficiency <= 0) throw Error("internal", "case 2 reached with a covered small part");
    if (2 * deficiency <= k2 - k1 - 1) throw Error("internal", "deficiency bound failed");
    int dct = (int)deficiency;
    pre.stages.push_back(make_stage("case 2: deficiency", {}, {}, deficiency));

    Graph ypg = g.induced(yp);
    StarsOrMatching som;
    try {
        som = stars_or_matching(ypg, dct, delta);
    } catch (const Error& e) {
        if (std::string(e.kind()) != "hypothesis") throw;
        return local_fail("case 2: star pack hypotheses", Embedding(tn));
    }

    if (som.is_stars) {
        std::vector<int> xt;
        for (int v = 0; v < tn; ++v)
            if (t.side(v) == k1_side) xt.push_back(v);
        std::vector<int> centers;
        try {
            centers = scattered_set(t.graph(), xt, dct, 4, {});
        } catch (const Error& e) {
            if (std::string(e.kind()) != "infeasible") throw;
            return local_fail("case 2.1: scatter star centers", Embedding(tn));
        }
        Embedding f(tn);
        std::vector<int> placed;
        for (int i = 0; i < dct; ++i) {
            const Star& star = som.stars[i];
            f.assign(centers[i], yp[star.center]);
            placed.push_back(centers[i]);
            size_t j = 0;
            for (int y : t.graph().neighbors(centers[i])) {
                if (j >= star.leaves.size())
                    throw Error("internal", "star too small for the tree degree");
                f.assign(y, yp[star.leaves[j++]]);
                placed.push_back(y);
            }
        }
        pre.stages.push_back(make_stage("case 2.1: prescribe stars", placed, yp, dct));
        return run_engine("case 2.1", k1_side, centers, f);
    }

    std::vector<Edge> match_g;
    for (auto [a, b] : som.matching) {
        int u = yp[a], v = yp[b];
        match_g.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(match_g.begin(), match_g.end());

    auto lb = leaves_or_bare_paths(t, 10);
    if (!lb.is_leaves) {
        if ((int)lb.paths.size() < dct)
            return local_fail("case 2.2.1: bare path supply", Embedding(tn));
        if ((int)match_g.size() < 2 * dct)
            return local_fail("case 2.2.1: matching supply", Embedding(tn));
        int y_side = 1 - k1_side;
        Embedding f(tn);
        std::vector<char> used(n, 0);
        std::vector<int> s_set, placed;
        long long feas = -1;
        for (int i = 0; i < dct; ++i) {
            const auto& p = lb.paths[i];
            int off = t.side(p[2]) == y_side ? 2 : 3;
            if (t.side(p[off]) != y_side) throw Error("internal", "bare path parity failed");
            int pa = p[off], pb = p[off + 1], pc = p[off + 2], pd = p[off + 3], pe = p[off + 4];
            Edge lo = match_g[2 * i], hi = match_g[2 * i + 1];
            int xm = lo.first, ym = lo.second, xq = hi.first, yq = hi.second;
            int zi = -1;
            long long count = 0;
            for (int u : g.neighbors(xm)) {
                if (!in_x[u] || used[u] || !g.has_edge(u, xq)) continue;
                if (zi == -1) zi = u;
                ++count;
            }
            if (feas < 0 || count < feas) feas = count;
            if (zi == -1) {
                pre.stages.push_back(
                    make_stage("case 2.2.1: reroute bare paths", placed, bx, feas));
                return local_fail("case 2.2.1: common neighbor", std::move(f));
            }
            f.assign(pa, ym);
            f.assign(pb, xm);
            f.assign(pc, zi);
            f.assign(pd, xq);
            f.assign(pe, yq);
            for (int u : {ym, xm, zi, xq, yq}) used[u] = 1;
            for (int v : {pa, pb, pc, pd, pe}) placed.push_back(v);
            s_set.push_back(pb);
            s_set.push_back(pc);
            s_set.push_back(pd);
        }
        pre.stages.push_back(make_stage("case 2.2.1: reroute bare paths", placed, bx, feas));
        std::sort(s_set.begin(), s_set.end());
        return run_engine("case 2.2.1", k1_side, s_set, f);
    }

    if ((int)match_g.size() < 3 * dct)
        return local_fail("case 2.2.2: matching supply", Embedding(tn));
    std::vector<int> cand_side[2];
    for (auto [parent, leaf] : lb.leaf_edges) cand_side[t.side(leaf)].push_back(leaf);
    int first = cand_side[1].size() > cand_side[0].size() ? 1 : 0;
    std::vector<int> xs;
    int chosen_side = -1;
    for (int attempt = 0; attempt < 2 && chosen_side == -1; ++attempt) {
        int side = attempt == 0 ? first : 1 - first;
        try {
            xs = scattered_set(t.graph(), sorted_copy(cand_side[side]), 3 * dct, 4, {});
            chosen_side = side;
        } catch (const Error& e) {
            if (std::string(e.kind()) != "infeasible") throw;
        }
    }
    if (chosen_side == -1) return local_fail("case 2.2.2: scatter leaves", Embedding(tn));
    Embedding f(tn);
    std::vector<int> placed;
    for (int i = 0; i < 3 * dct; ++i) {
        int x = xs[i];
        if (t.graph().degree(x) != 1) throw Error("internal", "chosen leaf is not a leaf");
        int y = t.graph().neighbors(x)[0];
        f.assign(x, match_g[i].first);
        f.assign(y, match_g[i].second);
        placed.push_back(x);
        placed.push_back(y);
    }
    pre.stages.push_back(make_stage("case 2.2.2: prescribe the leaf matching", placed, yp, 3 * dct));
    return run_engine("case 2.2.2", chosen_side, xs, f);
}

Graph find_good_subgraph(const Graph& g, const std::vector<int>& part_x,
                         const std::vector<int>& part_y, int k, const Rat& c, uint64_t seed,
                         int resample_cap) {
    int n = g.order();
    if (k < 1) throw Error("precondition", "k must be positive");
    if (c <= Rat(0)) throw Error("precondition", "c must be positive");
    auto px = sorted_copy(part_x);
    auto py = sorted_copy(part_y);
    auto in_x = flags(n, px, "part_x");
    auto in_y = flags(n, py, "part_y");
    for (int v : py)
        if (in_x[v]) throw Error("precondition", "parts overlap");
    Rat target = c * c * Rat((long long)k);
    if (Rat((long long)py.size()) < target)
        throw Error("precondition", "part_y smaller than c^2*k");
    long long cross = g.edges_between(px, py);
    if (Rat(cross) < Rat((long long)k) * Rat((long long)py.size()))
        throw Error("precondition", "fewer than k|Y| edges across the parts");

    long long t_size = target.ceil();
    std::vector<int> ys;
    for (int attempt = 0; attempt < resample_cap; ++attempt) {
        auto rng = derived_rng(seed, (uint64_t)attempt);
        auto idx = rng_sample(rng, (int)py.size(), (int)t_size);
        std::vector<int> sample;
        sample.reserve(idx.size());
        for (int i : idx) sample.push_back(py[i]);
        std::sort(sample.begin(), sample.end());
        if (Rat(g.edges_between(px, sample)) >= Rat((long long)k) * Rat(t_size)) {
            ys = sample;
            break;
        }
    }
    if (ys.empty()) throw Error("internal", "sampling Y' exceeded the resample cap");

    auto in_ys = flags(n, ys, "Y'");
    Rat d_floor = c * Rat((long long)k) / Rat(4);
    std::vector<int> xs;
    for (int v : px)
        if (Rat(count_in(g, v, in_ys)) >= d_floor) xs.push_back(v);
    if (Rat((long long)xs.size()) < Rat((long long)k) - Rat((long long)px.size()) / c)
        throw Error("internal", "good subgraph bound failed");

    std::vector<int> verts = xs;
    verts.insert(verts.end(), ys.begin(), ys.end());
    std::sort(verts.begin(), verts.end());
    auto in_xs = flags(n, xs, "X'");
    Graph sub = g.induced(verts);
    std::vector<Edge> drop;
    for (auto [a, b] : sub.edges())
        if (in_xs[verts[a]] == in_xs[verts[b]]) drop.push_back({a, b});
    return sub.without_edges(drop);
}

}  // namespace esos
