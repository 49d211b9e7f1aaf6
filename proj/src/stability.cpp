#include "esos/stability.hpp"

#include <algorithm>

namespace esos {

DenseCore detect_dense_core(const Graph& g, int k, const Rat& alpha) {
    if (k < 1) throw Error("precondition", "k must be positive");
    if (alpha < Rat(0) || alpha >= Rat(1))
        throw Error("precondition", "alpha must lie in [0,1)");
    Rat deg_floor = (Rat(1) - alpha) * Rat(k);
    Rat size_cap = (Rat(1) + alpha) * Rat(k);

    DenseCore out;
    for (const auto& comp : g.components()) {
        std::vector<int> alive = comp;
        std::vector<char> in(g.order(), 0);
        for (int v : alive) in[v] = 1;
        auto deg_in = [&](int v) {
            int d = 0;
            for (int w : g.neighbors(v)) d += in[w];
            return d;
        };
        bool shrunk = true;
        while (shrunk && !alive.empty()) {
            shrunk = false;
            for (int v : alive) {
                if (Rat(deg_in(v)) < deg_floor) {
                    in[v] = 0;
                    alive.erase(std::find(alive.begin(), alive.end(), v));
                    shrunk = true;
                    break;
                }
            }
        }
        if (!alive.empty() && Rat((long long)alive.size()) <= size_cap) {
            out.found = true;
            out.vertices = alive;
            out.min_degree = (int)alive.size();
            for (int v : alive) out.min_degree = std::min(out.min_degree, deg_in(v));
            return out;
        }
    }
    return out;
}

BipartiteCore detect_bipartite_core(const Graph& g, const std::vector<int>& part_x,
                                    const std::vector<int>& part_y, int k, const Rat& alpha,
                                    const Rat& y_floor, bool y_first) {
    if (k < 1) throw Error("precondition", "k must be positive");
    if (alpha < Rat(0) || alpha >= Rat(1))
        throw Error("precondition", "alpha must lie in [0,1)");
    std::vector<char> in_x(g.order(), 0), in_y(g.order(), 0);
    for (int v : part_x) {
        if (v < 0 || v >= g.order() || in_x[v])
            throw Error("precondition", "part_x invalid");
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

    Rat x_keep = (Rat(1) - alpha) * Rat((long long)part_y.size());
    Rat y_keep = (Rat(1) - alpha) * Rat(k, 2);
    auto count_in = [&](int v, const std::vector<char>& in) {
        int c = 0;
        for (int w : g.neighbors(v)) c += in[w];
        return c;
    };
    auto pass_x = [&]() {
        bool changed = false;
        for (int v : part_x)
            if (in_x[v] && Rat(count_in(v, in_y)) < x_keep) {
                in_x[v] = 0;
                changed = true;
            }
        return changed;
    };
    auto pass_y = [&]() {
        bool changed = false;
        for (int v : part_y)
            if (in_y[v] && Rat(count_in(v, in_x)) < y_keep) {
                in_y[v] = 0;
                changed = true;
            }
        return changed;
    };
    bool changed = true;
    while (changed) {
        if (y_first) {
            changed = pass_y();
            changed = pass_x() || changed;
        } else {
            changed = pass_x();
            changed = pass_y() || changed;
        }
    }

    BipartiteCore out;
    for (int v : part_x)
        if (in_x[v]) out.side_x.push_back(v);
    for (int v : part_y)
        if (in_y[v]) out.side_y.push_back(v);
    std::sort(out.side_x.begin(), out.side_x.end());
    std::sort(out.side_y.begin(), out.side_y.end());
    if (out.side_x.empty() || out.side_y.empty()) return out;
    out.min_deg_x = g.order();
    for (int v : out.side_x) out.min_deg_x = std::min(out.min_deg_x, count_in(v, in_y));
    out.min_deg_y = g.order();
    for (int v : out.side_y) out.min_deg_y = std::min(out.min_deg_y, count_in(v, in_x));
    out.found = Rat((long long)out.side_x.size()) <= (Rat(1) + alpha) * Rat(k, 2) &&
                Rat((long long)out.side_y.size()) >= y_floor &&
                Rat(out.min_deg_x) >= (Rat(1) - alpha) * Rat((long long)out.side_y.size()) &&
                Rat(out.min_deg_y) >= (Rat(1) - alpha) * Rat(k, 2);
    return out;
}

}  // namespace esos
