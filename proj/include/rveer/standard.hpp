#pragma once

#include "arcs.hpp"

namespace rveer {

namespace detail {

// Fan triangulation of an N-gon from corner 0; polygon side p lies on this triangle side.
inline int poly_side(int N, int p) {
    if (p == 0) return 0;
    if (p == N - 1) return 3 * (N - 3) + 2;
    return 3 * (p - 1) + 1;
}

// Walk inside the fan between triangles a and b.
inline std::vector<int> fan_walk(int a, int b) {
    std::vector<int> w;
    for (; a < b; ++a) w.push_back(3 * a + 2);
    for (; a > b; --a) w.push_back(3 * a);
    return w;
}

// Closed curve exiting the given polygon sides in cyclic order.
inline std::vector<int> poly_loop(const Surface& S, int N, const std::vector<int>& exits) {
    std::vector<int> w;
    int cur = tri_of(S.glue[poly_side(N, exits.back())]);
    for (int p : exits) {
        int s = poly_side(N, p);
        auto f = fan_walk(cur, tri_of(s));
        w.insert(w.end(), f.begin(), f.end());
        w.push_back(s);
        cur = tri_of(S.glue[s]);
    }
    return w;
}

inline Path poly_arc(const Surface& S, int N, int from, const std::vector<int>& exits, int to) {
    Path p{from, to, {}};
    int cur = S.mark_tri(from);
    for (int e : exits) {
        int s = poly_side(N, e);
        auto f = fan_walk(cur, tri_of(s));
        p.sides.insert(p.sides.end(), f.begin(), f.end());
        p.sides.push_back(s);
        cur = tri_of(S.glue[s]);
    }
    auto f = fan_walk(cur, S.mark_tri(to));
    p.sides.insert(p.sides.end(), f.begin(), f.end());
    return reduce(S, p);
}

}  // namespace detail

// boundary:k is parallel to the component of marked point k; span:i-j is a shortest arc from i to j.
inline void add_basic_tables(Surface& S) {
    for (int c = 0; c < S.nboundary() && S.euler() < 1; ++c) {
        for (int m = 0; m < S.nmarks; ++m)
            if (S.mark_comp[m] == c) {
                S.curves["boundary:" + std::to_string(m)] = boundary_loop(S, c);
                break;
            }
    }
    for (int i = 0; i < S.nmarks; ++i)
        for (int j = 0; j < S.nmarks; ++j)
            if (i != j) S.arcs["span:" + std::to_string(i) + "-" + std::to_string(j)] = Path{i, j, tri_path(S, S.mark_tri(i), S.mark_tri(j))};
}

// Standard model of genus g with b boundary components.
// Polygon word: a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1, e1 d1 e1^-1 ... e_{b-1} d_{b-1} e_{b-1}^-1, d0.
// Marked point k sits on boundary side d_k.
inline Surface build_standard(int g, int b) {
    if (b < 1) fail_pre("standard model needs at least one boundary component");
    if (g < 0) fail_pre("negative genus");
    Surface S;
    if (g == 0 && b == 1) {
        S.ntri = 1;
        S.glue.assign(3, -1);
        S.side_marks.assign(3, {});
        S.side_marks[0] = {0};
        S.finalize();
        return S;
    }
    const int N = 4 * g + 3 * (b - 1) + 1;
    S.ntri = N - 2;
    S.glue.assign(3 * S.ntri, -1);
    S.side_marks.assign(3 * S.ntri, {});
    for (int t = 0; t + 1 < S.ntri; ++t) {
        S.glue[3 * t + 2] = 3 * (t + 1);
        S.glue[3 * (t + 1)] = 3 * t + 2;
    }
    auto pair = [&](int p, int q) {
        int x = detail::poly_side(N, p), y = detail::poly_side(N, q);
        S.glue[x] = y;
        S.glue[y] = x;
    };
    std::vector<int> pa(g), pb(g), pe(b, -1), pd(b);
    for (int i = 0; i < g; ++i) {
        pa[i] = 4 * i;
        pb[i] = 4 * i + 1;
        pair(4 * i, 4 * i + 2);
        pair(4 * i + 1, 4 * i + 3);
    }
    for (int k = 1; k < b; ++k) {
        int base = 4 * g + 3 * (k - 1);
        pe[k] = base;
        pd[k] = base + 1;
        pair(base, base + 2);
    }
    pd[0] = N - 1;
    for (int k = 0; k < b; ++k) S.side_marks[detail::poly_side(N, pd[k])] = {k};
    S.finalize();

    add_basic_tables(S);
    if (g == 0 && b == 2) S.curves["core"] = S.curves["boundary:0"];
    for (int i = 0; i < g; ++i) {
        std::string n = std::to_string(i + 1);
        S.curves["a" + n] = make_loop(S, detail::poly_loop(S, N, {pb[i]}));
        S.curves["b" + n] = make_loop(S, detail::poly_loop(S, N, {pa[i]}));
        S.arcs["arc:a" + n] = detail::poly_arc(S, N, 0, {pb[i]}, 0);
        S.arcs["arc:b" + n] = detail::poly_arc(S, N, 0, {pa[i]}, 0);
    }
    if (g == 1) {
        S.curves["a"] = S.curves["a1"];
        S.curves["b"] = S.curves["b1"];
        S.arcs["arc:a"] = S.arcs["arc:a1"];
        S.arcs["arc:b"] = S.arcs["arc:b1"];
    }
    // chain curve between consecutive handles
    for (int i = 0; i + 1 < g; ++i) {
        std::vector<int> cand;
        for (int k = 0; k < 4; ++k) cand.push_back(4 * i + k);
        bool found = false;
        for (int x : cand) {
            for (int y = 4 * (i + 1); y < 4 * (i + 2) && !found; ++y) {
                Loop c{cyclic_reduce(S, detail::poly_loop(S, N, {x, y}))};
                if (c.sides.empty() || is_power(c) || !embedded(S, c)) continue;
                bool ok = true;
                for (int j = 0; j < g && ok; ++j) {
                    std::string n = std::to_string(j + 1);
                    int ia = geometric_intersection(S, c, S.curves["a" + n]);
                    int ib = geometric_intersection(S, c, S.curves["b" + n]);
                    ok = ia == 0 && ib == ((j == i || j == i + 1) ? 1 : 0);
                }
                if (ok) {
                    S.curves["c" + std::to_string(i + 1)] = canonical(S, c);
                    found = true;
                }
            }
            if (found) break;
        }
        if (!found) fail_inv("no chain curve found for standard model");
    }
    // curves enclosing two holes of a planar surface
    for (int i = 1; i < b; ++i)
        for (int j = i + 1; j < b; ++j)
            S.curves["pair:" + std::to_string(i) + "-" + std::to_string(j)] =
                make_loop(S, detail::poly_loop(S, N, {pe[i], pe[j]}));
    if (g == 0 && b == 4) {
        S.curves["alpha"] = S.curves["pair:2-3"];
        S.curves["beta"] = S.curves["pair:1-2"];
        S.curves["gamma"] = S.curves["pair:1-3"];
        S.curves["r"] = S.curves["boundary:1"];
        S.curves["s"] = S.curves["boundary:2"];
        S.curves["t"] = S.curves["boundary:3"];
        S.curves["z"] = S.curves["boundary:0"];
    }
    return S;
}

}  // namespace rveer
