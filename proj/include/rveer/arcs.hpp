#pragma once

#include <optional>

#include "surface.hpp"

namespace rveer {

enum class Side { Left, Right };
enum class Cmp { Left, Right, Equal };

inline const char* to_string(Cmp c) {
    return c == Cmp::Right ? "Right" : c == Cmp::Left ? "Left" : "Equal";
}

// Node-by-node view of a strand: triangle, entry port, exit port.
struct Seq {
    std::vector<int> tri, in, out;
    bool periodic = false;
    int n() const { return static_cast<int>(tri.size()); }
    int at(int i) const {
        if (!periodic) return i;
        int m = n();
        return ((i % m) + m) % m;
    }
    int T(int i) const { return tri[at(i)]; }
    int I(int i) const { return in[at(i)]; }
    int O(int i) const { return out[at(i)]; }
    int rev_node(int p) const { return periodic ? (n() - p % n()) % n() : n() - 1 - p; }
};

inline Seq make_seq(const Surface& S, const Path& p) {
    Seq q;
    int n = static_cast<int>(p.sides.size());
    int t = S.mark_tri(p.start);
    for (int i = 0; i <= n; ++i) {
        q.tri.push_back(t);
        q.in.push_back(i == 0 ? S.mark_port[p.start] : S.side_port[S.glue[p.sides[i - 1]]]);
        q.out.push_back(i == n ? S.mark_port[p.end] : S.side_port[p.sides[i]]);
        if (i < n) t = tri_of(S.glue[p.sides[i]]);
    }
    return q;
}

inline Seq make_seq(const Surface& S, const Loop& l) {
    Seq q;
    q.periodic = true;
    int n = static_cast<int>(l.sides.size());
    for (int i = 0; i < n; ++i) {
        q.tri.push_back(tri_of(l.sides[i]));
        q.in.push_back(S.side_port[S.glue[l.sides[(i + n - 1) % n]]]);
        q.out.push_back(S.side_port[l.sides[i]]);
    }
    return q;
}

// c relative to a walker entering at port a and leaving at port b (ports ccw).
inline Side side_of(int a, int b, int c, int P) {
    return ((c - a + P) % P < (b - a + P) % P) ? Side::Right : Side::Left;
}

struct Segment {
    int i, j, len;
    Side entry, exit;
    bool linked() const { return entry != exit; }
};

// Maximal common segments of lifts of A and B traversed in the same direction.
// In reversed mode B is the reverse of the second strand and single-node segments are skipped.
template <class F>
void for_each_segment(const Surface& S, const Seq& A, const Seq& B, bool rev_mode, F&& f) {
    const int cap = 2 * (A.n() + B.n()) + 4;
    for (int i = 0; i < A.n(); ++i) {
        int t = A.tri[i];
        int P = S.nports(t);
        for (int j = 0; j < B.n(); ++j) {
            if (B.tri[j] != t || A.in[i] == B.in[j]) continue;
            int L = 0;
            bool skip = false;
            for (;;) {
                int oa = A.O(i + L), ob = B.O(j + L);
                if (oa != ob) break;
                if (S.leaf_port(A.T(i + L), oa) || ++L > cap) {
                    skip = true;
                    break;
                }
            }
            if (skip) continue;
            if (L == 0) {
                if (rev_mode) continue;
                if (B.in[j] == A.out[i] || B.out[j] == A.in[i]) continue;
            }
            int t2 = A.T(i + L), P2 = S.nports(t2);
            Segment sg{i, j, L, side_of(A.in[i], A.out[i], B.in[j], P),
                       side_of(A.I(i + L), A.O(i + L), B.O(j + L), P2)};
            f(sg);
        }
    }
}

struct Strand {
    Seq fwd, bwd;
    int nsides = 0;
    bool loop = false;
};

inline Strand make_strand(const Surface& S, const Path& p) {
    return {make_seq(S, p), make_seq(S, reversed(S, p)), static_cast<int>(p.sides.size()), false};
}
inline Strand make_strand(const Surface& S, const Loop& l) {
    return {make_seq(S, l), make_seq(S, reversed(S, l)), static_cast<int>(l.sides.size()), true};
}

inline int count_linked(const Surface& S, const Strand& a, const Strand& b) {
    int c = 0;
    for_each_segment(S, a.fwd, b.fwd, false, [&](const Segment& g) { c += g.linked(); });
    for_each_segment(S, a.fwd, b.bwd, true, [&](const Segment& g) { c += g.linked(); });
    return c;
}

// Interior intersection number of two reduced strands (arcs or curves).
template <class X, class Y>
int geometric_intersection(const Surface& S, const X& a, const Y& b) {
    return count_linked(S, make_strand(S, a), make_strand(S, b));
}

template <class X>
int self_intersection(const Surface& S, const X& a) {
    Strand s = make_strand(S, a);
    int c = count_linked(S, s, s);
    if (c % 2) fail_inv("odd self-linking count");
    return c / 2;
}

template <class X>
bool embedded(const Surface& S, const X& a) {
    return self_intersection(S, a) == 0;
}

// Loop is a proper power of a shorter loop.
inline bool is_power(const Loop& l) {
    int n = static_cast<int>(l.sides.size());
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (int i = d; i < n && ok; ++i) ok = l.sides[i] == l.sides[i - d];
        if (ok) return true;
    }
    return false;
}

// beta relative to alpha at their shared start.
inline Cmp right_of(const Surface& S, const Path& a, const Path& b) {
    if (a.start != b.start) fail_pre("arcs do not share the basepoint");
    size_t k = 0;
    while (k < a.sides.size() && k < b.sides.size() && a.sides[k] == b.sides[k]) ++k;
    if (k == a.sides.size() && k == b.sides.size() && a.end == b.end) return Cmp::Equal;
    Seq A = make_seq(S, a), B = make_seq(S, b);
    int t = A.tri[k];
    return side_of(A.in[k], A.out[k], B.out[k], S.nports(t)) == Side::Right ? Cmp::Right : Cmp::Left;
}

// Comparison at the shared end point, seen from the end.
inline Cmp right_of_at_end(const Surface& S, const Path& a, const Path& b) {
    if (a.end != b.end) fail_pre("arcs do not share the end point");
    return right_of(S, reversed(S, a), reversed(S, b));
}

// Relative position of two non-crossing lifts through a common node: side of B w.r.t. A.
// Returns nullopt when the lifts coincide or are pinned at both ends.
inline std::optional<Side> lift_side(const Surface& S, const Seq& A, int pa, const Seq& B, int pb,
                                     const Seq& Brev) {
    int ia = A.I(pa), oa = A.O(pa), ib = B.I(pb), ob = B.O(pb);
    int P = S.nports(A.T(pa));
    if (ib != ia && ob != oa) {
        if (ib == oa || ob == ia) return lift_side(S, A, pa, Brev, B.rev_node(B.at(pb)), B);
        return side_of(ia, oa, ib, P);
    }
    const int cap = 2 * (A.n() + B.n()) + 4;
    int u = 0;
    bool pin_back = false, pin_front = false;
    while (A.I(pa - u) == B.I(pb - u)) {
        if (S.leaf_port(A.T(pa - u), A.I(pa - u))) {
            pin_back = true;
            break;
        }
        if (++u > cap) return std::nullopt;
    }
    int v = 0;
    while (A.O(pa + v) == B.O(pb + v)) {
        if (S.leaf_port(A.T(pa + v), A.O(pa + v))) {
            pin_front = true;
            break;
        }
        if (++v > cap) return std::nullopt;
    }
    if (!pin_back) {
        int n0 = pa - u;
        return side_of(A.I(n0), A.O(n0), B.I(pb - u), S.nports(A.T(n0)));
    }
    if (!pin_front) {
        int n1 = pa + v;
        return side_of(A.I(n1), A.O(n1), B.O(pb + v), S.nports(A.T(n1)));
    }
    return std::nullopt;
}

namespace detail {

struct Crossing {
    int i, len, j;
    bool rev;  // lift of the reversed curve
    bool lr;   // curve crosses P from its left to its right
};

inline std::vector<int> loop_from(const Loop& c, int q) {
    int m = static_cast<int>(c.sides.size());
    std::vector<int> w;
    for (int t = 0; t < m; ++t) w.push_back(c.sides[(q + t) % m]);
    return w;
}

}  // namespace detail

// Single positive (sign=+1) or negative (sign=-1) twist of an arc about c.
inline Path twist_once(const Surface& S, const Loop& c, const Strand& cs, const Loop& crev, int sign,
                       const Path& p) {
    Seq A = make_seq(S, p);
    std::vector<detail::Crossing> xs;
    for_each_segment(S, A, cs.fwd, false, [&](const Segment& g) {
        if (g.linked()) xs.push_back({g.i, g.len, g.j, false, g.entry == Side::Left});
    });
    for_each_segment(S, A, cs.bwd, true, [&](const Segment& g) {
        if (g.linked()) xs.push_back({g.i, g.len, g.j, true, g.entry == Side::Left});
    });
    if (xs.empty()) return p;
    const int m = cs.fwd.n();
    auto seq_of = [&](const detail::Crossing& x) -> const Seq& { return x.rev ? cs.bwd : cs.fwd; };
    auto other = [&](const detail::Crossing& x) -> const Seq& { return x.rev ? cs.fwd : cs.bwd; };
    auto less = [&](const detail::Crossing& x, const detail::Crossing& y) {
        if (&x == &y) return false;
        if (x.i + x.len < y.i) return true;
        if (y.i + y.len < x.i) return false;
        if (x.i == y.i && x.j == y.j && x.rev == y.rev) return false;
        int mm = std::max(x.i, y.i);
        int px = (x.j + mm - x.i) % m, py = (y.j + mm - y.i) % m;
        auto sd = lift_side(S, seq_of(x), px, seq_of(y), py, other(y));
        if (!sd) fail_inv("twist: coincident lifts");
        return *sd == (x.lr ? Side::Left : Side::Right);
    };
    std::sort(xs.begin(), xs.end(), less);
    std::vector<int> w;
    int prev = 0;
    for (const auto& x : xs) {
        int idx = std::max(x.i, prev);
        if (idx > x.i + x.len) fail_inv("twist: crossing order inconsistent");
        w.insert(w.end(), p.sides.begin() + prev, p.sides.begin() + idx);
        prev = idx;
        int q = (x.j + idx - x.i) % m;
        const Loop& cl = x.rev ? crev : c;
        bool forward = (sign > 0) == x.lr;
        if (forward) {
            auto l = detail::loop_from(cl, q);
            w.insert(w.end(), l.begin(), l.end());
        } else {
            for (int t = 1; t <= m; ++t) w.push_back(S.glue[cl.sides[((q - t) % m + m) % m]]);
        }
    }
    w.insert(w.end(), p.sides.begin() + prev, p.sides.end());
    return reduce(S, Path{p.start, p.end, w});
}

inline Path twist(const Surface& S, const Loop& c, int e, Path p) {
    if (e == 0) return p;
    Strand cs = make_strand(S, c);
    Loop cr = reversed(S, c);
    for (int k = 0; k < std::abs(e); ++k) p = twist_once(S, c, cs, cr, e > 0 ? 1 : -1, p);
    return p;
}

// Closed curve as a based loop at marked point 0 and back.
inline Path based(const Surface& S, const Loop& l) {
    auto q = tri_path(S, S.mark_tri(0), tri_of(l.sides[0]));
    Path p{0, 0, q};
    p.sides.insert(p.sides.end(), l.sides.begin(), l.sides.end());
    for (auto it = q.rbegin(); it != q.rend(); ++it) p.sides.push_back(S.glue[*it]);
    return reduce(S, p);
}

inline Loop unbase(const Surface& S, const Path& p) { return make_loop(S, p.sides); }

inline Loop twist(const Surface& S, const Loop& c, int e, const Loop& l) {
    return unbase(S, twist(S, c, e, based(S, l)));
}

}  // namespace rveer
