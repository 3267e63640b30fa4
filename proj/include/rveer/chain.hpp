#pragma once

#include "enumerate.hpp"
#include "overlay.hpp"

namespace rveer {

inline Path normalize(const Surface& S, const Path& p) {
    if (!valid_path(S, p)) fail_pre("not a path on this surface");
    Path r = reduce(S, p);
    if (!embedded(S, r)) fail_pre("arc is not embedded");
    return r;
}

inline bool is_isotopic(const Surface& S, const Path& a, const Path& b) {
    if (a.start != b.start || a.end != b.end) fail_pre("arcs have different endpoints");
    return reduce(S, a) == reduce(S, b);
}

inline bool is_isotopic(const Surface& S, const Loop& a, const Loop& b) {
    return canonical(S, Loop{cyclic_reduce(S, a.sides)}) == canonical(S, Loop{cyclic_reduce(S, b.sides)});
}

enum class ChainCase { Case1, Case2A, Case2B, Case3ABoundary, Case3AHandle, Case3B, Search };

inline const char* to_string(ChainCase c) {
    switch (c) {
        case ChainCase::Case1: return "1";
        case ChainCase::Case2A: return "2A";
        case ChainCase::Case2B: return "2B";
        case ChainCase::Case3ABoundary: return "3A-boundary";
        case ChainCase::Case3AHandle: return "3A-handle";
        case ChainCase::Case3B: return "3B";
        case ChainCase::Search: return "search";
    }
    return "?";
}

struct Chain {
    std::vector<Path> arcs;
    std::vector<ChainCase> steps;  // how each intermediate arc was produced
};

// Interior crossing of alpha (strand 0) and beta (strand 1) in minimal position.
struct ArcCrossing {
    int ai, apos;  // alpha node and rank along that chord
    int bj, bpos;  // beta node and rank along that chord
    bool rightward;  // beta crosses from alpha's left to alpha's right
};

// Crossings ordered along alpha; nullopt if the overlay does not realize minimal position.
inline std::optional<std::vector<ArcCrossing>> arc_crossings(const Surface& S, const Path& a, const Path& b) {
    Overlay ov(S, {a, b});
    if (!ov.consistent() || ov.crossings(0, 1) != geometric_intersection(S, a, b)) return std::nullopt;
    if (ov.crossings(0, 0) || ov.crossings(1, 1)) return std::nullopt;
    std::vector<ArcCrossing> xs;
    for (int t = 0; t < S.ntri; ++t) {
        const auto& ch = ov.chords(t);
        int N = static_cast<int>(ov.perimeter(t).size());
        for (int c = 0; c < static_cast<int>(ch.size()); ++c) {
            if (ch[c].strand != 0) continue;
            auto oc = ov.along(t, c);
            for (int u = 0; u < static_cast<int>(oc.size()); ++u) {
                int d = oc[u];
                if (ch[d].strand != 1) continue;
                auto od = ov.along(t, d);
                int v = static_cast<int>(std::find(od.begin(), od.end(), c) - od.begin());
                xs.push_back({ch[c].node, u, ch[d].node, v, Overlay::item_in(ch[d].b, ch[c].a, ch[c].b, N)});
            }
        }
    }
    std::sort(xs.begin(), xs.end(), [](const ArcCrossing& x, const ArcCrossing& y) {
        return std::tie(x.ai, x.apos) < std::tie(y.ai, y.apos);
    });
    return xs;
}

namespace detail {

inline std::vector<int> slice(const std::vector<int>& v, int from, int to) {
    return std::vector<int>(v.begin() + from, v.begin() + to);
}

inline std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

struct ChainBuilder {
    const Surface& S;
    int search_bound;
    int max_depth;

    int I(const Path& a, const Path& b) const { return geometric_intersection(S, a, b); }

    bool usable(const Path& p) const { return valid_path(S, p) && embedded(S, p); }

    // alpha >= p >= beta with p distinct from alpha
    bool between(const Path& a, const Path& p, const Path& b) const {
        if (p == a || p.start != a.start) return false;
        if (right_of(S, a, p) != Cmp::Right) return false;
        Cmp c = right_of(S, p, b);
        return c == Cmp::Right || c == Cmp::Equal;
    }

    // Progress toward beta: both intersection numbers drop.
    bool progress(const Path& a, const Path& p, const Path& b, int m) const {
        return usable(p) && between(a, p, b) && I(a, p) < m && I(p, b) < m;
    }

    struct Candidate {
        Path arc;
        ChainCase how;
        bool operator<(const Candidate& o) const { return arc < o.arc; }
    };

    // Walks through the faces of S minus (alpha u beta) that start in the wedge at x between alpha and
    // beta; every face reached proposes arcs, tried in order of weight.
    std::optional<Candidate> region_search(const Overlay& ov, const Path& a, const Path& b,
                                           const std::vector<ArcCrossing>& P, bool separating, int m) const {
        const int x = a.start;
        auto before = [&](bool alpha, int node) {
            int c = 0;
            for (const auto& q : P) c += (alpha ? q.ai : q.bj) < node;
            return c;
        };
        // per (triangle, face): proposals
        auto propose = [&](int t, int f, const std::vector<int>& w, std::vector<Candidate>& out) {
            const auto& ch = ov.chords(t);
            for (int c = 0; c < static_cast<int>(ch.size()); ++c) {
                bool alpha = ch[c].strand == 0;
                if (alpha ? separating : !separating) continue;
                int pieces = static_cast<int>(ov.along(t, c).size()) + 1;
                int base = before(alpha, ch[c].node);
                bool beside = false;
                for (int u = 0; u < pieces && !beside; ++u) {
                    if (base + u < 1) continue;
                    for (bool right : {true, false}) {
                        auto fs = ov.faces_beside(t, c, u, right);
                        if (std::find(fs.begin(), fs.end(), f) != fs.end()) beside = true;
                    }
                }
                if (!beside) continue;
                const Path& src = alpha ? a : b;
                Path q = reduce(S, Path{x, src.end, cat(w, slice(src.sides, ch[c].node, src.weight()))});
                out.push_back({q, alpha ? ChainCase::Case3B : ChainCase::Case3AHandle});
            }
            if (!separating) return;
            const auto& per = ov.perimeter(t);
            int N = static_cast<int>(per.size());
            for (int i = 0; i < N; ++i) {
                if (per[i].kind == Overlay::Cross || per[i].mark == x) continue;
                if (ov.face_of_gap(t, i) != f && ov.face_of_gap(t, (i + N - 1) % N) != f) continue;
                out.push_back({reduce(S, Path{x, per[i].mark, w}), ChainCase::Case3ABoundary});
            }
        };
        auto accept = [&](const Candidate& c) {
            const Path& p = c.arc;
            if (!usable(p) || !between(a, p, b)) return false;
            switch (c.how) {
                case ChainCase::Case3ABoundary:
                    return !is_boundary_parallel_hug(S, p) && I(a, p) == 0 && I(p, b) == 0;
                case ChainCase::Case3AHandle: return I(p, b) == 0 && I(a, p) <= m;
                default: return I(a, p) == 0 && I(p, b) < m;
            }
        };
        const int t0 = S.mark_tri(x);
        const int f0 = ov.face_of_gap(t0, ov.germ_item(0, 0));
        const long cap = 200000;
        for (int L = 0; L <= search_bound + 2 * S.ntri; ++L) {
            std::vector<Candidate> found;
            std::vector<int> w;
            long visited = 0;
            std::function<void(int, int)> rec = [&](int t, int f) {
                if (++visited > cap) return;
                if (static_cast<int>(w.size()) == L) {
                    propose(t, f, w, found);
                    return;
                }
                for (int k = 0; k < 3; ++k) {
                    int s = 3 * t + k, g = S.glue[s];
                    if (g < 0 || (!w.empty() && S.glue[w.back()] == s)) continue;
                    int mcnt = ov.items_on(s);
                    std::vector<int> seen;
                    for (int j = 0; j <= mcnt; ++j) {
                        if (ov.face_of_gap(t, ov.gap_of_sub(s, j)) != f) continue;
                        int f2 = ov.face_of_gap(tri_of(g), ov.gap_of_sub(g, mcnt - j));
                        if (std::find(seen.begin(), seen.end(), f2) != seen.end()) continue;
                        seen.push_back(f2);
                        w.push_back(s);
                        rec(tri_of(g), f2);
                        w.pop_back();
                    }
                }
            };
            rec(t0, f0);
            std::sort(found.begin(), found.end());
            for (const auto& c : found)
                if (accept(c)) return c;
            if (visited > cap) break;
        }
        return std::nullopt;
    }

    std::pair<Path, ChainCase> step(const Path& a, const Path& b) const {
        const int m = I(a, b);
        const int x = a.start;
        Overlay ov(S, {a, b});
        if (auto xs = arc_crossings(S, a, b)) {
            const auto& P = *xs;
            const int n = static_cast<int>(P.size());
            std::vector<int> brank(n);  // r for each alpha-ordered crossing (1-based)
            {
                std::vector<int> idx(n);
                std::iota(idx.begin(), idx.end(), 0);
                std::sort(idx.begin(), idx.end(), [&](int u, int v) {
                    return std::tie(P[u].bj, P[u].bpos) < std::tie(P[v].bj, P[v].bpos);
                });
                for (int k = 0; k < n; ++k) brank[idx[k]] = k + 1;
            }
            const auto& p1 = P[0];
            const int r = brank[0];
            std::optional<std::pair<Path, ChainCase>> cand;
            if (p1.rightward) {
                // follow alpha to p1, then beta onward
                Path q{x, b.end, cat(slice(a.sides, 0, p1.ai), slice(b.sides, p1.bj, b.weight()))};
                cand = {reduce(S, q), ChainCase::Case1};
            } else if (r > 1) {
                int k = -1;  // last crossing along alpha among beta's first r-1
                for (int u = 0; u < n; ++u)
                    if (brank[u] < r) k = u;
                const auto& pr = P[k];
                if (pr.rightward) {
                    Path q{x, a.end, cat(slice(b.sides, 0, pr.bj), slice(a.sides, pr.ai, a.weight()))};
                    cand = {reduce(S, q), ChainCase::Case2A};
                } else {
                    std::vector<int> back;
                    for (int k2 = p1.bj - 1; k2 >= pr.bj; --k2) back.push_back(S.glue[b.sides[k2]]);
                    Path q{x, a.end, cat(cat(slice(a.sides, 0, p1.ai), back), slice(a.sides, pr.ai, a.weight()))};
                    cand = {reduce(S, q), ChainCase::Case2B};
                }
            } else {
                // gamma = alpha to p1, then back along beta to x
                std::vector<int> back;
                for (int k = p1.bj - 1; k >= 0; --k) back.push_back(S.glue[b.sides[k]]);
                Path g = reduce(S, Path{x, x, cat(slice(a.sides, 0, p1.ai), back)});
                bool separating = false;
                if (usable(g) && !g.sides.empty()) {
                    Overlay og(S, {g});
                    separating = og.region_euler().size() == 2;
                }
                if (auto c = region_search(ov, a, b, P, separating, m)) cand = {c->arc, c->how};
            }
            if (cand) {
                const Path& q = cand->first;
                if (cand->second == ChainCase::Case3AHandle ? usable(q) && between(a, q, b) : progress(a, q, b, m))
                    return *cand;
            }
        }
        return {fallback(a, b, m), ChainCase::Search};
    }

    // Splices of alpha and beta joined by a short walk, then a bounded enumeration.
    Path fallback(const Path& a, const Path& b, int m) const {
        std::vector<Path> found;
        auto consider = [&](std::vector<int> head, std::vector<int> tail, int end) {
            for (int L = 0; L <= 2; ++L) {
                int t = head.empty() ? S.mark_tri(a.start) : tri_of(S.glue[head.back()]);
                walks(t, L, [&](const std::vector<int>& w, int) {
                    Path p = reduce(S, Path{a.start, end, cat(cat(head, w), tail)});
                    if (valid_path(S, p)) found.push_back(p);
                });
            }
        };
        for (int i = 0; i <= a.weight(); ++i)
            for (int j = 0; j <= b.weight(); ++j) {
                consider(slice(a.sides, 0, i), slice(b.sides, j, b.weight()), b.end);
                consider(slice(b.sides, 0, j), slice(a.sides, i, a.weight()), a.end);
            }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        for (const auto& p : found)
            if (progress(a, p, b, m)) return p;
        std::optional<Path> best;
        for_each_arc(S, a.start, search_bound + 4, [&](const Path& p) {
            if (best && best->weight() < p.weight()) return;
            if (progress(a, p, b, m) && (!best || p < *best)) best = p;
        });
        if (!best) fail_inv("rightward chain: no intermediate arc found within the search bound");
        return *best;
    }

    // Non-backtracking walks from triangle t0 of length exactly L.
    template <class F>
    void walks(int t0, int L, F&& f) const {
        std::vector<int> w;
        std::function<void(int)> rec = [&](int t) {
            if (static_cast<int>(w.size()) == L) {
                f(w, t);
                return;
            }
            for (int k = 0; k < 3; ++k) {
                int s = 3 * t + k;
                if (S.glue[s] < 0 || (!w.empty() && S.glue[w.back()] == s)) continue;
                w.push_back(s);
                rec(tri_of(S.glue[s]));
                w.pop_back();
            }
        };
        rec(t0);
    }

    void build(const Path& a, const Path& b, int depth, Chain& out) const {
        if (depth > max_depth) fail_inv("rightward chain: recursion too deep");
        if (a == b) return;
        if (I(a, b) == 0) {
            out.arcs.push_back(b);
            return;
        }
        auto [p, how] = step(a, b);
        build(a, p, depth + 1, out);
        out.steps.push_back(how);
        build(p, b, depth + 1, out);
    }
};

}  // namespace detail

// alpha = a_0 >= a_1 >= ... >= a_n = beta with consecutive interiors disjoint and a common start.
inline Chain rightward_chain(const Surface& S, const Path& alpha, const Path& beta, int search_bound = 8) {
    Path a = normalize(S, alpha), b = normalize(S, beta);
    Cmp c = right_of(S, a, b);
    if (c == Cmp::Left) fail_pre("beta is to the left of alpha");
    Chain out;
    out.arcs.push_back(a);
    detail::ChainBuilder B{S, search_bound, 4 * (geometric_intersection(S, a, b) + 2)};
    B.build(a, b, 0, out);
    return out;
}

// Independent check of the chain conditions.
inline bool verify_chain(const Surface& S, const std::vector<Path>& arcs, const Path& alpha, const Path& beta) {
    if (arcs.empty() || arcs.front() != reduce(S, alpha) || arcs.back() != reduce(S, beta)) return false;
    for (size_t i = 0; i < arcs.size(); ++i) {
        const Path& p = arcs[i];
        if (p.start != alpha.start || !valid_path(S, p) || reduce(S, p) != p || self_intersection(S, p) != 0)
            return false;
        if (i == 0) continue;
        const Path& q = arcs[i - 1];
        if (geometric_intersection(S, q, p) != 0) return false;
        Cmp c = right_of(S, q, p);
        if (c != Cmp::Right && c != Cmp::Equal) return false;
    }
    return true;
}

}  // namespace rveer
