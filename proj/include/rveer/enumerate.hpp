#pragma once

#include <functional>

#include "arcs.hpp"

namespace rveer {

namespace detail {

// Depth-first generation of reduced embedded arcs; a prefix is abandoned as soon as
// one of its self-linkings is fully determined.
class ArcSearch {
public:
    ArcSearch(const Surface& S, int W, const std::function<void(const Path&)>& emit) : S_(S), W_(W), emit_(emit) {}

    void run(int x) {
        x_ = x;
        tri_.assign(1, S_.mark_tri(x));
        in_.assign(1, S_.mark_port[x]);
        out_.assign(1, -1);
        sides_.clear();
        dfs();
    }

private:
    bool leaf(int t, int p) const { return S_.leaf_port(t, p); }
    Side sd(int node, int c) const { return side_of(in_[node], out_[node], c, S_.nports(tri_[node])); }

    // Any self-linking whose ports became known with out_[k]?
    bool new_link(int k) const {
        const int t = tri_[k];
        for (int p = 0; p < k; ++p) {
            if (tri_[p] != t) continue;
            // same direction, forward end at (k, p)
            if (out_[p] != out_[k]) {
                int L = 0;
                while (in_[k - L] == in_[p - L] && !leaf(tri_[k - L], in_[k - L])) ++L;
                bool skip = L == 0 && (in_[p] == out_[k] || out_[p] == in_[k]);
                if (!skip && sd(k - L, in_[p - L]) != sd(k, out_[p])) return true;
            }
            // opposite direction, forward end of the forward copy at k
            if (out_[p] == in_[k] && in_[p] != out_[k]) {
                int L = 0;
                bool ok = true;
                for (;;) {
                    if (k - L < 0 || p + L > k) {
                        ok = false;
                        break;
                    }
                    int ia = in_[k - L], ob = out_[p + L];
                    if (ia != ob) break;
                    if (leaf(tri_[k - L], ia)) {
                        ok = false;
                        break;
                    }
                    ++L;
                }
                if (ok && sd(k - L, out_[p + L]) != sd(k, in_[p])) return true;
            }
            // opposite direction, backward copy starting at k
            if (out_[p] == in_[k] && in_[p] != out_[k]) {
                int L = 0;
                bool ok = true;
                for (;;) {
                    ++L;
                    if (p + L > k || k - L < 0) {
                        ok = false;
                        break;
                    }
                    int oa = out_[p + L], ib = in_[k - L];
                    if (oa != ib) break;
                    if (leaf(tri_[p + L], oa)) {
                        ok = false;
                        break;
                    }
                }
                if (ok && sd(p, out_[k]) != sd(p + L, in_[k - L])) return true;
            }
        }
        return false;
    }

    void dfs() {
        const int k = static_cast<int>(sides_.size());
        const int t = tri_[k];
        const auto& ports = S_.ports[t];
        for (int pp = 0; pp < static_cast<int>(ports.size()); ++pp) {
            int code = ports[pp];
            if (code < 0) {
                if (pp == in_[k]) continue;  // x -> x with nothing in between, or returning to the entry leaf
                out_[k] = pp;
                if (!new_link(k)) emit_(Path{x_, ~code, sides_});
                continue;
            }
            if (k >= W_) continue;
            if (k > 0 && S_.glue[sides_.back()] == code) continue;
            out_[k] = pp;
            if (new_link(k)) continue;
            sides_.push_back(code);
            int g = S_.glue[code];
            tri_.push_back(tri_of(g));
            in_.push_back(S_.side_port[g]);
            out_.push_back(-1);
            dfs();
            sides_.pop_back();
            tri_.pop_back();
            in_.pop_back();
            out_.pop_back();
        }
        out_[k] = -1;
    }

    const Surface& S_;
    int W_;
    const std::function<void(const Path&)>& emit_;
    int x_ = 0;
    std::vector<int> tri_, in_, out_, sides_;
};

}  // namespace detail

// Visit every essential embedded arc (reduced form) of weight <= W starting at `base` (-1: any).
inline void for_each_arc(const Surface& S, int base, int W, const std::function<void(const Path&)>& f) {
    std::function<void(const Path&)> emit = [&](const Path& p) {
        if (!is_boundary_parallel_hug(S, p)) f(p);
    };
    detail::ArcSearch search(S, W, emit);
    for (int m = 0; m < S.nmarks; ++m)
        if (base < 0 || base == m) search.run(m);
}

inline std::vector<Path> enumerate_arcs(const Surface& S, int base, int W) {
    if (W < 0) fail_pre("weight bound must be nonnegative");
    std::vector<Path> out;
    for_each_arc(S, base, W, [&](const Path& p) { out.push_back(p); });
    std::sort(out.begin(), out.end());
    return out;
}

// Independent generator: all reduced paths, filtered by the full self-intersection count.
inline std::vector<Path> enumerate_arcs_bruteforce(const Surface& S, int base, int W) {
    std::vector<Path> out;
    std::function<void(Path&, int)> rec = [&](Path& p, int t) {
        for (int m = 0; m < S.nmarks; ++m) {
            if (S.mark_tri(m) != t) continue;
            Path q = p;
            q.end = m;
            if (!is_boundary_parallel_hug(S, q) && self_intersection(S, q) == 0) out.push_back(q);
        }
        if (static_cast<int>(p.sides.size()) >= W) return;
        for (int k = 0; k < 3; ++k) {
            int s = 3 * t + k;
            if (S.glue[s] < 0 || (!p.sides.empty() && S.glue[p.sides.back()] == s)) continue;
            p.sides.push_back(s);
            rec(p, tri_of(S.glue[s]));
            p.sides.pop_back();
        }
    };
    for (int m = 0; m < S.nmarks; ++m) {
        if (base >= 0 && base != m) continue;
        Path p{m, -1, {}};
        rec(p, S.mark_tri(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_boundary_parallel(const Surface& S, const Loop& l) {
    Loop c = canonical(S, l);
    for (int k = 0; k < S.nboundary(); ++k)
        if (boundary_loop(S, k) == c) return true;
    return false;
}

// Essential simple closed curves (canonical form) of length <= L, sorted by length then words.
inline std::vector<Loop> enumerate_loops(const Surface& S, int L) {
    std::vector<Loop> out;
    std::vector<int> w;
    std::function<void(int, int)> rec = [&](int t0, int t) {
        if (!w.empty() && t == t0 && S.glue[w.back()] != w.front()) {
            Loop l{cyclic_reduce(S, w)};
            if (l.sides.size() == w.size() && !is_power(l) && embedded(S, l) && !is_boundary_parallel(S, l))
                out.push_back(canonical(S, l));
        }
        if (static_cast<int>(w.size()) >= L) return;
        for (int k = 0; k < 3; ++k) {
            int s = 3 * t + k, g = S.glue[s];
            if (g < 0 || (!w.empty() && S.glue[w.back()] == s)) continue;
            if (tri_of(g) < t0) continue;  // each class is found from its lowest triangle
            w.push_back(s);
            rec(t0, tri_of(g));
            w.pop_back();
        }
    };
    for (int t = 0; t < S.ntri; ++t) rec(t, t);
    std::sort(out.begin(), out.end(), [](const Loop& a, const Loop& b) {
        return a.sides.size() != b.sides.size() ? a.sides.size() < b.sides.size() : a.sides < b.sides;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace rveer
