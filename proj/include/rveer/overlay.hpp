#pragma once

#include <array>

#include "arcs.hpp"

namespace rveer {

// Combinatorial embedding of a system of arcs and closed curves: crossing order on every
// edge, germ order at every marked point, chords per triangle and the regions they cut out.
class Overlay {
public:
    enum ItemKind { Cross, Germ, Bare };
    struct Item {
        ItemKind kind;
        int strand = -1, idx = -1, mark = -1;  // idx: step for crossings, 0/1 (start/end) for germs
    };
    struct Chord {
        int strand, node, a, b;  // a: entry item, b: exit item
    };

    Overlay(const Surface& S, const std::vector<Path>& arcs, const std::vector<Loop>& loops = {}) : S_(&S) {
        for (const auto& a : arcs) add(make_strand(S, a), a.sides);
        for (const auto& l : loops) add(make_strand(S, l), l.sides);
        build();
    }

    const Surface& surface() const { return *S_; }
    // Minimal position: every pair crosses its geometric number of times, no strand crosses itself.
    bool consistent() const {
        for (int j = 0; j < nstrands(); ++j)
            for (int k = j; k < nstrands(); ++k) {
                int want = j == k ? 0 : count_linked(*S_, st_[j].s, st_[k].s);
                if (crossings(j, k) != want) return false;
            }
        return true;
    }
    int nstrands() const { return static_cast<int>(st_.size()); }
    const std::vector<Item>& perimeter(int t) const { return perim_[t]; }
    const std::vector<Chord>& chords(int t) const { return chords_[t]; }
    int chord_of(int k, int node) const { return chord_idx_[k][node]; }
    int entry_item(int k, int node) const { return chords_[node_tri(k, node)][chord_of(k, node)].a; }
    int node_tri(int k, int node) const { return st_[k].s.fwd.T(node); }
    int nnodes(int k) const { return st_[k].s.fwd.n(); }

    static bool interleave(int a1, int b1, int a2, int b2, int N) {
        auto in = [&](int x) { return (x - a1 + N) % N < (b1 - a1 + N) % N && x != a1; };
        return in(a2) != in(b2);
    }
    // gap g (after item g) lies in the ccw interval from a to b
    static bool gap_in(int g, int a, int b, int N) { return (g - a + N) % N < (b - a + N) % N; }
    static bool item_in(int x, int a, int b, int N) { return x != a && (x - a + N) % N < (b - a + N) % N; }

    // Number of transverse chord crossings between strands j and k (j may equal k).
    int crossings(int j, int k) const {
        int c = 0;
        for (int t = 0; t < S_->ntri; ++t) {
            int N = static_cast<int>(perim_[t].size());
            const auto& ch = chords_[t];
            for (size_t x = 0; x < ch.size(); ++x)
                for (size_t y = x + 1; y < ch.size(); ++y) {
                    bool pair = (ch[x].strand == j && ch[y].strand == k) || (ch[x].strand == k && ch[y].strand == j);
                    if (pair && interleave(ch[x].a, ch[x].b, ch[y].a, ch[y].b, N)) ++c;
                }
        }
        return c;
    }

    // ---- regions ----
    int ngaps(int t) const { return std::max<int>(1, static_cast<int>(perim_[t].size())); }
    int gap_id(int t, int g) const { return gap_off_[t] + g; }
    int face_of_gap(int t, int g) const { return face_[gap_off_[t] + g]; }  // local face in t
    int nfaces(int t) const { return nface_[t]; }
    int region(int t, int g) const { return find(gap_off_[t] + g); }
    // sub-interval j of side s (counted from the start corner) -> local gap index
    int gap_of_sub(int s, int j) const {
        int t = tri_of(s), N = static_cast<int>(perim_[t].size());
        if (N == 0) return 0;
        return ((side_start_[s] + j - 1) % N + N) % N;
    }
    int items_on(int s) const { return side_count_[s]; }

    // Euler characteristic of every region (valid when no two chords cross).
    std::map<int, int> region_euler() const {
        std::map<int, int> chi;
        for (int t = 0; t < S_->ntri; ++t) {
            std::map<int, int> root_of_face;
            for (int g = 0; g < ngaps(t); ++g) root_of_face[face_of_gap(t, g)] = region(t, g);
            for (auto& [f, r] : root_of_face) chi[r] += 1;
        }
        for (int s = 0; s < S_->nsides(); ++s) {
            int g = S_->glue[s];
            if (g < s) continue;
            int m = side_count_[s];
            for (int j = 0; j <= m; ++j) chi[region(tri_of(s), gap_of_sub(s, j))] -= 1;
        }
        return chi;
    }

    // Local face ids in triangle t on the given side of chord c that border piece `piece` of it.
    // Pieces are numbered from the chord's entry; `cross` lists crossing chords in order along c.
    std::vector<int> faces_beside(int t, int c, int piece, bool right) const {
        const auto& ch = chords_[t];
        int N = static_cast<int>(perim_[t].size());
        auto order = along(t, c);
        std::vector<int> out;
        for (int g = 0; g < N; ++g) {
            if (gap_in(g, ch[c].a, ch[c].b, N) != right) continue;
            bool ok = true;
            for (int d = 0; d < static_cast<int>(ch.size()) && ok; ++d) {
                if (d == c) continue;
                int pos = -1;
                for (int u = 0; u < static_cast<int>(order.size()); ++u)
                    if (order[u] == d) pos = u;
                int ref = (pos >= 0 && piece > pos) ? ch[c].b : ch[c].a;
                bool piece_side = item_in(ref, ch[d].a, ch[d].b, N);
                ok = gap_in(g, ch[d].a, ch[d].b, N) == piece_side;
            }
            if (ok) out.push_back(face_of_gap(t, g));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Chords of triangle t crossing chord c, ordered from c's entry.
    std::vector<int> along(int t, int c) const {
        const auto& ch = chords_[t];
        int N = static_cast<int>(perim_[t].size());
        std::vector<std::pair<int, int>> v;
        for (int d = 0; d < static_cast<int>(ch.size()); ++d) {
            if (d == c || !interleave(ch[c].a, ch[c].b, ch[d].a, ch[d].b, N)) continue;
            int e = item_in(ch[d].a, ch[c].a, ch[c].b, N) ? ch[d].a : ch[d].b;
            v.push_back({(e - ch[c].a + N) % N, d});
        }
        std::sort(v.begin(), v.end());
        std::vector<int> r;
        for (auto& [p, d] : v) r.push_back(d);
        return r;
    }

private:
    struct St {
        Strand s;
        std::vector<int> sides;
    };
    void add(Strand s, const std::vector<int>& sides) { st_.push_back({std::move(s), sides}); }

    // outward view across side s of crossing (k, step)
    std::pair<const Seq*, int> outward(int k, int step, int s) const {
        const auto& x = st_[k];
        if (x.sides[step] == s) return {&x.s.fwd, step};
        return {&x.s.bwd, x.s.fwd.rev_node(x.s.fwd.at(step + 1))};
    }

    void build() {
        const Surface& S = *S_;
        const int ns = S.nsides();
        // crossings per edge, ordered from the start corner of the lower side id
        std::vector<std::vector<std::pair<int, int>>> on(ns);
        for (int k = 0; k < nstrands(); ++k)
            for (int i = 0; i < static_cast<int>(st_[k].sides.size()); ++i) {
                int s = st_[k].sides[i];
                on[std::min(s, S.glue[s])].push_back({k, i});
            }
        for (int s = 0; s < ns; ++s) {
            auto& v = on[s];
            if (v.size() < 2) continue;
            auto less = [&](const std::pair<int, int>& X, const std::pair<int, int>& Y) {
                if (X == Y) return false;
                // look along the lower strand's own orientation so every edge places a crossing at the same end
                int lo = std::min(X.first, Y.first);
                const auto& L = std::min(X, Y);
                bool flip = st_[lo].sides[L.second] != s;
                int e = flip ? S.glue[s] : s;
                auto [sx, px] = outward(X.first, X.second, e);
                auto [sy, py] = outward(Y.first, Y.second, e);
                const Seq& oy = (sy == &st_[Y.first].s.fwd) ? st_[Y.first].s.bwd : st_[Y.first].s.fwd;
                auto sd = lift_side(S, *sx, px, *sy, py, oy);
                if (sd) return (*sd == Side::Left) != flip;
                // parallel copies: looking along the lower strand's orientation, the higher one is on the left
                if (X.first == Y.first) return X < Y;
                return (X.first == lo) != flip;
            };
            std::stable_sort(v.begin(), v.end(), less);
        }
        // germs per marked point, in ccw order
        std::vector<std::vector<std::pair<int, int>>> germs(S.nmarks);
        for (int k = 0; k < nstrands(); ++k) {
            if (st_[k].s.loop) continue;
            const Seq& f = st_[k].s.fwd;
            germs[S.ports[f.tri[0]][f.in[0]] ^ -1].push_back({k, 0});
            germs[S.ports[f.T(f.n() - 1)][f.out[f.n() - 1]] ^ -1].push_back({k, 1});
        }
        for (int m = 0; m < S.nmarks; ++m) {
            auto& v = germs[m];
            auto less = [&](const std::pair<int, int>& X, const std::pair<int, int>& Y) {
                if (X == Y) return false;
                const Seq& ax = X.second ? st_[X.first].s.bwd : st_[X.first].s.fwd;
                const Seq& ay = Y.second ? st_[Y.first].s.bwd : st_[Y.first].s.fwd;
                const Seq& oy = Y.second ? st_[Y.first].s.fwd : st_[Y.first].s.bwd;
                auto sd = lift_side(S, ax, 0, ay, 0, oy);
                if (sd) return *sd == Side::Right;
                if (X.first == Y.first) return X < Y;
                if (X.first < Y.first) return X.second == 1;
                return Y.second == 0;
            };
            std::stable_sort(v.begin(), v.end(), less);
        }
        // perimeters
        perim_.assign(S.ntri, {});
        side_start_.assign(ns, 0);
        side_count_.assign(ns, 0);
        std::map<std::pair<int, int>, std::array<int, 2>> cross_item;  // (k, step) -> item in exit tri, entry tri
        germ_item_.assign(nstrands(), {-1, -1});
        for (int t = 0; t < S.ntri; ++t)
            for (int kk = 0; kk < 3; ++kk) {
                int s = 3 * t + kk;
                auto& P = perim_[t];
                side_start_[s] = static_cast<int>(P.size());
                if (S.glue[s] >= 0) {
                    const auto& v = on[std::min(s, S.glue[s])];
                    int m = static_cast<int>(v.size());
                    for (int r = 0; r < m; ++r) {
                        auto x = (s < S.glue[s]) ? v[r] : v[m - 1 - r];
                        int exits = st_[x.first].sides[x.second] == s;
                        cross_item[x][exits ? 0 : 1] = static_cast<int>(P.size());
                        P.push_back({Cross, x.first, x.second, -1});
                    }
                } else {
                    for (int mk : S.side_marks[s]) {
                        if (germs[mk].empty()) P.push_back({Bare, -1, -1, mk});
                        for (auto [k, e] : germs[mk]) {
                            germ_item_[k][e] = static_cast<int>(P.size());
                            P.push_back({Germ, k, e, mk});
                        }
                    }
                }
                side_count_[s] = static_cast<int>(P.size()) - side_start_[s];
            }
        // chords
        chords_.assign(S.ntri, {});
        chord_idx_.assign(nstrands(), {});
        for (int k = 0; k < nstrands(); ++k) {
            const auto& x = st_[k];
            int nn = x.s.fwd.n(), nsd = static_cast<int>(x.sides.size());
            for (int node = 0; node < nn; ++node) {
                int t = x.s.fwd.tri[node];
                int a, b;
                if (x.s.loop) {
                    a = cross_item[{k, (node + nsd - 1) % nsd}][1];
                    b = cross_item[{k, node}][0];
                } else {
                    a = node == 0 ? germ_item_[k][0] : cross_item[{k, node - 1}][1];
                    b = node == nn - 1 ? germ_item_[k][1] : cross_item[{k, node}][0];
                }
                chord_idx_[k].push_back(static_cast<int>(chords_[t].size()));
                chords_[t].push_back({k, node, a, b});
            }
        }
        // faces and regions
        gap_off_.assign(S.ntri + 1, 0);
        for (int t = 0; t < S.ntri; ++t) gap_off_[t + 1] = gap_off_[t] + ngaps(t);
        face_.assign(gap_off_[S.ntri], 0);
        nface_.assign(S.ntri, 0);
        for (int t = 0; t < S.ntri; ++t) {
            int N = static_cast<int>(perim_[t].size());
            std::map<std::vector<bool>, int> sig;
            for (int g = 0; g < ngaps(t); ++g) {
                std::vector<bool> v;
                for (const auto& c : chords_[t]) v.push_back(N > 0 && gap_in(g, c.a, c.b, N));
                auto it = sig.emplace(v, static_cast<int>(sig.size())).first;
                face_[gap_off_[t] + g] = it->second;
            }
            nface_[t] = static_cast<int>(sig.size());
        }
        par_.resize(face_.size());
        std::iota(par_.begin(), par_.end(), 0);
        for (int t = 0; t < S.ntri; ++t) {
            // gaps of one face are one region
            std::map<int, int> first;
            for (int g = 0; g < ngaps(t); ++g) {
                auto [it, fresh] = first.emplace(face_of_gap(t, g), g);
                if (!fresh) unite(gap_id(t, g), gap_id(t, it->second));
            }
        }
        for (int s = 0; s < ns; ++s) {
            int g = S.glue[s];
            if (g < s) continue;
            int m = side_count_[s];
            for (int j = 0; j <= m; ++j) unite(gap_id(tri_of(s), gap_of_sub(s, j)), gap_id(tri_of(g), gap_of_sub(g, m - j)));
        }
    }

    int find(int x) const {
        while (par_[x] != x) x = par_[x] = par_[par_[x]];
        return x;
    }
    void unite(int a, int b) { par_[find(a)] = find(b); }

    const Surface* S_;
    std::vector<St> st_;
    std::vector<std::vector<Item>> perim_;
    std::vector<std::vector<Chord>> chords_;
    std::vector<std::vector<int>> chord_idx_;
    std::vector<std::array<int, 2>> germ_item_;
    std::vector<int> side_start_, side_count_;
    std::vector<int> gap_off_, face_, nface_;
    mutable std::vector<int> par_;

public:
    int germ_item(int k, int end) const { return germ_item_[k][end]; }
};

// Cut along a system of pairwise disjoint arcs; Euler characteristic of each piece.
inline std::vector<int> cut_euler(const Surface& S, const std::vector<Path>& arcs) {
    Overlay ov(S, arcs);
    std::vector<int> out;
    for (auto& [r, c] : ov.region_euler()) out.push_back(c);
    return out;
}

// Arc cuts off a disk.
inline bool is_boundary_parallel(const Surface& S, const Path& a) {
    auto chi = cut_euler(S, {a});
    return chi.size() == 2 && (chi[0] == 1 || chi[1] == 1);
}

}  // namespace rveer
