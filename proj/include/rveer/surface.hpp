#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rveer {

enum class ErrorKind { Parse = 2, Precondition = 3, Invariant = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    ErrorKind kind;
};

[[noreturn]] inline void fail_parse(const std::string& m) { throw Error(ErrorKind::Parse, m); }
[[noreturn]] inline void fail_pre(const std::string& m) { throw Error(ErrorKind::Precondition, m); }
[[noreturn]] inline void fail_inv(const std::string& m) { throw Error(ErrorKind::Invariant, m); }

// Sides are numbered 3*T + k; side k of triangle T runs from corner k to corner k+1 (ccw).
inline int tri_of(int s) { return s / 3; }
inline int next_side(int s) { return 3 * (s / 3) + (s % 3 + 1) % 3; }
inline int prev_side(int s) { return 3 * (s / 3) + (s % 3 + 2) % 3; }

// An arc: leaves marked point `start`, exits the listed sides in turn, ends at marked point `end`.
struct Path {
    int start = -1, end = -1;
    std::vector<int> sides;
    bool operator==(const Path& o) const { return start == o.start && end == o.end && sides == o.sides; }
    bool operator!=(const Path& o) const { return !(*this == o); }
    bool operator<(const Path& o) const {
        if (sides.size() != o.sides.size()) return sides.size() < o.sides.size();
        if (start != o.start) return start < o.start;
        if (sides != o.sides) return sides < o.sides;
        return end < o.end;
    }
    int weight() const { return static_cast<int>(sides.size()); }
};

// A closed curve: cyclic sequence of exited sides.
struct Loop {
    std::vector<int> sides;
    bool operator==(const Loop& o) const { return sides == o.sides; }
    bool operator!=(const Loop& o) const { return !(*this == o); }
    bool operator<(const Loop& o) const { return sides < o.sides; }
};

struct Surface {
    int ntri = 0;
    std::vector<int> glue;                      // partner side or -1
    std::vector<std::vector<int>> side_marks;   // marked points along each side, in side direction
    int genus = 0;

    // derived by finalize()
    int nmarks = 0;
    std::vector<int> mark_side, mark_index;
    std::vector<std::vector<int>> ports;  // per triangle, ccw: side id (>=0) or ~mark
    std::vector<int> side_port, mark_port;
    std::vector<int> corner_vertex;
    int nvert = 0;
    std::vector<std::vector<int>> comps;  // boundary sides of each component, boundary order
    std::vector<int> side_comp, mark_comp;

    std::map<std::string, Loop> curves;
    std::map<std::string, Path> arcs;

    int nsides() const { return 3 * ntri; }
    bool interior(int s) const { return glue[s] >= 0; }
    int nboundary() const { return static_cast<int>(comps.size()); }
    int mark_tri(int m) const { return tri_of(mark_side[m]); }
    int nports(int t) const { return static_cast<int>(ports[t].size()); }
    bool leaf_port(int t, int p) const { return ports[t][p] < 0; }
    int euler() const;
    void finalize();
};

// Walk around the vertex at the end of boundary side s; returns the interior sides crossed
// and the next boundary side in boundary order.
inline std::pair<std::vector<int>, int> fan_after(const Surface& S, int s) {
    std::vector<int> crossed;
    int cand = next_side(s);
    int guard = 0;
    while (S.glue[cand] >= 0) {
        crossed.push_back(cand);
        cand = next_side(S.glue[cand]);
        if (++guard > S.nsides() + 3) fail_pre("vertex link is not a fan (interior vertex)");
    }
    return {crossed, cand};
}

inline int Surface::euler() const {
    int e = 0;
    for (int s = 0; s < nsides(); ++s) e += (glue[s] < 0) ? 2 : 1;
    return nvert - e / 2 + ntri;
}

inline void Surface::finalize() {
    const int n = nsides();
    if (ntri <= 0) fail_pre("surface has no triangles");
    if (static_cast<int>(glue.size()) != n) fail_pre("gluing table has wrong size");
    side_marks.resize(n);
    for (int s = 0; s < n; ++s) {
        int t = glue[s];
        if (t < -1 || t >= n) fail_pre("gluing refers to unknown side");
        if (t == s) fail_pre("gluing is not an involution (side glued to itself)");
        if (t >= 0 && glue[t] != s) fail_pre("gluing is not an involution");
        if (t >= 0 && !side_marks[s].empty()) fail_pre("marked point on an interior side");
    }
    bool anyb = false;
    for (int s = 0; s < n; ++s) anyb |= glue[s] < 0;
    if (!anyb) fail_pre("no boundary");

    // connectivity
    std::vector<int> seen(ntri, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int t = st.back();
        st.pop_back();
        for (int k = 0; k < 3; ++k) {
            int g = glue[3 * t + k];
            if (g >= 0 && !seen[tri_of(g)]) {
                seen[tri_of(g)] = 1;
                ++cnt;
                st.push_back(tri_of(g));
            }
        }
    }
    if (cnt != ntri) fail_pre("disconnected");

    // vertices: corner k of T is the start of side k
    std::vector<int> par(n);
    std::iota(par.begin(), par.end(), 0);
    auto find = [&](int x) {
        while (par[x] != x) x = par[x] = par[par[x]];
        return x;
    };
    for (int s = 0; s < n; ++s) {
        int g = glue[s];
        if (g < 0) continue;
        par[find(s)] = find(next_side(g));
        par[find(next_side(s))] = find(g);
    }
    corner_vertex.assign(n, -1);
    std::map<int, int> vid;
    for (int c = 0; c < n; ++c) {
        int r = find(c);
        auto it = vid.find(r);
        if (it == vid.end()) it = vid.emplace(r, static_cast<int>(vid.size())).first;
        corner_vertex[c] = it->second;
    }
    nvert = static_cast<int>(vid.size());
    std::vector<int> bstart(nvert, 0), bend(nvert, 0);
    for (int s = 0; s < n; ++s) {
        if (glue[s] >= 0) continue;
        bstart[corner_vertex[s]]++;
        bend[corner_vertex[next_side(s)]]++;
    }
    for (int v = 0; v < nvert; ++v) {
        if (bstart[v] == 0) fail_pre("interior vertex present");
        if (bstart[v] != 1 || bend[v] != 1) fail_pre("vertex link is not a single fan");
    }

    // boundary components
    comps.clear();
    side_comp.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        if (glue[s] >= 0 || side_comp[s] >= 0) continue;
        std::vector<int> cyc;
        int cur = s;
        do {
            side_comp[cur] = static_cast<int>(comps.size());
            cyc.push_back(cur);
            cur = fan_after(*this, cur).second;
        } while (cur != s);
        comps.push_back(cyc);
    }

    // default basepoints: every component gets a marked point
    for (auto& cyc : comps) {
        bool has = false;
        for (int s : cyc) has |= !side_marks[s].empty();
        if (!has) side_marks[cyc[0]].push_back(-1);
    }
    // marked point ids: keep given ids, number new ones (-1) after them
    nmarks = 0;
    int top = -1;
    for (int s = 0; s < n; ++s)
        for (int m : side_marks[s]) {
            ++nmarks;
            top = std::max(top, m);
        }
    for (int s = 0; s < n; ++s)
        for (int& m : side_marks[s])
            if (m < 0) m = ++top;
    mark_side.assign(nmarks, -1);
    mark_index.assign(nmarks, -1);
    for (int s = 0; s < n; ++s)
        for (size_t i = 0; i < side_marks[s].size(); ++i) {
            int m = side_marks[s][i];
            if (m >= nmarks || mark_side[m] >= 0) fail_pre("marked point ids are not 0..n-1");
            mark_side[m] = s;
            mark_index[m] = static_cast<int>(i);
        }
    mark_comp.assign(nmarks, -1);
    for (int m = 0; m < nmarks; ++m) mark_comp[m] = side_comp[mark_side[m]];

    ports.assign(ntri, {});
    side_port.assign(n, -1);
    mark_port.assign(nmarks, -1);
    for (int t = 0; t < ntri; ++t)
        for (int k = 0; k < 3; ++k) {
            int s = 3 * t + k;
            if (glue[s] >= 0) {
                side_port[s] = static_cast<int>(ports[t].size());
                ports[t].push_back(s);
            } else {
                for (int m : side_marks[s]) {
                    mark_port[m] = static_cast<int>(ports[t].size());
                    ports[t].push_back(~m);
                }
            }
        }
    int b = nboundary();
    int twog = 2 - b - euler();
    if (twog < 0 || twog % 2) fail_inv("Euler characteristic inconsistent with boundary count");
    genus = twog / 2;
}

// Ordered boundary walk of component c: (side, marked points on it).
inline std::vector<std::pair<int, std::vector<int>>> boundary_walk(const Surface& S, int c) {
    if (c < 0 || c >= S.nboundary()) fail_pre("unknown boundary component");
    std::vector<std::pair<int, std::vector<int>>> out;
    for (int s : S.comps[c]) out.emplace_back(s, S.side_marks[s]);
    return out;
}

inline int euler_characteristic(const Surface& S) { return S.euler(); }

inline Path reversed(const Surface& S, const Path& p) {
    Path r{p.end, p.start, {}};
    for (auto it = p.sides.rbegin(); it != p.sides.rend(); ++it) r.sides.push_back(S.glue[*it]);
    return r;
}

inline Loop reversed(const Surface& S, const Loop& l) {
    Loop r;
    for (auto it = l.sides.rbegin(); it != l.sides.rend(); ++it) r.sides.push_back(S.glue[*it]);
    return r;
}

inline std::vector<int> reduce_word(const Surface& S, const std::vector<int>& w) {
    std::vector<int> st;
    for (int s : w) {
        if (!st.empty() && S.glue[st.back()] == s)
            st.pop_back();
        else
            st.push_back(s);
    }
    return st;
}

inline Path reduce(const Surface& S, Path p) {
    p.sides = reduce_word(S, p.sides);
    return p;
}

inline bool valid_path(const Surface& S, const Path& p) {
    if (p.start < 0 || p.start >= S.nmarks || p.end < 0 || p.end >= S.nmarks) return false;
    int t = S.mark_tri(p.start);
    for (int s : p.sides) {
        if (s < 0 || s >= S.nsides() || tri_of(s) != t || S.glue[s] < 0) return false;
        t = tri_of(S.glue[s]);
    }
    return t == S.mark_tri(p.end);
}

inline bool valid_loop(const Surface& S, const Loop& l) {
    const auto& w = l.sides;
    if (w.empty()) return false;
    for (size_t i = 0; i < w.size(); ++i) {
        int s = w[i];
        if (s < 0 || s >= S.nsides() || S.glue[s] < 0) return false;
        if (tri_of(S.glue[s]) != tri_of(w[(i + 1) % w.size()])) return false;
    }
    return true;
}

// Cyclic reduction; returns empty if the loop is null-homotopic.
inline std::vector<int> cyclic_reduce(const Surface& S, std::vector<int> w) {
    w = reduce_word(S, w);
    size_t a = 0, b = w.size();
    while (b - a >= 2 && S.glue[w[b - 1]] == w[a]) {
        ++a;
        --b;
    }
    if (b - a == 1 && S.glue[w[a]] == w[a]) return {};
    return std::vector<int>(w.begin() + a, w.begin() + b);
}

// Least rotation of w or its inverse.
inline Loop canonical(const Surface& S, const Loop& l) {
    Loop best;
    auto consider = [&](const std::vector<int>& w) {
        size_t n = w.size();
        for (size_t r = 0; r < n; ++r) {
            std::vector<int> c(n);
            for (size_t i = 0; i < n; ++i) c[i] = w[(r + i) % n];
            if (best.sides.empty() || c < best.sides) best.sides = c;
        }
    };
    consider(l.sides);
    consider(reversed(S, l).sides);
    return best;
}

inline Loop make_loop(const Surface& S, const std::vector<int>& w) {
    Loop l{cyclic_reduce(S, w)};
    if (l.sides.empty()) fail_pre("closed curve is null-homotopic");
    return canonical(S, l);
}

// Shortest dual-graph walk between two triangles (deterministic BFS).
inline std::vector<int> tri_path(const Surface& S, int from, int to) {
    std::vector<int> via(S.ntri, -2);
    std::queue<int> q;
    q.push(from);
    via[from] = -1;
    while (!q.empty()) {
        int t = q.front();
        q.pop();
        if (t == to) break;
        for (int k = 0; k < 3; ++k) {
            int s = 3 * t + k, g = S.glue[s];
            if (g < 0 || via[tri_of(g)] != -2) continue;
            via[tri_of(g)] = s;
            q.push(tri_of(g));
        }
    }
    std::vector<int> w;
    for (int t = to; via[t] >= 0; t = tri_of(via[t])) w.push_back(via[t]);
    std::reverse(w.begin(), w.end());
    return w;
}

// Path from p to q running parallel to the boundary in boundary direction.
inline Path hug_path(const Surface& S, int p, int q) {
    if (S.mark_comp[p] != S.mark_comp[q]) fail_pre("marked points on different boundary components");
    Path r{p, q, {}};
    int s = S.mark_side[p];
    int idx = S.mark_index[p] + 1;
    for (int guard = 0; guard < S.nsides() + 2; ++guard) {
        const auto& ms = S.side_marks[s];
        for (int i = idx; i < static_cast<int>(ms.size()); ++i)
            if (ms[i] == q) return r;
        auto [cr, nx] = fan_after(S, s);
        r.sides.insert(r.sides.end(), cr.begin(), cr.end());
        s = nx;
        idx = 0;
    }
    fail_inv("boundary walk did not reach marked point");
}

// Loop parallel to boundary component c.
inline Loop boundary_loop(const Surface& S, int c) {
    std::vector<int> w;
    for (int s : S.comps[c]) {
        auto cr = fan_after(S, s).first;
        w.insert(w.end(), cr.begin(), cr.end());
    }
    return make_loop(S, w);
}

inline bool is_boundary_parallel_hug(const Surface& S, const Path& a) {
    if (S.mark_comp[a.start] != S.mark_comp[a.end]) return false;
    if (a.start == a.end && a.sides.empty()) return true;
    if (a.start != a.end && a.sides.empty()) return true;
    if (hug_path(S, a.start, a.end) == a) return true;
    return reversed(S, hug_path(S, a.end, a.start)) == a;
}

}  // namespace rveer
