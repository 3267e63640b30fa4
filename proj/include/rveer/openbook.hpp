#pragma once

#include "chain.hpp"
#include "mcg.hpp"
#include "standard.hpp"

namespace rveer {

struct StabilizationRecord {
    Path arc;  // attaching arc on `before`
    int sign = 1;
    Surface before;
    MappingClass h_before;
    std::vector<std::vector<int>> prefix, suffix;  // per old marked point: transport into the new surface
    int band = -1;                                 // first of the two band triangles
    Loop gamma;
    Path cocore;
};

struct OpenBook {
    Surface S;
    MappingClass h;
    std::vector<StabilizationRecord> history;
};

inline Path transport(const Surface& after, const StabilizationRecord& r, const Path& p) {
    Path q{p.start, p.end, r.prefix[p.start]};
    q.sides.insert(q.sides.end(), p.sides.begin(), p.sides.end());
    q.sides.insert(q.sides.end(), r.suffix[p.end].begin(), r.suffix[p.end].end());
    return reduce(after, q);
}

namespace detail {

struct Draft {
    int ntri;
    std::vector<int> glue;
    std::vector<std::vector<int>> marks;
    std::vector<std::vector<int>> prefix, suffix;

    int add_tri() {
        glue.insert(glue.end(), 3, -1);
        marks.resize(glue.size());
        return ntri++;
    }
    void link(int a, int b) {
        glue[a] = b;
        glue[b] = a;
    }
    std::pair<int, int> find(int m) const {
        for (int s = 0; s < static_cast<int>(marks.size()); ++s)
            for (int i = 0; i < static_cast<int>(marks[s].size()); ++i)
                if (marks[s][i] == m) return {s, i};
        fail_inv("marked point lost");
    }
    // Glue a triangle onto boundary side s; the first `cnt` marks go to its first free side.
    std::pair<int, int> collar(int s, int cnt) {
        int t = add_tri();
        int c0 = 3 * t, c1 = c0 + 1, c2 = c0 + 2;
        link(c0, s);
        auto ms = marks[s];
        marks[s].clear();
        for (int i = 0; i < static_cast<int>(ms.size()); ++i) {
            int m = ms[i];
            (i < cnt ? marks[c1] : marks[c2]).push_back(m);
            if (m >= 0 && m < static_cast<int>(prefix.size())) {
                prefix[m].insert(prefix[m].begin(), c0);
                suffix[m].push_back(s);
            }
        }
        return {c1, c2};
    }
    // Empty boundary side right after marked point m, and the walk from m's triangle to it.
    std::pair<int, std::vector<int>> room_after(int m) {
        auto [s, i] = find(m);
        auto [c1, c2] = collar(s, i + 1);
        if (marks[c2].empty()) return {c2, {}};
        auto [d1, d2] = collar(c2, 0);
        (void)d2;
        return {d1, {c2}};
    }
};

}  // namespace detail

inline void check_attaching_arc(const Surface& S, const Path& b) {
    if (!valid_path(S, b)) fail_pre("attaching arc is not a path on this surface");
    if (reduce(S, b) != b) fail_pre("attaching arc is not reduced");
    if (!embedded(S, b)) fail_pre("attaching arc is not properly embedded");
}

// Attach a 1-handle along the endpoints of b; sign +1/-1 adds the twist about b u core, 0 adds none.
inline OpenBook stabilize(const OpenBook& ob, Path b, int sign) {
    const Surface& S0 = ob.S;
    check_attaching_arc(S0, b);
    detail::Draft D{S0.ntri, S0.glue, S0.side_marks, {}, {}};
    D.prefix.assign(S0.nmarks, {});
    D.suffix.assign(S0.nmarks, {});
    StabilizationRecord rec;
    rec.before = S0;
    rec.h_before = ob.h;
    rec.sign = sign;

    int p = b.start, q = b.end;
    int split = -1;
    if (p == q) {
        // separate the two ends: the end whose germ comes first keeps the marked point
        Path rb = reversed(S0, b);
        if (right_of(S0, b, rb) != Cmp::Right) b = rb;
        auto [s, i] = D.find(p);
        split = q = S0.nmarks;
        D.marks[s].insert(D.marks[s].begin() + i + 1, split);
        D.prefix.emplace_back();
        D.suffix.emplace_back();
    }
    rec.arc = b;
    auto [Ep, mp] = D.room_after(p);
    size_t before_q = D.prefix[p].size();
    auto [Eq, mq] = D.room_after(q);
    // collars added for q may have moved p further out
    mp.insert(mp.begin(), D.prefix[p].begin(), D.prefix[p].end() - before_q);
    int t1 = D.add_tri(), t2 = D.add_tri();
    rec.band = t1;
    int e0 = 3 * t1, e1 = e0 + 1, e2 = e0 + 2, f0 = 3 * t2, f1 = f0 + 1, f2 = f0 + 2;
    D.link(e0, Ep);
    D.link(e2, f0);
    D.link(f1, Eq);
    D.marks[e1] = {-1};
    D.marks[f2] = {-1};

    Surface S;
    S.ntri = D.ntri;
    S.glue = D.glue;
    S.side_marks = D.marks;
    S.finalize();
    if (S.euler() != S0.euler() - 1) fail_inv("stabilization changed Euler characteristic wrongly");
    Path b2{b.start, q, D.prefix[b.start]};
    b2.sides.insert(b2.sides.end(), b.sides.begin(), b.sides.end());
    b2.sides.insert(b2.sides.end(), D.suffix[q].begin(), D.suffix[q].end());
    b2 = reduce(S, b2);
    if (!valid_path(S, b2) || !embedded(S, b2)) fail_inv("transported attaching arc is invalid");

    std::vector<int> w = b2.sides;
    w.insert(w.end(), mq.begin(), mq.end());
    w.push_back(Eq);
    w.push_back(f0);
    w.push_back(e0);
    for (auto it = mp.rbegin(); it != mp.rend(); ++it) w.push_back(S.glue[*it]);
    rec.gamma = make_loop(S, w);
    rec.cocore = Path{S.side_marks[e1][0], S.side_marks[f2][0], {e2}};
    rec.prefix = D.prefix;
    rec.suffix = D.suffix;
    rec.prefix.resize(S0.nmarks);
    rec.suffix.resize(S0.nmarks);

    OpenBook out;
    int k = static_cast<int>(ob.history.size());
    S.curves = S0.curves;
    for (const auto& [n, a] : S0.arcs) S.arcs[n] = transport(S, rec, a);
    S.curves["gamma:" + std::to_string(k)] = rec.gamma;
    S.arcs["cocore:" + std::to_string(k)] = rec.cocore;
    out.S = std::move(S);
    out.h = ob.h;
    if (sign != 0) out.h.word.insert(out.h.word.begin(), Twist{rec.gamma, sign, "gamma:" + std::to_string(k)});
    out.history = ob.history;
    out.history.push_back(std::move(rec));
    return out;
}

// ---- refuter, certificate, verdict ----

struct Witness {
    Path arc;
    Path image;
};

inline std::optional<Witness> right_veering_refute(const OpenBook& ob, int W, int base = -1) {
    if (W < 1) fail_pre("weight bound must be positive");
    Action act(ob.S, ob.h);
    std::optional<Witness> best;
    for_each_arc(ob.S, base, W, [&](const Path& a) {
        if (best && best->arc < a) return;
        Path ha = act(a);
        if (right_of(ob.S, a, ha) == Cmp::Left) best = Witness{a, ha};
    });
    return best;
}

inline bool certify_dehn_plus(const OpenBook& ob) {
    for (const auto& t : ob.h.word) {
        if (t.exp <= 0) return false;
        check_twist_curve(ob.S, t.curve);
    }
    return true;
}

enum class VerdictKind { Tight, Overtwisted, Inconclusive };

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<Witness> witness;
    int bound = 0;
};

inline Verdict verdict(const OpenBook& ob, int W) {
    Verdict v;
    v.bound = W;
    if (certify_dehn_plus(ob)) {
        v.kind = VerdictKind::Tight;
        return v;
    }
    v.witness = right_veering_refute(ob, W);
    if (v.witness) {
        if (right_of(ob.S, v.witness->arc, apply(ob.S, ob.h, v.witness->arc)) != Cmp::Left)
            fail_inv("witness does not recheck");
        v.kind = VerdictKind::Overtwisted;
    }
    return v;
}

// ---- destabilization ----

// h(a) meets a only at the endpoints and lies to the right of a at both of them.
inline bool stabilization_arc(const Surface& S, const Path& a, const Path& ha) {
    if (a == ha || geometric_intersection(S, a, ha) != 0) return false;
    return right_of(S, a, ha) == Cmp::Right && right_of_at_end(S, a, ha) == Cmp::Right;
}

// C = a u h(a), pushed off the boundary.
inline Loop stabilization_curve(const Surface& S, const Path& a, const Path& ha) {
    auto w = reversed(S, ha).sides;
    w.insert(w.begin(), a.sides.begin(), a.sides.end());
    return make_loop(S, w);
}

// Cut along alpha and keep g = R_C^-1 h. The cut book is known when alpha is the cocore of the
// last recorded stabilization, or when g is trivial (then the page is a standard model).
inline OpenBook destabilize(const OpenBook& ob, const Path& alpha) {
    const Surface& S = ob.S;
    Path a = normalize(S, alpha);
    Path ha = apply(S, ob.h, a);
    if (!stabilization_arc(S, a, ha))
        fail_pre("h(alpha) must meet alpha only at its endpoints and lie to its right at both");
    Loop C = stabilization_curve(S, a, ha);
    MappingClass g = twist_class(C, -1, "C") * ob.h;
    if (!ob.history.empty()) {
        const auto& r = ob.history.back();
        bool cocore = a == r.cocore || a == reversed(S, r.cocore);
        if (cocore && r.sign == 1 && equals(S, g, r.h_before)) {
            OpenBook out{r.before, r.h_before, ob.history};
            out.history.pop_back();
            return out;
        }
    }
    if (!equals(S, g, MappingClass{})) fail_pre("destabilization along this arc is not recorded and g is not trivial");
    auto pieces = cut_euler(S, {a});
    if (pieces.size() != 1) fail_pre("arc separates the page");
    int chi = pieces[0];
    int b = S.nboundary() + (S.mark_comp[a.start] == S.mark_comp[a.end] ? 1 : -1);
    int genus = (2 - b - chi) / 2;
    return OpenBook{build_standard(genus, b), {}, {}};
}

struct Detection {
    Path arc;
    std::optional<OpenBook> book;  // empty when the arc qualifies but the cut book is not representable
};

// Scan arcs by weight for the stabilization condition; prefer arcs that destabilize.
inline std::optional<Detection> detect_stabilization(const OpenBook& ob, int W) {
    if (W < 1) fail_pre("weight bound must be positive");
    Action act(ob.S, ob.h);
    std::optional<Detection> first;
    for (const auto& a : enumerate_arcs(ob.S, -1, W)) {
        if (!stabilization_arc(ob.S, a, act(a))) continue;
        try {
            return Detection{a, destabilize(ob, a)};
        } catch (const Error& e) {
            if (e.kind != ErrorKind::Precondition) throw;
            if (!first) first = Detection{a, std::nullopt};
        }
    }
    return first;
}

// ---- right-veering-izing construction ----

// Three new marked points n, n+1, n+2 right after x on its boundary component; returns n.
inline int insert_lpiece_marks(Surface& S, int x) {
    int s = S.mark_side[x], i = S.mark_index[x];
    int n = S.nmarks;
    S.side_marks[s].insert(S.side_marks[s].begin() + i + 1, {n, n + 1, n + 2});
    auto curves = S.curves;
    auto arcs = S.arcs;
    S.finalize();
    S.curves = curves;
    S.arcs = arcs;
    return n;
}

// Stabilize twice next to x, across two boundary-hugging arcs that meet twice.
inline OpenBook stabilize_lpiece(const OpenBook& ob, int x, int n) {
    Path b1 = hug_path(ob.S, n, x), b2 = hug_path(ob.S, n + 2, n + 1);
    OpenBook o1 = stabilize(ob, b1, 1);
    Path b2t = transport(o1.S, o1.history.back(), b2);
    return stabilize(o1, b2t, 1);
}

inline OpenBook attach_lpiece(const OpenBook& ob, int x) {
    OpenBook cur = ob;
    int n = insert_lpiece_marks(cur.S, x);
    return stabilize_lpiece(cur, x, n);
}

// One piece per boundary component of the input page. All marked points go in before the
// first stabilization so the history replays on the marked page; earlier history is flattened.
inline OpenBook rv_stabilize(const OpenBook& ob) {
    std::vector<int> base;
    for (int c = 0; c < ob.S.nboundary(); ++c)
        for (int m = 0; m < ob.S.nmarks; ++m)
            if (ob.S.mark_comp[m] == c) {
                base.push_back(m);
                break;
            }
    OpenBook cur{ob.S, ob.h, {}};
    std::vector<int> fresh;
    for (int x : base) fresh.push_back(insert_lpiece_marks(cur.S, x));
    for (size_t k = 0; k < base.size(); ++k) cur = stabilize_lpiece(cur, base[k], fresh[k]);
    return cur;
}

struct LPieceCheck {
    Loop gamma;
    int r = -1, s = -1, t = -1, z = -1;  // boundary components
    Path a1, a2, a3;
    bool lantern = false, a1_fixed = false, a2_fixed = false, a3_fixed = false, right = false;
    bool ok() const { return lantern && a1_fixed && a2_fixed && a3_fixed && right; }
};

// (A, id) with one piece attached at marked point 0; z is the component of marked point 1.
inline OpenBook lpiece() {
    Surface A = build_standard(0, 2);
    return attach_lpiece(OpenBook{A, {}, {}}, 0);
}

// Lantern curve gamma with R_gamma h = R_r R_s R_t R_z, then arcs fixed up to boundary twisting:
// a1 from r to t missing gamma, a2 from s to t and a3 from z to r crossing gamma once.
inline LPieceCheck check_lpiece(const OpenBook& L, int zmark, int loop_bound = 16, int arc_bound = 10) {
    const Surface& S = L.S;
    if (S.nboundary() != 4 || L.h.word.size() != 2) fail_pre("not an L-piece");
    LPieceCheck out;
    out.z = S.mark_comp[zmark];
    std::vector<MappingClass> bt;
    MappingClass all;
    for (int c = 0; c < 4; ++c) {
        bt.push_back(twist_class(boundary_loop(S, c), 1, "boundary"));
        all = all * bt.back();
    }
    const Loop& al = L.h.word[1].curve;
    const Loop& be = L.h.word[0].curve;
    for (const auto& c : enumerate_loops(S, loop_bound)) {
        if (geometric_intersection(S, c, al) != 2 || geometric_intersection(S, c, be) != 2) continue;
        if (equals(S, twist_class(c) * L.h, all)) {
            out.gamma = c;
            out.lantern = true;
            break;
        }
    }
    if (!out.lantern) return out;
    const Loop& g = out.gamma;
    auto mark_on = [&](int c) {
        for (int m = 0; m < S.nmarks; ++m)
            if (S.mark_comp[m] == c) return m;
        fail_inv("boundary component without a marked point");
    };
    auto find_arc = [&](int from, int to, int cross) -> std::optional<Path> {
        for (const auto& p : enumerate_arcs(S, mark_on(from), arc_bound))
            if (S.mark_comp[p.end] == to && geometric_intersection(S, p, g) == cross) return p;
        return std::nullopt;
    };
    for (int c = 0; c < 4; ++c)
        if (c != out.z && find_arc(out.z, c, 0)) out.s = c;
    if (out.s < 0) return out;
    for (int c = 0; c < 4; ++c)
        if (c != out.z && c != out.s) (out.r < 0 ? out.r : out.t) = c;
    auto inv = [&](int c) { return bt[c].inverse(); };
    MappingClass Rg = twist_class(g);
    auto fixed = [&](const std::optional<Path>& p, const MappingClass& m, Path& slot) {
        if (!p) return false;
        slot = *p;
        return apply(S, m, *p) == *p;
    };
    out.a1_fixed = fixed(find_arc(out.r, out.t, 0), inv(out.r) * inv(out.t) * L.h, out.a1);
    out.a2_fixed = fixed(find_arc(out.s, out.t, 1), inv(out.s) * inv(out.t) * Rg * L.h, out.a2);
    out.a3_fixed = fixed(find_arc(out.z, out.r, 1), inv(out.z) * inv(out.r) * Rg * L.h, out.a3);
    out.right = true;
    for (const Path* p : {&out.a1, &out.a2, &out.a3}) {
        Path hp = apply(S, L.h, *p);
        out.right = out.right && right_of(S, *p, hp) == Cmp::Right && right_of_at_end(S, *p, hp) == Cmp::Right;
    }
    return out;
}

}  // namespace rveer
