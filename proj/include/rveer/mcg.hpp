#pragma once

#include <numeric>

#include "overlay.hpp"

namespace rveer {

struct Twist {
    Loop curve;
    int exp = 1;
    std::string name;
};

// h = word[0] o word[1] o ... ; the last letter acts first.
struct MappingClass {
    std::vector<Twist> word;

    MappingClass operator*(const MappingClass& o) const {
        MappingClass r = *this;
        r.word.insert(r.word.end(), o.word.begin(), o.word.end());
        return r;
    }
    MappingClass inverse() const {
        MappingClass r;
        for (auto it = word.rbegin(); it != word.rend(); ++it) r.word.push_back({it->curve, -it->exp, it->name});
        return r;
    }
    MappingClass pow(int n) const {
        MappingClass r;
        const MappingClass b = n >= 0 ? *this : inverse();
        for (int i = 0; i < std::abs(n); ++i) r = r * b;
        return r;
    }
    bool all_positive() const {
        return std::all_of(word.begin(), word.end(), [](const Twist& t) { return t.exp > 0; });
    }
};

inline MappingClass twist_class(const Loop& c, int e = 1, std::string name = {}) {
    return MappingClass{{Twist{c, e, std::move(name)}}};
}

inline void check_twist_curve(const Surface& S, const Loop& c) {
    if (!valid_loop(S, c)) fail_pre("twist curve is not a closed curve on this surface");
    if (cyclic_reduce(S, c.sides).size() != c.sides.size()) fail_pre("twist curve is not reduced");
    if (is_power(c)) fail_pre("twist curve is a proper power");
    if (!embedded(S, c)) fail_pre("twist curve is not simple");
}

// Precomputed strand data for repeated application.
class Action {
public:
    Action(const Surface& S, const MappingClass& h) : S_(S) {
        for (const auto& t : h.word) {
            if (t.exp == 0) continue;
            items_.push_back({t.curve, reversed(S, t.curve), make_strand(S, t.curve), t.exp});
        }
    }
    Path operator()(Path p) const {
        for (auto it = items_.rbegin(); it != items_.rend(); ++it)
            for (int k = 0; k < std::abs(it->exp); ++k)
                p = twist_once(S_, it->c, it->cs, it->cr, it->exp > 0 ? 1 : -1, p);
        return p;
    }
    Loop operator()(const Loop& l) const { return unbase(S_, (*this)(based(S_, l))); }

private:
    struct Item {
        Loop c, cr;
        Strand cs;
        int exp;
    };
    const Surface& S_;
    std::vector<Item> items_;
};

inline Path apply(const Surface& S, const MappingClass& h, const Path& p) { return Action(S, h)(p); }
inline Loop apply(const Surface& S, const MappingClass& h, const Loop& l) { return Action(S, h)(l); }

// Tree paths from marked point 0 to every other marked point, plus one loop per non-tree edge.
inline std::vector<Path> filling_arc_system(const Surface& S) {
    int root = S.mark_tri(0);
    std::vector<int> via(S.ntri, -2);
    std::vector<int> order{root};
    via[root] = -1;
    for (size_t h = 0; h < order.size(); ++h) {
        int t = order[h];
        for (int k = 0; k < 3; ++k) {
            int s = 3 * t + k, g = S.glue[s];
            if (g < 0 || via[tri_of(g)] != -2) continue;
            via[tri_of(g)] = s;
            order.push_back(tri_of(g));
        }
    }
    auto to = [&](int t) {
        std::vector<int> w;
        for (; via[t] >= 0; t = tri_of(via[t])) w.push_back(via[t]);
        std::reverse(w.begin(), w.end());
        return w;
    };
    std::vector<Path> out;
    for (int m = 1; m < S.nmarks; ++m) out.push_back(Path{0, m, to(S.mark_tri(m))});
    for (int s = 0; s < S.nsides(); ++s) {
        int g = S.glue[s];
        if (g < s || via[tri_of(g)] == s || via[tri_of(s)] == g) continue;
        Path p{0, 0, to(tri_of(s))};
        p.sides.push_back(s);
        auto back = to(tri_of(g));
        for (auto it = back.rbegin(); it != back.rend(); ++it) p.sides.push_back(S.glue[*it]);
        out.push_back(reduce(S, p));
    }
    // drop arcs whose removal still leaves disks and touches every boundary component
    auto fills = [&](const std::vector<Path>& v) {
        std::vector<int> touched(S.nboundary(), 0);
        for (const auto& p : v) touched[S.mark_comp[p.start]] = touched[S.mark_comp[p.end]] = 1;
        if (std::count(touched.begin(), touched.end(), 1) != S.nboundary()) return false;
        auto pieces = cut_euler(S, v);
        return std::all_of(pieces.begin(), pieces.end(), [](int c) { return c == 1; });
    };
    for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
        auto v = out;
        v.erase(v.begin() + i);
        if (!v.empty() && fills(v)) out = std::move(v);
    }
    return out;
}

inline bool equals(const Surface& S, const MappingClass& h1, const MappingClass& h2) {
    Action A1(S, h1), A2(S, h2);
    for (const auto& p : filling_arc_system(S))
        if (A1(p) != A2(p)) return false;
    return true;
}

inline bool verify_relation(const Surface& S, const MappingClass& lhs, const MappingClass& rhs) {
    return equals(S, lhs, rhs);
}

struct Rational {
    long num = 0, den = 1;
    static Rational make(long n, long d) {
        if (d < 0) n = -n, d = -d;
        long g = std::gcd(std::abs(n), d);
        if (g == 0) g = 1;
        return {n / g, d / g};
    }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

struct PeriodicCertificate {
    int n = 1;
    std::vector<int> exps;  // per boundary component
    std::vector<Rational> coeffs;
};

// Search |n_i| <= bound, smallest max |n_i| first, for h^n = prod R_{boundary i}^{n_i}.
inline std::optional<PeriodicCertificate> boundary_twist_factorization(const Surface& S, const MappingClass& h, int n,
                                                                       int bound) {
    if (n < 1) fail_pre("power must be positive");
    const int b = S.nboundary();
    std::vector<Loop> bl;
    for (int c = 0; c < b; ++c) bl.push_back(boundary_loop(S, c));
    auto gens = filling_arc_system(S);
    Action hn(S, h.pow(n));
    std::vector<Path> target;
    for (const auto& p : gens) target.push_back(hn(p));
    std::vector<int> e(b, 0);
    for (int r = 0; r <= bound; ++r) {
        // all tuples with max |e_i| == r
        std::vector<int> cur(b, -r);
        for (;;) {
            int mx = 0;
            for (int x : cur) mx = std::max(mx, std::abs(x));
            if (mx == r) {
                MappingClass m;
                for (int c = 0; c < b; ++c)
                    if (cur[c]) m.word.push_back({bl[c], cur[c], "boundary"});
                Action am(S, m);
                bool ok = true;
                for (size_t i = 0; i < gens.size() && ok; ++i) ok = am(gens[i]) == target[i];
                if (ok) {
                    PeriodicCertificate pc{n, cur, {}};
                    for (int x : cur) pc.coeffs.push_back(Rational::make(x, n));
                    return pc;
                }
            }
            int i = 0;
            while (i < b && cur[i] == r) cur[i++] = -r;
            if (i == b) break;
            ++cur[i];
        }
    }
    return std::nullopt;
}

// c_0 > 0, or c_0 = 0 and every c_i >= 0.
inline bool periodic_rv_criterion(const PeriodicCertificate& pc, int component) {
    if (component < 0 || component >= static_cast<int>(pc.coeffs.size())) fail_pre("unknown boundary component");
    long c0 = pc.coeffs[component].num;
    if (c0 > 0) return true;
    if (c0 < 0) return false;
    return std::all_of(pc.coeffs.begin(), pc.coeffs.end(), [](const Rational& r) { return r.num >= 0; });
}

}  // namespace rveer
