#include <doctest.h>

#include <random>

#include "rveer/overlay.hpp"
#include "rveer/enumerate.hpp"
#include "rveer/mcg.hpp"
#include "rveer/standard.hpp"

using namespace rveer;

namespace {

MappingClass T(const Surface& S, const std::string& n, int e = 1) { return twist_class(S.curves.at(n), e, n); }

}  // namespace

TEST_CASE("twist then inverse twist is the identity on arcs") {
    std::mt19937 rng(2);
    for (auto [g, b] : std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {0, 3}, {0, 4}, {2, 1}}) {
        Surface S = build_standard(g, b);
        auto arcs = enumerate_arcs(S, -1, 6);
        std::vector<Loop> cv;
        for (const auto& [n, c] : S.curves) cv.push_back(c);
        for (int i = 0; i < 100; ++i) {
            const Loop& c = cv[rng() % cv.size()];
            const Path& x = arcs[rng() % arcs.size()];
            CHECK(twist(S, c, -1, twist(S, c, 1, x)) == x);
        }
    }
}

TEST_CASE("identity word and disjoint curves act trivially") {
    Surface S = build_standard(1, 1);
    Path x = S.arcs.at("arc:a");
    CHECK(apply(S, MappingClass{}, x) == x);
    CHECK(apply(S, T(S, "a"), x) == x);  // arc:a runs parallel to a
    CHECK(apply(S, T(S, "a") * T(S, "a", -1), S.arcs.at("arc:b")) == S.arcs.at("arc:b"));
}

TEST_CASE("relations under the Alexander method") {
    Surface P = build_standard(0, 4);
    MappingClass rhs = T(P, "r") * T(P, "s") * T(P, "t") * T(P, "z");
    CHECK(equals(P, T(P, "gamma") * T(P, "beta") * T(P, "alpha"), rhs));
    CHECK_FALSE(equals(P, T(P, "alpha") * T(P, "beta") * T(P, "gamma"), rhs));
    CHECK(equals(P, rhs, rhs));

    Surface S = build_standard(1, 1);
    MappingClass a = T(S, "a"), b = T(S, "b");
    CHECK_FALSE(equals(S, a * b, b * a));
    CHECK(verify_relation(S, a * b * a, b * a * b));
    CHECK(verify_relation(S, (a * b).pow(6), T(S, "boundary:0")));
    CHECK_FALSE(verify_relation(S, (a * b).pow(6), MappingClass{}));

    Surface G = build_standard(2, 1);
    CHECK(equals(G, T(G, "a1") * T(G, "a2"), T(G, "a2") * T(G, "a1")));
    CHECK(equals(G, T(G, "b1") * T(G, "c1") * T(G, "b1"), T(G, "c1") * T(G, "b1") * T(G, "c1")));
}

TEST_CASE("filling systems cut every model into disks") {
    for (auto [g, b] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}}) {
        Surface S = build_standard(g, b);
        auto fs = filling_arc_system(S);
        if (g == 0 && b == 2) CHECK(fs.size() == 1);
        if (g == 0 && b == 4) CHECK(fs.size() == 3);
        for (int c : cut_euler(S, fs)) CHECK(c == 1);
        std::vector<int> touched(S.nboundary(), 0);
        for (const auto& p : fs) touched[S.mark_comp[p.start]] = touched[S.mark_comp[p.end]] = 1;
        if (!fs.empty()) CHECK(std::count(touched.begin(), touched.end(), 1) == S.nboundary());
    }
}

TEST_CASE("boundary twist factorization") {
    Surface P = build_standard(0, 3);
    auto c = boundary_twist_factorization(P, T(P, "boundary:0") * T(P, "boundary:1"), 1, 2);
    REQUIRE(c);
    CHECK(c->exps[P.mark_comp[0]] == 1);
    CHECK(c->exps[P.mark_comp[1]] == 1);
    CHECK(c->exps[P.mark_comp[2]] == 0);
    auto id = boundary_twist_factorization(P, MappingClass{}, 1, 2);
    REQUIRE(id);
    CHECK(id->exps == std::vector<int>{0, 0, 0});
    CHECK(periodic_rv_criterion(*id, 0));

    Surface S = build_standard(1, 1);
    auto pc = boundary_twist_factorization(S, T(S, "a") * T(S, "b"), 6, 2);
    REQUIRE(pc);
    CHECK(pc->coeffs[0].num == 1);
    CHECK(pc->coeffs[0].den == 6);
    CHECK(periodic_rv_criterion(*pc, 0));
    CHECK_FALSE(boundary_twist_factorization(S, T(S, "a") * T(S, "b"), 5, 2));

    PeriodicCertificate neg{3, {0, -1}, {Rational::make(0, 3), Rational::make(-1, 3)}};
    CHECK_FALSE(periodic_rv_criterion(neg, 0));
}

TEST_CASE("positive words send sampled arcs right") {
    std::mt19937 rng(4);
    for (auto [g, b] : std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {0, 3}, {2, 1}}) {
        Surface S = build_standard(g, b);
        std::vector<std::string> names;
        for (const auto& [n, c] : S.curves) names.push_back(n);
        auto arcs = enumerate_arcs(S, -1, 5);
        for (int i = 0; i < 30; ++i) {
            MappingClass h;
            for (int k = 0; k < 3; ++k) h = h * T(S, names[rng() % names.size()]);
            const Path& x = arcs[rng() % arcs.size()];
            Cmp c = right_of(S, x, apply(S, h, x));
            CHECK((c == Cmp::Right || c == Cmp::Equal));
        }
    }
}

TEST_CASE("twist curves are validated") {
    Surface S = build_standard(1, 1);
    Loop a = S.curves.at("a");
    Loop aa{a.sides};
    aa.sides.insert(aa.sides.end(), a.sides.begin(), a.sides.end());
    CHECK_THROWS_AS(check_twist_curve(S, aa), Error);
    CHECK_NOTHROW(check_twist_curve(S, a));
}
