#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rveer/chain.hpp"
#include "rveer/mcg.hpp"
#include "rveer/standard.hpp"

using namespace rveer;

namespace {

std::vector<std::pair<int, int>> small_models() { return {{0, 2}, {0, 3}, {1, 1}, {0, 4}, {1, 2}, {2, 1}}; }

Loop torus_curve(const Surface& T, const std::vector<oracle::Letter>& w) {
    MappingClass h;
    for (const auto& l : w) h.word.push_back({T.curves.at(std::string(1, l.c)), l.e, ""});
    return apply(T, h, T.curves.at("a"));
}

}  // namespace

TEST_CASE("normalize removes backtracking and is idempotent") {
    Surface A = build_standard(0, 2);
    Path sp = A.arcs.at("span:0-1");
    Path noisy = sp;
    int s = -1;
    for (int k = 0; k < 3 && s < 0; ++k)
        if (A.glue[3 * A.mark_tri(0) + k] >= 0) s = 3 * A.mark_tri(0) + k;
    noisy.sides.insert(noisy.sides.begin(), {s, A.glue[s]});
    CHECK(normalize(A, noisy) == normalize(A, sp));
    CHECK(normalize(A, normalize(A, noisy)) == normalize(A, noisy));
    CHECK(is_isotopic(A, noisy, sp));
}

TEST_CASE("intersection numbers: symmetric, zero on parallel copies") {
    std::mt19937 rng(11);
    for (auto [g, b] : small_models()) {
        Surface S = build_standard(g, b);
        auto arcs = enumerate_arcs(S, -1, 5);
        REQUIRE_FALSE(arcs.empty());
        for (int i = 0; i < 40; ++i) {
            const Path& x = arcs[rng() % arcs.size()];
            const Path& y = arcs[rng() % arcs.size()];
            CHECK(geometric_intersection(S, x, y) == geometric_intersection(S, y, x));
            CHECK(geometric_intersection(S, x, x) == 0);
        }
    }
}

TEST_CASE("torus slopes match the determinant") {
    Surface T = build_standard(1, 1);
    std::mt19937 rng(5);
    for (int i = 0; i < 12; ++i) {
        auto w1 = oracle::random_word(rng, 3), w2 = oracle::random_word(rng, 3);
        long want = oracle::det_oracle(oracle::slope_of(w1), oracle::slope_of(w2));
        CHECK(geometric_intersection(T, torus_curve(T, w1), torus_curve(T, w2)) == want);
    }
    // (1,0) against (1,-1), (2,-1), (1,2)
    Loop a = T.curves.at("a");
    CHECK(geometric_intersection(T, a, torus_curve(T, {{'b', 1}})) == 1);
    CHECK(geometric_intersection(T, a, torus_curve(T, {{'a', -1}, {'b', 1}})) == 1);
    CHECK(geometric_intersection(T, a, torus_curve(T, {{'b', -1}, {'b', -1}})) == 2);
}

TEST_CASE("overlay realizes the geometric intersection number") {
    std::mt19937 rng(3);
    for (auto [g, b] : small_models()) {
        Surface S = build_standard(g, b);
        auto arcs = enumerate_arcs(S, -1, 6);
        std::vector<Loop> cv;
        for (const auto& [n, c] : S.curves) cv.push_back(c);
        for (int i = 0; i < 60; ++i) {
            Path x = arcs[rng() % arcs.size()];
            Path y = i % 2 ? twist(S, cv[rng() % cv.size()], rng() % 2 ? 1 : -1, x) : arcs[rng() % arcs.size()];
            Overlay ov(S, {x, y});
            CHECK(ov.consistent());
            CHECK(ov.crossings(0, 1) == geometric_intersection(S, x, y));
        }
    }
}

TEST_CASE("right_of: reflexive Equal, antisymmetric otherwise") {
    std::mt19937 rng(9);
    for (auto [g, b] : small_models()) {
        Surface S = build_standard(g, b);
        auto arcs = enumerate_arcs(S, 0, 5);
        for (int i = 0; i < 40; ++i) {
            const Path& x = arcs[rng() % arcs.size()];
            const Path& y = arcs[rng() % arcs.size()];
            CHECK(right_of(S, x, x) == Cmp::Equal);
            Cmp c = right_of(S, x, y), d = right_of(S, y, x);
            CHECK((c == Cmp::Equal) == (x == y));
            if (c == Cmp::Right) CHECK(d == Cmp::Left);
            if (c == Cmp::Left) CHECK(d == Cmp::Right);
        }
    }
    Surface A = build_standard(0, 2);
    CHECK_THROWS_AS(right_of(A, A.arcs.at("span:0-1"), A.arcs.at("span:1-0")), Error);
}

TEST_CASE("annulus twist moves the spanning arc right at both ends") {
    Surface A = build_standard(0, 2);
    Path a = A.arcs.at("span:0-1");
    Loop core = A.curves.at("core");
    Path r = twist(A, core, 1, a), l = twist(A, core, -1, a);
    CHECK(right_of(A, a, r) == Cmp::Right);
    CHECK(right_of_at_end(A, a, r) == Cmp::Right);
    CHECK(right_of(A, a, l) == Cmp::Left);
    CHECK(geometric_intersection(A, a, r) == 0);
    CHECK_FALSE(is_isotopic(A, a, r));
    CHECK(is_isotopic(A, twist(A, core, -1, r), a));
}

TEST_CASE("boundary-parallel arcs: Euler count agrees with the boundary walk") {
    for (auto [g, b] : small_models()) {
        Surface S = build_standard(g, b);
        for (const auto& p : enumerate_arcs_bruteforce(S, -1, 5)) CHECK_FALSE(is_boundary_parallel(S, p));
        // hugging arcs are boundary parallel by both tests
        for (int m = 0; m < S.nmarks; ++m) {
            Path h = hug_path(S, m, m);
            if (h.sides.empty()) continue;
            CHECK(is_boundary_parallel(S, h));
            CHECK(is_boundary_parallel_hug(S, h));
        }
    }
    Surface D = build_standard(0, 1);
    CHECK(is_boundary_parallel_hug(D, Path{0, 0, {}}));
    Surface A = build_standard(0, 2);
    CHECK_FALSE(is_boundary_parallel(A, A.arcs.at("span:0-1")));
    Surface T = build_standard(1, 1);
    CHECK_FALSE(is_boundary_parallel(T, T.arcs.at("arc:a")));
}

TEST_CASE("enumeration agrees with the brute-force generator") {
    CHECK(enumerate_arcs(build_standard(0, 1), -1, 8).empty());
    for (auto [g, b] : small_models()) {
        Surface S = build_standard(g, b);
        for (int W : {1, 3, 5}) {
            auto fast = enumerate_arcs(S, -1, W);
            auto slow = enumerate_arcs_bruteforce(S, -1, W);
            CHECK(fast == slow);
            CHECK(std::adjacent_find(fast.begin(), fast.end()) == fast.end());
        }
    }
    Surface A = build_standard(0, 2);
    auto arcs = enumerate_arcs(A, 0, 4);
    CHECK(std::find(arcs.begin(), arcs.end(), A.arcs.at("span:0-1")) != arcs.end());
}

TEST_CASE("twists preserve intersection numbers") {
    std::mt19937 rng(21);
    for (auto [g, b] : small_models()) {
        Surface S = build_standard(g, b);
        auto arcs = enumerate_arcs(S, -1, 5);
        std::vector<Loop> cv;
        for (const auto& [n, c] : S.curves) cv.push_back(c);
        for (int i = 0; i < 20; ++i) {
            Path x = arcs[rng() % arcs.size()], y = arcs[rng() % arcs.size()];
            MappingClass h = twist_class(cv[rng() % cv.size()], rng() % 2 ? 1 : -1) *
                             twist_class(cv[rng() % cv.size()], rng() % 2 ? 1 : -1);
            CHECK(geometric_intersection(S, apply(S, h, x), apply(S, h, y)) == geometric_intersection(S, x, y));
        }
    }
}
