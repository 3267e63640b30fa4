#include <doctest.h>

#include "rveer/standard.hpp"

using namespace rveer;

TEST_CASE("standard models have the declared topology") {
    for (auto [g, b] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        CAPTURE(g);
        CAPTURE(b);
        Surface S = build_standard(g, b);
        CHECK(euler_characteristic(S) == 2 - 2 * g - b);
        CHECK(S.genus == g);
        CHECK(S.nboundary() == b);
        CHECK(S.nmarks == b);
    }
    CHECK(euler_characteristic(build_standard(0, 1)) == 1);
    CHECK(euler_characteristic(build_standard(0, 2)) == 0);
    CHECK(euler_characteristic(build_standard(1, 1)) == -1);
    CHECK(euler_characteristic(build_standard(0, 4)) == -2);
}

TEST_CASE("no boundary is rejected") { CHECK_THROWS_AS(build_standard(1, 0), Error); }

TEST_CASE("boundary walks partition the boundary sides") {
    for (auto [g, b] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 4}, {1, 2}}) {
        Surface S = build_standard(g, b);
        std::vector<int> hit(S.nsides(), 0);
        for (int c = 0; c < S.nboundary(); ++c)
            for (const auto& [s, marks] : boundary_walk(S, c)) {
                CHECK(S.glue[s] < 0);
                ++hit[s];
            }
        for (int s = 0; s < S.nsides(); ++s) CHECK(hit[s] == (S.glue[s] < 0 ? 1 : 0));
    }
    CHECK_THROWS_AS(boundary_walk(build_standard(0, 2), 2), Error);
}

TEST_CASE("walk order follows the boundary orientation") {
    Surface S = build_standard(0, 3);
    for (int c = 0; c < S.nboundary(); ++c) {
        const auto& cyc = S.comps[c];
        for (size_t i = 0; i < cyc.size(); ++i) CHECK(fan_after(S, cyc[i]).second == cyc[(i + 1) % cyc.size()]);
    }
}

TEST_CASE("gluing validation") {
    auto make = [](int n, std::vector<std::pair<int, int>> gl) {
        Surface S;
        S.ntri = n;
        S.glue.assign(3 * n, -1);
        for (auto [a, b] : gl) S.glue[a] = b, S.glue[b] = a;
        S.finalize();
        return S;
    };
    CHECK(make(2, {{2, 3}, {1, 5}}).euler() == 0);  // square with two opposite sides identified
    CHECK_THROWS_WITH_AS(make(2, {{2, 3}, {1, 5}, {0, 4}}), "no boundary", Error);
    CHECK_THROWS_WITH_AS(make(1, {{1, 2}}), "interior vertex present", Error);
    CHECK_THROWS_WITH_AS(make(2, {}), "disconnected", Error);
}

TEST_CASE("named tables are simple curves with the expected intersections") {
    Surface T = build_standard(1, 1);
    CHECK(geometric_intersection(T, T.curves.at("a"), T.curves.at("b")) == 1);
    Surface P = build_standard(0, 4);
    for (const char* x : {"alpha", "beta", "gamma"})
        for (const char* y : {"alpha", "beta", "gamma"})
            if (std::string(x) != y) CHECK(geometric_intersection(P, P.curves.at(x), P.curves.at(y)) == 2);
    Surface G = build_standard(2, 1);
    for (const auto& [n, c] : G.curves) {
        CAPTURE(n);
        CHECK(embedded(G, c));
        CHECK_FALSE(is_power(c));
    }
    CHECK(geometric_intersection(G, G.curves.at("c1"), G.curves.at("b1")) == 1);
    CHECK(geometric_intersection(G, G.curves.at("c1"), G.curves.at("b2")) == 1);
    CHECK(geometric_intersection(G, G.curves.at("c1"), G.curves.at("a1")) == 0);
}
