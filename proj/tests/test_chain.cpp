#include <doctest.h>

#include <random>

#include "rveer/chain.hpp"
#include "rveer/mcg.hpp"
#include "rveer/standard.hpp"

using namespace rveer;

TEST_CASE("disjoint arcs give a chain of length two") {
    Surface S = build_standard(1, 1);
    Path a = S.arcs.at("arc:a");
    Path b = twist(S, S.curves.at("b"), 1, a);
    REQUIRE(geometric_intersection(S, a, b) == 0);
    Chain c = rightward_chain(S, a, b);
    CHECK(c.arcs.size() == 2);
    CHECK(verify_chain(S, c.arcs, a, b));
    Chain e = rightward_chain(S, a, a);
    CHECK(e.arcs.size() == 1);
}

TEST_CASE("beta strictly left is rejected") {
    Surface S = build_standard(1, 1);
    Path a = S.arcs.at("arc:a");
    Path l = twist(S, S.curves.at("b"), -1, a);
    CHECK_THROWS_AS(rightward_chain(S, a, l), Error);
}

TEST_CASE("case 1 splice keeps alpha up to the first crossing") {
    // first crossing rightward: alpha' = alpha to p1, then beta
    Surface S = build_standard(1, 1);
    std::mt19937 rng(8);
    auto arcs = enumerate_arcs(S, 0, 5);
    int seen = 0;
    for (int i = 0; i < 200 && seen < 5; ++i) {
        Path a = arcs[rng() % arcs.size()];
        MappingClass h = twist_class(S.curves.at("a")) * twist_class(S.curves.at("b"));
        Path b = apply(S, h, a);
        auto xs = arc_crossings(S, a, b);
        if (!xs || xs->empty() || !xs->front().rightward) continue;
        ++seen;
        const auto& p1 = xs->front();
        int r = 0;  // position of p1 along beta
        for (const auto& x : *xs) r += std::tie(x.bj, x.bpos) <= std::tie(p1.bj, p1.bpos);
        detail::ChainBuilder B{S, 8, 64};
        auto [mid, how] = B.step(a, b);
        CHECK(how == ChainCase::Case1);
        CHECK(geometric_intersection(S, a, mid) == geometric_intersection(S, a, b) - r);
        CHECK(geometric_intersection(S, mid, b) == 0);
        CHECK(verify_chain(S, rightward_chain(S, a, b).arcs, a, b));
    }
    CHECK(seen > 0);
}

TEST_CASE("random chains pass the independent check") {
    std::mt19937 rng(13);
    for (auto [g, b] : std::vector<std::pair<int, int>>{{1, 1}, {0, 3}, {1, 2}, {2, 1}}) {
        Surface S = build_standard(g, b);
        std::vector<Loop> cv;
        for (const auto& [n, c] : S.curves) cv.push_back(c);
        auto arcs = enumerate_arcs(S, -1, 5);
        for (int i = 0; i < 15; ++i) {
            Path a = arcs[rng() % arcs.size()];
            MappingClass h;
            for (int k = 0; k < 3; ++k) h.word.push_back({cv[rng() % cv.size()], 1, ""});
            Path bb = apply(S, h, a);
            Chain c = rightward_chain(S, a, bb);
            CHECK(verify_chain(S, c.arcs, a, bb));
            if (a != bb) CHECK(c.steps.size() + 2 == c.arcs.size());
        }
    }
}
