#include <doctest.h>

#include "rveer/io.hpp"

using namespace rveer;

namespace {

json J(const char* s) { return parse_json_text(s); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind;
    }
    return static_cast<ErrorKind>(0);
}

}  // namespace

TEST_CASE("standard and explicit surfaces") {
    Surface S = surface_from_json(J(R"({"standard": {"genus": 1, "boundary": 2}})"));
    CHECK(S.euler() == -2);
    Surface A = surface_from_json(J(R"({"triangles": 2, "gluings": [[2, 3], [1, 5]]})"));
    CHECK(A.euler() == 0);
    CHECK(A.nboundary() == 2);
    CHECK(A.curves.count("boundary:0"));
}

TEST_CASE("a flipped triangle is reoriented") {
    // second triangle listed clockwise: its gluings preserve orientation
    Surface A = surface_from_json(J(R"({"triangles": 2, "gluings": [[2, 3, "preserving"], [1, 4, "preserving"]]})"));
    CHECK(A.euler() == 0);
    CHECK(A.nboundary() == 2);
}

TEST_CASE("invalid gluings") {
    CHECK(kind_of([] { surface_from_json(J(R"({"triangles": 2, "gluings": [[2, 3], [1, 5, "preserving"]]})")); }) ==
          ErrorKind::Precondition);
    CHECK_THROWS_WITH(surface_from_json(J(R"({"triangles": 2, "gluings": [[2, 3], [1, 5, "preserving"]]})")),
                      "non-orientable gluing");
    CHECK_THROWS_WITH(surface_from_json(J(R"({"triangles": 2, "gluings": [[2, 3], [1, 5], [0, 4]]})")), "no boundary");
    CHECK_THROWS_WITH(surface_from_json(J(R"({"triangles": 2, "gluings": [[2, 3], [2, 5]]})")),
                      doctest::Contains("involution"));
    CHECK(kind_of([] { surface_from_json(J(R"({"triangles": 2})")); }) == ErrorKind::Parse);
}

TEST_CASE("unknown fields are rejected") {
    CHECK(kind_of([] { surface_from_json(J(R"({"standard": {"genus": 0, "boundary": 2}, "color": 1})")); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { surface_from_json(J(R"({"standard": {"genus": 0, "boundary": 2, "g": 1}})")); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { book_from_json(J(R"({"surface": {"standard": {"genus": 0, "boundary": 2}}, "x": []})")); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { parse_json_text("{"); }) == ErrorKind::Parse);
}

TEST_CASE("twist words") {
    Surface T = build_standard(1, 1);
    MappingClass h = word_from_json(T, J(R"(["+a", "-b", {"curve": "a", "exp": 2}, "+boundary:0"])"));
    REQUIRE(h.word.size() == 4);
    CHECK(h.word[1].exp == -1);
    CHECK(h.word[2].exp == 2);
    CHECK(kind_of([&] { word_from_json(T, J(R"(["+nope"])")); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { word_from_json(T, J(R"(["a"])")); }) == ErrorKind::Parse);
    json back = word_to_json(T, h);
    CHECK(equals(T, word_from_json(T, back), h));
}

TEST_CASE("surface export roundtrip") {
    for (auto [g, b] : std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {0, 4}}) {
        Surface S = build_standard(g, b);
        Surface R = surface_from_json(surface_to_json(S));
        CHECK(R.glue == S.glue);
        CHECK(R.side_marks == S.side_marks);
    }
    Surface A = surface_from_json(J(R"({"triangles": 2, "gluings": [[2, 3], [1, 5]], "marked": {"0": [1], "4": [0]}})"));
    json e = surface_to_json(A);
    CHECK(e.contains("gluings"));
    Surface R = surface_from_json(e);
    CHECK(R.glue == A.glue);
    CHECK(R.side_marks == A.side_marks);
    CHECK(R.curves == A.curves);
}

TEST_CASE("open books replay their history") {
    json j = J(R"({"surface": {"standard": {"genus": 1, "boundary": 1}}, "monodromy": ["+a"],
                   "history": [{"arc": "arc:b", "sign": 1}, {"arc": "cocore:0", "sign": -1}]})");
    OpenBook ob = book_from_json(j);
    CHECK(ob.history.size() == 2);
    CHECK(ob.S.euler() == -3);
    OpenBook again = book_from_json(book_to_json(ob));
    CHECK(again.S.glue == ob.S.glue);
    CHECK(equals(ob.S, again.h, ob.h));
    CHECK(book_to_json(again).dump() == book_to_json(ob).dump());
}

TEST_CASE("lantern-piece books survive export") {
    Surface A = build_standard(0, 2);
    OpenBook rv = rv_stabilize(OpenBook{A, twist_class(A.curves.at("core"), -1, "core"), {}});
    OpenBook again = book_from_json(book_to_json(rv));
    CHECK(again.S.glue == rv.S.glue);
    CHECK(again.S.side_marks == rv.S.side_marks);
    CHECK(equals(rv.S, again.h, rv.h));
}
