#include "doctest.h"
#include "tribone/error.hpp"
#include "tribone/lattice.hpp"

using namespace tribone;

TEST_CASE("sublattice classes") {
    CHECK(class_of({0, 0}) == Sublattice::zero);
    CHECK(class_of({1, 0}) == Sublattice::one);
    CHECK(class_of({-1, 0}) == Sublattice::minus_one);
    CHECK(class_of({2, 2}) == Sublattice::one);
    CHECK(class_of({-5, 3}) == Sublattice::one);
}

TEST_CASE("rotation by 120 degrees") {
    CHECK(rotate120(Point{1, 0}) == Point{0, 1});
    CHECK(rotate120(Point{0, 1}) == Point{-1, -1});
    CHECK(rotate120(Point{0, 0}) == Point{0, 0});
    for (Point p : {Point{3, -7}, Point{-2, 5}, Point{4, 4}}) {
        CHECK(rotate120(p, 3) == p);
        CHECK(class_of(rotate120(p)) == class_of(p));
    }
    CHECK(rotate120(Step::a) == Step::b);
    CHECK(rotate120(Step::c_prime) == Step::a_prime);
}

TEST_CASE("cross product of unit steps") {
    CHECK(cross(vector_of(Step::a), vector_of(Step::b)) == 1);
    CHECK(cross(vector_of(Step::b), vector_of(Step::c)) == 1);
    CHECK(cross(vector_of(Step::c), vector_of(Step::a)) == 1);
    CHECK(cross(vector_of(Step::b), vector_of(Step::a)) == -1);
}

TEST_CASE("word parsing and formatting") {
    auto w = parse_word("base=0,0 b a' c b' a c'");
    CHECK(w.size() == 6);
    CHECK(w.is_closed());
    CHECK(format_word(w) == "base=0,0 b a' c b' a c'");
    CHECK(parse_word("base=-3,2 a").base == Point{-3, 2});
    CHECK_THROWS_AS(parse_word("b d"), Error);
    CHECK_THROWS_AS(parse_word("base=1 a"), Error);
    try {
        parse_word("base=0,0 base=1,1");
        FAIL("expected parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::parse_error);
    }
}

TEST_CASE("signed area") {
    auto hex = make_word("b a' c b' a c'");
    CHECK(signed_area(hex) == 1);
    CHECK(signed_area(Word{}) == 0);
    CHECK(signed_area(reversed(hex)) == -1);
    CHECK(on_hexagon_graph(hex));
    CHECK_FALSE(on_hexagon_graph(make_word("a' b")));
    try {
        signed_area(make_word("a b"));
        FAIL("expected not-closed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_closed);
    }
}

TEST_CASE("winding numbers") {
    auto hex = make_word("b a' c b' a c'");
    CHECK(winding_number(hex, {-1, 0}) == 1);
    CHECK(winding_number(hex, {2, 0}) == 0);
    CHECK(winding_number(hex, {100, -101}) == 0);
    CHECK(winding_number(reversed(hex), {-1, 0}) == -1);
    CHECK_THROWS_AS(winding_number(hex, {0, 0}), Error);
}

TEST_CASE("cyclic helpers") {
    auto hex = make_word("b a' c b' a c'");
    auto shifted = cyclic_shift(hex, 2);
    CHECK(shifted.base == Point{-1, 1});
    CHECK(cyclically_equal(hex.steps, shifted.steps));
    CHECK_FALSE(cyclically_equal(hex.steps, reversed(hex).steps));
    auto rotated = rotate_word(hex, 1);
    CHECK(signed_area(rotated) == 1);
    CHECK(rotated.base == Point{0, 0});
}
