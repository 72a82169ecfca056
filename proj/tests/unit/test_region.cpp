#include "doctest.h"
#include "tribone/error.hpp"
#include "tribone/region.hpp"

using namespace tribone;

namespace {
std::vector<Point> pts(std::initializer_list<Point> l) { return l; }
}

TEST_CASE("benzel parameters") {
    CHECK(BenzelParams::valid(5, 7));
    CHECK_FALSE(BenzelParams::valid(2, 5));
    CHECK_FALSE(BenzelParams::valid(1, 2));
    CHECK_THROWS_AS(BenzelParams::make(2, 5), Error);
    auto p = BenzelParams::make(6, 6);
    CHECK(p.benzel_class() == 0);
    CHECK(p.s() == 2);
    CHECK(p.t() == 2);
    CHECK(BenzelParams::make(5, 5).benzel_class() == 1);
    CHECK(BenzelParams::make(4, 4).benzel_class() == -1);
    CHECK(BenzelParams::make(4, 4).s() == 1);
    CHECK(BenzelParams::make(5, 5).t() == 1);
}

TEST_CASE("bounding hexagon") {
    auto h = bounding_hexagon(BenzelParams::make(3, 3));
    CHECK(h[0] == Point{3, 3});
    CHECK(h[1] == Point{0, 3});
    CHECK(h[2] == Point{-3, 0});
    CHECK(h[3] == Point{-3, -3});
    CHECK(h[4] == Point{0, -3});
    CHECK(h[5] == Point{3, 0});
    CHECK(bounding_hexagon(BenzelParams::make(5, 7))[0] == Point{7, 5});
    CHECK(rightmost_corner(BenzelParams::make(5, 7)) == Point{7, 2});
}

TEST_CASE("benzel cells") {
    CHECK(benzel(BenzelParams::make(3, 3)) == Region(pts({{-2, -2}, {-1, 0}, {0, -1}, {0, 2}, {1, 1}, {2, 0}})));
    CHECK(benzel(BenzelParams::make(2, 2)) == Region(pts({{-1, 0}, {0, -1}, {1, 1}})));
    CHECK(benzel(BenzelParams::make(5, 7)).size() == 27);
    CHECK(benzel(BenzelParams::make(12, 15)).size() == 162);
}

TEST_CASE("triangles") {
    CHECK(triangle(3) == benzel(BenzelParams::make(3, 3)));
    CHECK(triangle(6).size() == 21);
    CHECK(triangle(1).size() == 1);
    CHECK_THROWS_AS(triangle(0), Error);
}

TEST_CASE("regions reject non-centres") {
    CHECK_THROWS_AS(Region(pts({{0, 0}})), Error);
    Region r(pts({{2, 0}, {-1, 0}, {2, 0}}));
    CHECK(r.size() == 2);
    CHECK(r.cells()[0] == Point{-1, 0});
    CHECK(r.index_of({2, 0}) == 1);
}

TEST_CASE("boundary tracing") {
    Region cell(pts({{-1, 0}}));
    CHECK(format_word(trace_boundary(cell, Point{0, 0})) == "base=0,0 b a' c b' a c'");
    auto t3 = trace_boundary(benzel(BenzelParams::make(3, 3)));
    CHECK(cyclically_equal(t3.steps, make_word("b a' b a' b a' c b' c b' c b' a c' a c' a c'").steps));
    for (auto r : {triangle(5), benzel(BenzelParams::make(5, 7)), benzel(BenzelParams::make(4, 6))}) {
        CHECK(signed_area(trace_boundary(r)) == static_cast<std::int64_t>(r.size()));
    }
    CHECK_THROWS_AS(trace_boundary(Region{}), Error);
    try {
        trace_boundary(Region(pts({{-1, 0}, {4, -2}})));
        FAIL("expected not-simply-connected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_simply_connected);
    }
    // A ring of six cells has a hole.
    std::vector<Point> ring;
    for (auto n : cell_neighbours({-1, 0})) ring.push_back(n);
    CHECK_THROWS_AS(trace_boundary(Region(ring)), Error);
}

TEST_CASE("closed-form boundary words") {
    auto w = boundary_word_closed_form(BenzelParams::make(6, 6));
    CHECK(format_steps(w.steps) ==
          "b a' b c' b a' b c' c a' b a' c a' b a' c b' c a' c b' c a' "
          "a b' c b' a b' c b' a c' a b' a c' a b' b c' a c' b c' a c'");
    for (auto [a, b] : {std::pair{4, 4}, {5, 5}, {6, 6}, {5, 7}, {7, 8}}) {
        auto p = BenzelParams::make(a, b);
        auto closed = boundary_word_closed_form(p);
        CHECK(closed.is_closed());
        CHECK(on_hexagon_graph(closed));
        auto d = despur(closed);
        CHECK(d == trace_boundary(benzel(p), d.base));
    }
}

TEST_CASE("spurs") {
    auto hex = make_word("b a' c b' a c'");
    CHECK(despur(hex) == hex);
    auto spurred = make_word("b a' a a' c b' a c'");
    CHECK(find_spurs(spurred).size() == 2);
    CHECK_FALSE(spurs_isolated(spurred));
    auto single = make_word("b a' b b' c b' a c'");
    CHECK(spurs_isolated(single));
    CHECK(despur(single).steps == hex.steps);
    auto map = despur_index_map(single);
    CHECK(map[1] == std::optional<std::size_t>{1});
    CHECK_FALSE(map[2].has_value());
    CHECK(map[4] == std::optional<std::size_t>{2});
    // Wrapping spur: the basepoint moves to its root.
    auto wrap = make_word("a' b a' c b' a c' a", Point{1, 0});
    CHECK(on_hexagon_graph(wrap));
    CHECK(despur(wrap) == hex);
    CHECK(free_reduce(make_word("a a' b b' b c c'")) == make_word("b"));
}
