#include <string>

#include "doctest.h"
#include "tribone/pentagonal.hpp"
#include "tribone/render.hpp"
#include "tribone/shadow.hpp"

using namespace tribone;

namespace {

std::size_t occurrences(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

std::size_t polyline_points(const std::string& svg, const std::string& cls) {
    const auto start = svg.find("class=\"" + cls + "\"");
    const auto pts = svg.find("points=\"", start) + 8;
    const auto end = svg.find('"', pts);
    return occurrences(svg.substr(pts, end - pts), ",");
}

}  // namespace

TEST_CASE("embedding") {
    auto [x, y] = embed({2, 2}, 20);
    CHECK(x == doctest::Approx(20));
    CHECK(y == doctest::Approx(-34.641).epsilon(1e-4));
    auto [rx, ry] = embed(rightmost_corner(BenzelParams::make(5, 7)), 1);
    CHECK(ry < 0);
    CHECK(rx == doctest::Approx(6));
}

TEST_CASE("svg element counts") {
    Scene tiling;
    tiling.tiling = construct_tiling(2);
    const auto svg = render_svg(tiling);
    CHECK(svg.starts_with("<?xml"));
    CHECK(occurrences(svg, "class=\"cell\"") == 27);
    CHECK(occurrences(svg, "class=\"tile ") == 9);
    CHECK(render_svg(tiling) == svg);

    Scene one;
    one.region = triangle(1);
    CHECK(occurrences(render_svg(one), "<polygon") == 1);

    Scene words;
    words.boundary = trace_boundary(triangle(3));
    words.shadow = shadow_word(*words.boundary);
    const auto w = render_svg(words);
    CHECK(occurrences(w, "<polyline") == 2);
    CHECK(polyline_points(w, "boundary-word") == 19);
    CHECK(polyline_points(w, "shadow-word") == 19);

    Scene hex;
    hex.hexagon = BenzelParams::make(3, 3);
    RenderSpec no_hex;
    no_hex.hexagon = false;
    CHECK(occurrences(render_svg(hex), "bounding-hexagon") == 1);
    CHECK(occurrences(render_svg(hex, no_hex), "bounding-hexagon") == 0);
}
