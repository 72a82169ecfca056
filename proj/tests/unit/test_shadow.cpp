#include "doctest.h"
#include "tribone/error.hpp"
#include "tribone/shadow.hpp"

using namespace tribone;

namespace {

const char* const t3_word = "b a' b a' b a' c b' c b' c b' a c' a c' a c'";

Word t3() { return make_word(t3_word, rightmost_corner(BenzelParams::make(3, 3))); }

}  // namespace

TEST_CASE("weave and wind") {
    auto hex = classify_steps(make_word("b a' c b' a c'"));
    for (auto k : hex) CHECK(k == StepKind::wind);
    auto kinds = classify_steps(t3());
    CHECK(kinds[1] == StepKind::weave);
    CHECK(kinds[0] == StepKind::wind);
    auto zig = classify_steps(make_word("b a' b a' b a'"));
    for (auto k : zig) CHECK(k == StepKind::weave);
}

TEST_CASE("worked shadow of the (3,3)-benzel") {
    auto s = shadow_word(t3(), {0, 0}, {Step::b, Step::a_prime});
    CHECK(format_steps(s.steps) == "b a' c b' a c' a c' b a' c b' c b' a c' b a'");
    CHECK(signed_area(s) == 3);
    CHECK(default_seed(t3()) == ShadowSeed{Step::b, Step::a_prime});
    CHECK(shadow_word(t3()) == s);
    CHECK(classify_steps(s) == flipped(classify_steps(t3())));
    CHECK(classify_steps(shadow_word(s)) == classify_steps(t3()));
}

TEST_CASE("hexagon has no shadow") {
    try {
        shadow_word(make_word("b a' c b' a c'"));
        FAIL("expected shadow-not-closed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::shadow_not_closed);
    }
}

TEST_CASE("seed chirality") {
    auto w = t3();
    CHECK(all_seeds(w).size() == 6);
    CHECK(oriented_seeds(w).size() == 3);
    for (auto seed : all_seeds(w)) {
        auto area = signed_area(shadow_word(w, {0, 0}, seed));
        CHECK(area == (preserves_orientation(w, seed) ? 3 : -3));
    }
}

TEST_CASE("basepoint rules") {
    auto w = t3();
    CHECK_THROWS_AS(shadow_word(w, {1, 0}, default_seed(w)), Error);
    for (std::size_t k = 0; k < w.size(); ++k) {
        auto shifted = cyclic_shift(w, k);
        auto area = signed_area(shadow_word(shifted));
        if (class_of(shifted.base) == Sublattice::zero) {
            CHECK(area == 3);
        } else {
            CHECK(area == -3);
        }
        CHECK(cl_invariant_of_boundary(shifted).unrescaled == 3);
    }
}

TEST_CASE("spurs are shadowed by spurs") {
    auto p = BenzelParams::make(4, 4);
    auto w = boundary_word_closed_form(p);
    REQUIRE(!find_spurs(w).empty());
    auto s = shadow_word(w);
    CHECK(s.size() == w.size());
    CHECK(find_spurs(s).size() == find_spurs(w).size());
    CHECK(on_hexagon_graph(s));
    CHECK(s.is_closed());
    CHECK(cl_invariant_of_boundary(w) == cl_invariant_formula(p));

    // Spur across the end of the word.
    auto t = t3();
    auto wrap = make_word("a' " + std::string(t3_word) + " a", t.base + Point{1, 0});
    REQUIRE(on_hexagon_graph(wrap));
    CHECK(despur(wrap) == t);
    auto ws = shadow_word(wrap);
    CHECK(ws.steps.front() == reverse(ws.steps.back()));
    CHECK(signed_area(ws) == 3);
    CHECK(cl_invariant_of_boundary(wrap).unrescaled == 3);
}

TEST_CASE("invariant of regions") {
    CHECK(cl_invariant_path(benzel(BenzelParams::make(3, 3))).unrescaled == 3);
    CHECK(cl_invariant_path(triangle(6)).unrescaled == 6);
    CHECK(cl_invariant_path(benzel(BenzelParams::make(5, 7))).unrescaled == 0);
    CHECK(cl_invariant_path(triangle(2)).unrescaled == 3);
    CHECK_THROWS_AS(cl_invariant_path(triangle(1)), Error);
}

TEST_CASE("closed forms") {
    CHECK(area_formula(BenzelParams::make(5, 7)) == 27);
    CHECK(area_formula(BenzelParams::make(5, 5)) == 21);
    CHECK(area_formula(BenzelParams::make(3, 3)) == 6);
    CHECK(cl_invariant_formula(BenzelParams::make(3, 3)).unrescaled == 3);
    CHECK(cl_invariant_formula(BenzelParams::make(5, 7)).unrescaled == 0);
    CHECK(cl_invariant_formula(BenzelParams::make(4, 4)).unrescaled == -3);
    InvariantValue two{2};
    CHECK_FALSE(two.rescaled_integral());
    CHECK(two.rescaled_string() == "2/3");
    CHECK(InvariantValue{-6}.rescaled_string() == "-2");
}

TEST_CASE("pentagonal pairs") {
    CHECK(is_pentagonal_pair(5, 7) == 2);
    CHECK(is_pentagonal_pair(7, 5) == 2);
    CHECK(is_pentagonal_pair(12, 15) == 3);
    CHECK(is_pentagonal_pair(22, 26) == 4);
    CHECK_FALSE(is_pentagonal_pair(6, 6));
    CHECK_FALSE(is_pentagonal_pair(1, 2));
    CHECK_FALSE(is_pentagonal_pair(5, 8));
}
