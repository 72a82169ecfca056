#include <set>

#include "doctest.h"
#include "tribone/error.hpp"
#include "tribone/shadow.hpp"
#include "tribone/tiling.hpp"

using namespace tribone;

namespace {

Region tile_region(const Placement& p) {
    const auto cells = cells_of(p);
    return Region({cells.begin(), cells.end()});
}

// Parallelogram of cells spanned by the steps (1,-1) and (1,2).
Region strip(int length, int width) {
    std::vector<Point> cells;
    for (int i = 0; i < length; ++i) {
        for (int j = 0; j < width; ++j) cells.push_back(Point{-1, 0} + i * Point{1, -1} + j * Point{1, 2});
    }
    return Region(std::move(cells));
}

}  // namespace

TEST_CASE("tile cells") {
    CHECK(cells_of({TileKind::bone_ab, {-1, 0}}) == std::array<Point, 3>{Point{-1, 0}, {0, -1}, {1, -2}});
    CHECK(cells_of({TileKind::bone_bc, {0, -1}}) == std::array<Point, 3>{Point{0, -1}, {1, 1}, {2, 3}});
    for (auto k : all_tile_kinds) {
        const auto offsets = tile_offsets(k);
        CHECK(std::is_sorted(offsets.begin(), offsets.end()));
        CHECK(tile_region({k, {2, 0}}).size() == 3);
    }
    CHECK(rotate120(rotate120(rotate120(TileKind::bone_ab))) == TileKind::bone_ab);
}

TEST_CASE("stone chirality is fixed by shadow area") {
    for (Point anchor : {Point{-1, 0}, Point{2, 0}, Point{-4, 3}}) {
        CHECK(cl_invariant_path(tile_region({TileKind::stone_r, anchor})).unrescaled == 3);
        CHECK(cl_invariant_path(tile_region({TileKind::stone_l, anchor})).unrescaled == -3);
        for (auto k : {TileKind::bone_ab, TileKind::bone_bc, TileKind::bone_ca}) {
            CHECK(cl_invariant_path(tile_region({k, anchor})).unrescaled == 0);
        }
    }
}

TEST_CASE("tile sets and placements") {
    CHECK(TileSet::parse("bones") == TileSet::bones());
    CHECK(TileSet::parse("stones+bones").name() == "stones+bones");
    CHECK_THROWS_AS(TileSet::parse("phones"), Error);
    CHECK(parse_placement("boneAB,-1,0") == Placement{TileKind::bone_ab, {-1, 0}});
    CHECK_THROWS_AS(parse_placement("boneAB,1"), Error);

    const auto t3 = benzel(BenzelParams::make(3, 3));
    const auto bones = placements(t3, TileSet::bones());
    CHECK(bones.size() == 3);
    CHECK(std::is_sorted(bones.begin(), bones.end()));
    CHECK(placements(triangle(1), TileSet::stones_and_bones()).empty());
    const auto stones = placements(benzel(BenzelParams::make(2, 2)), TileSet::stones());
    REQUIRE(stones.size() == 1);
    CHECK(stones[0].kind == TileKind::stone_l);
}

TEST_CASE("validation") {
    CHECK(validate(Tiling{}));
    const auto t2 = benzel(BenzelParams::make(2, 2));
    const Placement stone{TileKind::stone_l, {-1, 0}};
    CHECK(validate(Tiling(t2, {stone})));
    CHECK_FALSE(validate(Tiling(t2, {stone, stone})));
    CHECK_FALSE(validate(Tiling(t2, {})));
    CHECK_FALSE(validate(Tiling(t2, {{TileKind::bone_ab, {-1, 0}}})));
    CHECK_THROWS_AS(stone_balance(Tiling(t2, {})), Error);
    CHECK(stone_balance(Tiling(t2, {stone})) == -3);
}

TEST_CASE("counts from the literature") {
    CHECK(count_tilings(benzel(BenzelParams::make(5, 7)), TileSet::bones()) == 2);
    CHECK(count_tilings(benzel(BenzelParams::make(12, 15)), TileSet::bones()) == 42705);
    CHECK(count_tilings(benzel(BenzelParams::make(3, 3)), TileSet::stones_and_bones()) == 3);
    CHECK(count_tilings(triangle(6), TileSet::bones()) == 0);
    CHECK(count_tilings(Region{}, TileSet::bones()) == 1);
}

TEST_CASE("enumeration agrees with counting") {
    for (const auto& r : {benzel(BenzelParams::make(5, 7)), benzel(BenzelParams::make(3, 3)), triangle(5),
                          benzel(BenzelParams::make(6, 6)), strip(6, 3)}) {
        for (auto tiles : {TileSet::bones(), TileSet::stones_and_bones()}) {
            std::set<std::vector<Placement>> seen;
            const auto n = enumerate_tilings(r, tiles, std::nullopt, [&](const Tiling& t) {
                CHECK(validate(t));
                seen.insert(t.placements);
                return true;
            });
            CHECK(seen.size() == n);
            CHECK(count_tilings(r, tiles) == n);
        }
    }
    CHECK(all_tilings(triangle(3), TileSet::bones()).empty());
    CHECK(all_tilings(benzel(BenzelParams::make(5, 7)), TileSet::bones(), 0).empty());
    CHECK(all_tilings(benzel(BenzelParams::make(3, 3)), TileSet::stones_and_bones(), 2).size() == 2);
}

TEST_CASE("stone balance and histograms") {
    for (const auto& t : all_tilings(benzel(BenzelParams::make(3, 3)), TileSet::stones_and_bones())) {
        CHECK(stone_balance(t) == 3);
    }
    for (const auto& t : all_tilings(triangle(6), TileSet::stones_and_bones())) CHECK(stone_balance(t) == 6);
    for (const auto& t : all_tilings(benzel(BenzelParams::make(5, 7)), TileSet::bones())) {
        CHECK(orientation_histogram(t) == OrientationHistogram{3, 3, 3, 0, 0});
    }
    CHECK(orientation_histogram(Tiling{}) == OrientationHistogram{});
}

TEST_CASE("placement frequencies") {
    const auto r = benzel(BenzelParams::make(5, 7));
    TilingCount total = 0;
    int forced = 0;
    for (const auto& p : placements(r, TileSet::bones())) {
        const auto f = placement_frequency(r, TileSet::bones(), p);
        total += f;
        forced += f == 2;
    }
    CHECK(total == 2 * 9);
    CHECK(forced >= 3);
    CHECK_THROWS_AS(placement_frequency(r, TileSet::bones(), {TileKind::bone_ab, {101, -100}}), Error);
    CHECK_THROWS_AS(placement_frequency(r, TileSet::bones(), {TileKind::stone_r, r.cells()[0]}), Error);
}

TEST_CASE("counting engine options") {
    const auto r = benzel(BenzelParams::make(12, 12));
    CountOptions one, three;
    three.threads = 3;
    CountStats stats;
    const auto base = count_tilings(r, TileSet::stones_and_bones(), one, &stats);
    CHECK(base == TilingCount("1649148053301"));
    CHECK(stats.peak_states > 3 * 4096);
    CHECK(count_tilings(r, TileSet::stones_and_bones(), three) == base);

    CountOptions tiny;
    tiny.memo_limit_mb = 1;
    try {
        count_tilings(benzel(BenzelParams::make(22, 26)), TileSet::bones(), tiny);
        FAIL("expected resource limit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::resource_limit);
    }
}

TEST_CASE("wide counts") {
    const auto r = strip(120, 3);
    CountOptions wide;
    wide.force_wide = true;
    CountStats narrow_stats, wide_stats;
    const auto a = count_tilings(r, TileSet::stones_and_bones(), {}, &narrow_stats);
    const auto b = count_tilings(r, TileSet::stones_and_bones(), wide, &wide_stats);
    CHECK(a == b);
    CHECK(a > TilingCount(1) << 128);
    CHECK(narrow_stats.wide_counts);
    CHECK(wide_stats.wide_counts);
}
