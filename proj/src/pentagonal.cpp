#include "tribone/pentagonal.hpp"

#include <algorithm>
#include <map>

#include "tribone/error.hpp"

namespace tribone {

namespace {

void check_k(std::int64_t k) {
    if (k < 2) throw Error(ErrorCode::invalid_params, "pentagonal parameter k must be at least 2");
}

void append(std::vector<Step>& out, std::string_view tokens, std::int64_t times = 1) {
    const auto piece = make_word(tokens).steps;
    for (std::int64_t i = 0; i < times; ++i) out.insert(out.end(), piece.begin(), piece.end());
}

Placement rotate_placement(const Placement& p) {
    auto cells = cells_of(p);
    for (auto& c : cells) c = rotate120(c);
    return {rotate120(p.kind), *std::min_element(cells.begin(), cells.end())};
}

}  // namespace

BenzelParams pentagonal_benzel(std::int64_t k) {
    check_k(k);
    return BenzelParams::make(k * (3 * k - 1) / 2, k * (3 * k + 1) / 2);
}

SectorPaths sector_paths(std::int64_t k) {
    check_k(k);
    const auto s = k * (k - 1) / 2;
    const auto t = k * (k + 1) / 2;
    SectorPaths out;
    for (std::int64_t i = 0; i < k; ++i) {
        append(out.p1.steps, "a c' a b'", i);
        append(out.p1.steps, "a c'");
        append(out.p2.steps, "b a' b c'", i);
        append(out.p2.steps, "b a'");
    }
    out.spine = out.p1;
    append(out.p1.steps, "b a' b c'", s);
    append(out.p2.steps, "a b' a c'", t);
    out.spine.cyclic = out.p1.cyclic = out.p2.cyclic = false;
    return out;
}

Sector sector_cells(std::int64_t k, int rotation) {
    if (rotation < 0 || rotation > 2) throw Error(ErrorCode::invalid_params, "sector rotation must be 0, 1 or 2");
    const auto params = pentagonal_benzel(k);
    const auto paths = sector_paths(k);
    const auto corner = bounding_hexagon(params)[0];
    if (paths.spine.endpoint() != rightmost_corner(params) || paths.p1.endpoint() != corner ||
        paths.p2.endpoint() != corner) {
        throw Error(ErrorCode::construction_failed, "sector paths miss the bounding hexagon corners");
    }
    Word loop = concat(paths.p1, reversed(paths.p2));
    loop.cyclic = true;
    const auto region = benzel(params);
    std::vector<Point> cells;
    for (auto c : region.cells()) {
        const auto w = winding_number(loop, c);
        if (w == 1) cells.push_back(rotate120(c, rotation));
        else if (w != 0) throw Error(ErrorCode::construction_failed, "sector loop winds twice around " + to_string(c));
    }
    return {Region(std::move(cells)), rotation};
}

Tiling construct_tiling(std::int64_t k) {
    const auto base = sector_cells(k, 0);
    // Lines along the 1-w axis: x + y is constant, x increases by one per cell.
    std::map<std::int64_t, std::vector<std::int64_t>> lines;
    for (auto c : base.cells.cells()) lines[c.x + c.y].push_back(c.x);
    std::vector<Placement> sector_tiles;
    for (auto& [key, xs] : lines) {
        std::sort(xs.begin(), xs.end());
        std::size_t start = 0;
        for (std::size_t i = 1; i <= xs.size(); ++i) {
            if (i < xs.size() && xs[i] == xs[i - 1] + 1) continue;
            const auto run = i - start;
            if (run % 3 != 0) {
                throw Error(ErrorCode::construction_failed, "sector line x+y=" + std::to_string(key) +
                                                                " has a run of " + std::to_string(run) + " cells");
            }
            for (auto j = start; j < i; j += 3) sector_tiles.push_back({TileKind::bone_ab, {xs[j], key - xs[j]}});
            start = i;
        }
    }
    std::vector<Placement> all;
    for (int r = 0; r < 3; ++r) {
        all.insert(all.end(), sector_tiles.begin(), sector_tiles.end());
        for (auto& p : sector_tiles) p = rotate_placement(p);
    }
    Tiling t(benzel(pentagonal_benzel(k)), std::move(all));
    if (auto v = validate(t); !v) throw Error(ErrorCode::construction_failed, "constructed tiling is invalid: " + v.message);
    return t;
}

}  // namespace tribone
