#pragma once

#include <cstdint>

#include "tribone/region.hpp"
#include "tribone/tiling.hpp"

namespace tribone {

// (k(3k-1)/2, k(3k+1)/2). Throws invalid_params for k < 2.
BenzelParams pentagonal_benzel(std::int64_t k);

// The spine runs from the origin to the rightmost corner of the bounding
// hexagon; p1 continues it to the upper right corner, and p2 reaches the
// same corner by way of the upper left one. Between them lies one third of
// the pentagonal benzel.
struct SectorPaths {
    Word spine;
    Word p1;
    Word p2;
};
SectorPaths sector_paths(std::int64_t k);

struct Sector {
    Region cells;
    int rotation = 0;
};
// Cells enclosed once by p1 followed by p2 reversed, turned by rotation
// thirds of a full turn. Throws invalid_params.
Sector sector_cells(std::int64_t k, int rotation);

// All-bones tiling of the pentagonal benzel with one bone orientation per
// sector. Throws construction_failed if a sector line cannot be cut into
// bones.
Tiling construct_tiling(std::int64_t k);

}  // namespace tribone
