#pragma once

#include <optional>
#include <string>

#include "tribone/region.hpp"
#include "tribone/tiling.hpp"

namespace tribone {

struct Palette {
    std::string cell_fill = "#f4efe1";
    std::string cell_stroke = "#b9b2a0";
    std::string bone_fill[3] = {"#8fb8de", "#e5a36f", "#9fcf8f"};
    std::string stone_r_fill = "#d96c6c";
    std::string stone_l_fill = "#8a79c9";
    std::string tile_stroke = "#222222";
    std::string boundary_stroke = "#1b4f8a";
    std::string shadow_stroke = "#c0392b";
    std::string hexagon_stroke = "#777777";
};

struct RenderSpec {
    double unit = 20.0;  // edge length in output units
    Palette palette;
    bool cells = true;
    bool tiling = true;
    bool boundary = true;
    bool shadow = true;
    bool hexagon = true;
};

struct Scene {
    std::optional<Region> region;
    std::optional<Tiling> tiling;
    std::optional<Word> boundary;
    std::optional<Word> shadow;
    std::optional<BenzelParams> hexagon;
};

// Screen position of x + y*w for edge length `unit`: (x - y/2, -y*sqrt(3)/2).
std::pair<double, double> embed(Point p, double unit);

// Deterministic SVG. Cells are <polygon class="cell">, tiles
// <polygon class="tile ...">, words <polyline class="boundary-word"> and
// <polyline class="shadow-word">, the bounding hexagon
// <polygon class="bounding-hexagon">.
std::string render_svg(const Scene& scene, const RenderSpec& style = {});

}  // namespace tribone
