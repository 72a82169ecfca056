#include "tribone/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace tribone {

std::pair<double, double> embed(Point p, double unit) {
    return {unit * (static_cast<double>(p.x) - static_cast<double>(p.y) / 2.0),
            -unit * static_cast<double>(p.y) * std::sqrt(3.0) / 2.0};
}

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

class Canvas {
public:
    explicit Canvas(double unit) : unit_(unit) {}

    std::string points(const std::vector<Point>& pts) {
        std::string out;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            auto [x, y] = embed(pts[i], unit_);
            grow(x, y);
            if (i) out += ' ';
            out += num(x) + "," + num(y);
        }
        return out;
    }

    void add(const std::string& element) { body_ += "  " + element + "\n"; }

    std::string finish() const {
        const double margin = unit_;
        double x0 = 0, y0 = 0, w = 0, h = 0;
        if (xmin_ <= xmax_) {
            x0 = xmin_ - margin;
            y0 = ymin_ - margin;
            w = xmax_ - xmin_ + 2 * margin;
            h = ymax_ - ymin_ + 2 * margin;
        }
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(x0) + " " + num(y0) + " " + num(w) + " " +
               num(h) + "\" width=\"" + num(w) + "\" height=\"" + num(h) + "\">\n";
        out += body_;
        out += "</svg>\n";
        return out;
    }

private:
    void grow(double x, double y) {
        xmin_ = std::min(xmin_, x);
        xmax_ = std::max(xmax_, x);
        ymin_ = std::min(ymin_, y);
        ymax_ = std::max(ymax_, y);
    }

    double unit_;
    double xmin_ = std::numeric_limits<double>::infinity(), xmax_ = -std::numeric_limits<double>::infinity();
    double ymin_ = std::numeric_limits<double>::infinity(), ymax_ = -std::numeric_limits<double>::infinity();
    std::string body_;
};

std::string tile_fill(const Palette& pal, TileKind k) {
    switch (k) {
        case TileKind::bone_ab: return pal.bone_fill[0];
        case TileKind::bone_bc: return pal.bone_fill[1];
        case TileKind::bone_ca: return pal.bone_fill[2];
        case TileKind::stone_r: return pal.stone_r_fill;
        case TileKind::stone_l: return pal.stone_l_fill;
    }
    return "none";
}

std::string polyline(Canvas& c, const Word& w, const std::string& cls, const std::string& stroke, double width) {
    return "<polyline class=\"" + cls + "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) +
           "\" stroke-linejoin=\"round\" points=\"" + c.points(w.vertices()) + "\"/>";
}

}  // namespace

std::string render_svg(const Scene& scene, const RenderSpec& style) {
    Canvas canvas(style.unit);
    const auto& pal = style.palette;
    const double thin = style.unit / 20.0;

    if (style.hexagon && scene.hexagon) {
        const auto h = bounding_hexagon(*scene.hexagon);
        canvas.add("<polygon class=\"bounding-hexagon\" fill=\"none\" stroke=\"" + pal.hexagon_stroke +
                   "\" stroke-width=\"" + num(thin) + "\" stroke-dasharray=\"" + num(style.unit / 4) + "\" points=\"" +
                   canvas.points({h.begin(), h.end()}) + "\"/>");
    }
    std::optional<Region> region = scene.region;
    if (!region && scene.tiling) region = scene.tiling->region;
    if (style.cells && region) {
        for (auto c : region->cells()) {
            const auto corners = cell_corners(c);
            canvas.add("<polygon class=\"cell\" fill=\"" + pal.cell_fill + "\" stroke=\"" + pal.cell_stroke +
                       "\" stroke-width=\"" + num(thin) + "\" points=\"" +
                       canvas.points({corners.begin(), corners.end()}) + "\"/>");
        }
    }
    if (style.tiling && scene.tiling) {
        for (const auto& p : scene.tiling->placements) {
            const auto cells = cells_of(p);
            auto outline = trace_boundary(Region({cells.begin(), cells.end()})).vertices();
            outline.pop_back();
            canvas.add("<polygon class=\"tile " + std::string(to_string(p.kind)) + "\" fill=\"" +
                       tile_fill(pal, p.kind) + "\" fill-opacity=\"0.85\" stroke=\"" + pal.tile_stroke +
                       "\" stroke-width=\"" + num(2 * thin) + "\" points=\"" + canvas.points(outline) + "\"/>");
        }
    }
    if (style.boundary && scene.boundary) {
        canvas.add(polyline(canvas, *scene.boundary, "boundary-word", pal.boundary_stroke, 3 * thin));
    }
    if (style.shadow && scene.shadow) {
        canvas.add(polyline(canvas, *scene.shadow, "shadow-word", pal.shadow_stroke, 3 * thin));
    }
    return canvas.finish();
}

}  // namespace tribone
