#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tribone/lattice.hpp"

namespace tribone {

// Validated benzel parameters: 2 <= a <= 2b and 2 <= b <= 2a.
class BenzelParams {
public:
    // Throws invalid_params.
    static BenzelParams make(std::int64_t a, std::int64_t b);
    static bool valid(std::int64_t a, std::int64_t b) { return 2 <= a && a <= 2 * b && 2 <= b && b <= 2 * a; }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    // a + b mod 3 folded onto {0, 1, -1}.
    int benzel_class() const { return class_; }
    // Repeat counts of the boundary word.
    std::int64_t s() const { return s_; }
    std::int64_t t() const { return t_; }

    friend bool operator==(const BenzelParams&, const BenzelParams&) = default;

private:
    BenzelParams(std::int64_t a, std::int64_t b);
    std::int64_t a_, b_;
    int class_;
    std::int64_t s_, t_;
};

// A finite set of hexagonal cells, stored as sorted unique cell centers.
class Region {
public:
    Region() = default;
    // Throws not_a_cell_center if any point is not of class -1. Duplicates are merged.
    explicit Region(std::vector<Point> cells);

    std::span<const Point> cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(Point p) const;
    // Position of p in cells(), if present.
    std::optional<std::size_t> index_of(Point p) const;

    Region rotated(int times) const;
    Region without(std::span<const Point> removed) const;

    friend bool operator==(const Region&, const Region&) = default;

private:
    std::vector<Point> cells_;
};

// The six corners of the cell at `center`, counterclockwise from center + 1.
std::array<Point, 6> cell_corners(Point center);
// The six neighbouring cell centers.
std::array<Point, 6> cell_neighbours(Point center);

// Vertices a*w+b, -a*w^2-b, a*w^2+b*w, -a-b*w, a+b*w^2, -a*w-b*w^2 in
// counterclockwise order.
std::array<Point, 6> bounding_hexagon(const BenzelParams& p);
// The rightmost corner, -a*w - b*w^2 = (b, b-a).
Point rightmost_corner(const BenzelParams& p);

Region benzel(const BenzelParams& p);
// Honeycomb triangle with rows of 1..n cells; triangle(3) == benzel(3,3).
Region triangle(std::int64_t n);

// Counterclockwise boundary of a simply connected region. Without an
// explicit basepoint, starts at the lexicographically smallest class-0
// boundary vertex. Throws empty_region, not_simply_connected, or
// invalid_params (basepoint not on the boundary).
Word trace_boundary(const Region& r, std::optional<Point> basepoint = std::nullopt);

// Closed-form boundary word for the benzel's class, including the corner
// spurs for classes 1 and -1, read from the class's canonical basepoint.
Word boundary_word_closed_form(const BenzelParams& p);

struct Spur {
    // Steps position and position+1 (cyclically) traverse the same edge.
    std::size_t position;
    friend bool operator==(const Spur&, const Spur&) = default;
};

std::vector<Spur> find_spurs(const Word& w);
// True when removing every spur pair leaves a spur-free cyclic word.
bool spurs_isolated(const Word& w);
// Removes every spur pair once. A spur wrapping around the basepoint moves
// the basepoint to the spur's root. Throws non_isolated_spur.
Word despur(const Word& w);
// Full cyclic free reduction: repeatedly cancels adjacent inverse steps.
// Needed for degenerate benzels (b = 2a or a = 2b) whose closed-form words
// contain nested back-and-forth excursions.
Word free_reduce(const Word& w);

// Maps each step of w to its index in despur(w), or nullopt for spur steps.
std::vector<std::optional<std::size_t>> despur_index_map(const Word& w);

}  // namespace tribone
