#pragma once

// Exact arithmetic on the Eisenstein lattice Z + Z*w, w = exp(2*pi*i/3).
//
// A point (x, y) denotes x + y*w. Vertices of the hexagon graph are the
// points of class 0 and 1; points of class -1 are cell centers. From a
// class-0 vertex the three edges are a, b, c; from a class-1 vertex they
// are a', b', c'.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tribone {

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
    friend constexpr Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
    friend constexpr Point operator-(Point p) { return {-p.x, -p.y}; }
    friend constexpr Point operator*(std::int64_t k, Point p) { return {k * p.x, k * p.y}; }
    Point& operator+=(Point q) {
        x += q.x;
        y += q.y;
        return *this;
    }
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

std::string to_string(Point p);

struct PointHash {
    std::size_t operator()(Point p) const noexcept {
        auto h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(p.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

enum class Sublattice : std::int8_t { minus_one = -1, zero = 0, one = 1 };

constexpr Sublattice class_of(Point p) {
    auto r = (p.x + p.y) % 3;
    if (r < 0) r += 3;
    return r == 0 ? Sublattice::zero : (r == 1 ? Sublattice::one : Sublattice::minus_one);
}

constexpr bool is_vertex(Point p) { return class_of(p) != Sublattice::minus_one; }
constexpr bool is_cell_center(Point p) { return class_of(p) == Sublattice::minus_one; }

// Multiplication by w.
constexpr Point rotate120(Point p) { return {-p.y, p.x - p.y}; }
constexpr Point rotate120(Point p, int times) {
    times %= 3;
    if (times < 0) times += 3;
    for (int i = 0; i < times; ++i) p = rotate120(p);
    return p;
}

// Cross product in (1, w) coordinates: a x b = b x c = c x a = +1. A positive
// multiple of the Cartesian cross product, so signs agree.
constexpr std::int64_t cross(Point v, Point w) { return v.x * w.y - w.x * v.y; }

enum class Step : std::uint8_t { a, b, c, a_prime, b_prime, c_prime };

inline constexpr std::array<Step, 6> all_steps{Step::a, Step::b, Step::c,
                                               Step::a_prime, Step::b_prime, Step::c_prime};

constexpr Point vector_of(Step s) {
    switch (s) {
        case Step::a: return {1, 0};
        case Step::b: return {0, 1};
        case Step::c: return {-1, -1};
        case Step::a_prime: return {-1, 0};
        case Step::b_prime: return {0, -1};
        case Step::c_prime: return {1, 1};
    }
    return {};
}

constexpr bool is_primed(Step s) { return static_cast<int>(s) >= 3; }
// 0, 1, 2 for the axis a, b, c regardless of sign.
constexpr int letter_of(Step s) { return static_cast<int>(s) % 3; }
constexpr Step reverse(Step s) { return static_cast<Step>((static_cast<int>(s) + 3) % 6); }
// Rotation by 120 degrees maps a -> b -> c -> a and preserves priming.
constexpr Step rotate120(Step s) {
    auto i = static_cast<int>(s);
    return static_cast<Step>((i / 3) * 3 + (i % 3 + 1) % 3);
}

std::optional<Step> step_from_vector(Point v);
std::string_view to_string(Step s);
std::optional<Step> parse_step(std::string_view token);

// +1 if going s then t turns left, -1 if it turns right, 0 otherwise.
constexpr int turn(Step s, Step t) {
    auto c = cross(vector_of(s), vector_of(t));
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

// A lattice path: steps walked from a basepoint. Closed words are read
// cyclically (step n is followed by step 1).
struct Word {
    std::vector<Step> steps;
    Point base{};
    bool cyclic = true;

    std::size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }

    Point displacement() const;
    Point endpoint() const { return base + displacement(); }
    bool is_closed() const { return displacement() == Point{}; }
    // base, base+v1, ..., base+v1+...+vn (n+1 points).
    std::vector<Point> vertices() const;

    friend bool operator==(const Word&, const Word&) = default;
};

Word make_word(std::string_view tokens, Point base = {});
// "base=x,y a b' ..." form, also accepted without the base token.
Word parse_word(std::string_view text);
std::string format_steps(std::span<const Step> steps);
std::string format_word(const Word& w);

Word rotate_word(const Word& w, int times);
// Same closed path read starting from its k-th vertex.
Word cyclic_shift(const Word& w, std::size_t k);
// Closed path traversed backwards.
Word reversed(const Word& w);
Word concat(const Word& first, const Word& second);

// True when every step leaves from a vertex (class 0 or 1), i.e. the walk
// stays on the hexagon graph.
bool on_hexagon_graph(const Word& w);

// Sum over i<j of v_i x v_j, divided by 6. Throws not_closed or
// non_integral_area.
std::int64_t signed_area(const Word& w);
std::int64_t area_double_sum(std::span<const Step> steps);

// Winding number of the closed vertex path around a cell center.
std::int64_t winding_number(const Word& w, Point cell);

// True if u is some cyclic rotation of v (as step sequences).
bool cyclically_equal(std::span<const Step> u, std::span<const Step> v);

}  // namespace tribone

template <>
struct std::hash<tribone::Point> : tribone::PointHash {};
