#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tribone/region.hpp"

namespace tribone {

// Bones lie along 1-w, w-w^2 and w^2-1; stones are the two chiralities of
// three mutually adjacent cells.
enum class TileKind : std::uint8_t { bone_ab, bone_bc, bone_ca, stone_r, stone_l };

inline constexpr std::array<TileKind, 5> all_tile_kinds{TileKind::bone_ab, TileKind::bone_bc, TileKind::bone_ca,
                                                        TileKind::stone_r, TileKind::stone_l};

std::string_view to_string(TileKind k);
std::optional<TileKind> parse_tile_kind(std::string_view name);
constexpr bool is_bone(TileKind k) { return k <= TileKind::bone_ca; }
// Offsets of the covered cells from the anchor, which is the
// lexicographically smallest one.
std::array<Point, 3> tile_offsets(TileKind k);
// One-third turn of a tile kind: AB -> BC -> CA, stones keep their chirality.
TileKind rotate120(TileKind k);

class TileSet {
public:
    constexpr TileSet() = default;
    static constexpr TileSet bones() { return TileSet(0b00111); }
    static constexpr TileSet stones() { return TileSet(0b11000); }
    static constexpr TileSet stones_and_bones() { return TileSet(0b11111); }
    static constexpr TileSet only(TileKind k) { return TileSet(1u << static_cast<int>(k)); }
    // "bones", "stones" or "stones+bones". Throws parse_error.
    static TileSet parse(std::string_view name);

    constexpr bool contains(TileKind k) const { return (bits_ >> static_cast<int>(k)) & 1u; }
    std::string name() const;
    friend constexpr bool operator==(TileSet, TileSet) = default;

private:
    constexpr explicit TileSet(unsigned bits) : bits_(bits) {}
    unsigned bits_ = 0;
};

struct Placement {
    TileKind kind;
    Point anchor;
    friend auto operator<=>(const Placement&, const Placement&) = default;
};

std::array<Point, 3> cells_of(const Placement& p);
std::string to_string(const Placement& p);
// "kind,x,y", e.g. "boneAB,-1,0". Throws parse_error.
Placement parse_placement(std::string_view text);

// All placements of the given kinds inside r, ordered by (kind, anchor).
std::vector<Placement> placements(const Region& r, TileSet tiles);

struct Tiling {
    Region region;
    std::vector<Placement> placements;  // kept sorted by (kind, anchor)

    Tiling() = default;
    Tiling(Region r, std::vector<Placement> p);
    friend bool operator==(const Tiling&, const Tiling&) = default;
};

struct Validation {
    bool ok = true;
    std::string message;  // first violation, empty when ok
    explicit operator bool() const { return ok; }
};

Validation validate(const Tiling& t);

// 3 * (right stones - left stones). Throws invalid_tiling.
std::int64_t stone_balance(const Tiling& t);

struct OrientationHistogram {
    std::int64_t bone_ab = 0, bone_bc = 0, bone_ca = 0, stone_r = 0, stone_l = 0;
    friend bool operator==(const OrientationHistogram&, const OrientationHistogram&) = default;
};
// Throws invalid_tiling.
OrientationHistogram orientation_histogram(const Tiling& t);

using TilingCount = boost::multiprecision::cpp_int;

struct CountOptions {
    // Cap on live frontier-state memory. 0 reads TRIBONE_MEMO_LIMIT_MB, falling
    // back to default_memo_limit_mb.
    std::size_t memo_limit_mb = 0;
    unsigned threads = 1;
    // Skip the fixed-width passes and count with arbitrary precision at once.
    bool force_wide = false;
    // Wall-clock budget in seconds, 0 for none; exceeding it is a resource limit.
    double time_limit_seconds = 0;
    static constexpr std::size_t default_memo_limit_mb = 2048;
};

struct CountStats {
    std::size_t cells = 0;
    std::size_t window = 0;        // bits of lookahead needed
    std::size_t peak_states = 0;   // largest number of live frontier states
    std::size_t peak_bytes = 0;
    bool wide_counts = false;      // fell back to arbitrary precision
};

// Exact number of tilings of r by the given kinds. Throws
// Error(resource_limit) when the frontier would exceed the memory cap or the
// time budget, or the lookahead window exceeds 128 cells.
TilingCount count_tilings(const Region& r, TileSet tiles, const CountOptions& options = {},
                          CountStats* stats = nullptr);

// Number of tilings that contain p. Throws invalid_placement when p is not a
// placement of the tileset inside r.
TilingCount placement_frequency(const Region& r, TileSet tiles, const Placement& p,
                                const CountOptions& options = {});

// Calls emit for each tiling in a deterministic order until it returns false
// or `limit` tilings have been produced. Returns the number emitted.
std::size_t enumerate_tilings(const Region& r, TileSet tiles, std::optional<std::size_t> limit,
                              const std::function<bool(const Tiling&)>& emit);
std::vector<Tiling> all_tilings(const Region& r, TileSet tiles, std::optional<std::size_t> limit = std::nullopt);

// Sweep key used by the counting engine; cells are processed in increasing
// (2x - y, y) order, i.e. left to right in the plane.
std::pair<std::int64_t, std::int64_t> sweep_key(Point cell);

}  // namespace tribone
