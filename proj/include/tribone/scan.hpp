#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tribone/io.hpp"
#include "tribone/tiling.hpp"

namespace tribone {

struct ScanRow {
    std::int64_t a = 0, b = 0;
    int benzel_class = 0;
    std::int64_t cell_count = 0;
    std::int64_t invariant = 0;  // unrescaled
    std::optional<std::int64_t> pentagonal_k;
    std::optional<bool> bone_tileable;  // only when searched
};

struct ScanOptions {
    std::int64_t max = 12;
    bool search = false;
    // Search only benzels with at most this many cells.
    std::int64_t search_cap = 400;
    CountOptions count;
};

// One row per valid (a, b) with a, b <= max, ordered by a then b. With
// search, rows whose cell count is a multiple of 3 and within the cap get
// bone_tileable from an exact count; a count that hits the resource limit
// leaves it unset.
std::vector<ScanRow> scan(const ScanOptions& options);

json to_json(const ScanRow& row);

}  // namespace tribone
