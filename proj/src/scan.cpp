#include "tribone/scan.hpp"

#include "tribone/shadow.hpp"

namespace tribone {

std::vector<ScanRow> scan(const ScanOptions& options) {
    std::vector<ScanRow> rows;
    for (std::int64_t a = 2; a <= options.max; ++a) {
        for (std::int64_t b = 2; b <= options.max; ++b) {
            if (!BenzelParams::valid(a, b)) continue;
            const auto p = BenzelParams::make(a, b);
            ScanRow row;
            row.a = a;
            row.b = b;
            row.benzel_class = p.benzel_class();
            row.cell_count = area_formula(p);
            row.invariant = cl_invariant_formula(p).unrescaled;
            row.pentagonal_k = is_pentagonal_pair(a, b);
            if (options.search && row.cell_count % 3 == 0 && row.cell_count <= options.search_cap) {
                try {
                    row.bone_tileable = count_tilings(benzel(p), TileSet::bones(), options.count) > 0;
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::resource_limit) throw;
                }
            }
            rows.push_back(row);
        }
    }
    return rows;
}

json to_json(const ScanRow& row) {
    json j{{"a", row.a}, {"b", row.b}, {"class", row.benzel_class}, {"cellCount", row.cell_count},
           {"invariantI", row.invariant}};
    j["pentagonalK"] = row.pentagonal_k ? json(*row.pentagonal_k) : json(nullptr);
    j["boneTileable"] = row.bone_tileable ? json(*row.bone_tileable) : json(nullptr);
    return j;
}

}  // namespace tribone
