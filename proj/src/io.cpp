#include "tribone/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace tribone {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

void only_keys(const json& j, std::initializer_list<std::string_view> allowed, std::string_view what) {
    if (!j.is_object()) bad(std::string(what) + " must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            bad("unknown key '" + key + "' in " + std::string(what));
        }
    }
    for (auto key : allowed) {
        if (!j.contains(key)) bad(std::string(what) + " is missing '" + std::string(key) + "'");
    }
}

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        bad("point must be an [x, y] pair of integers");
    }
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

json point_json(Point p) { return json::array({p.x, p.y}); }

}  // namespace

json to_json(const Region& r) {
    json cells = json::array();
    for (auto c : r.cells()) cells.push_back(point_json(c));
    return {{"cells", std::move(cells)}};
}

json to_json(const Placement& p) { return {{"kind", std::string(to_string(p.kind))}, {"anchor", point_json(p.anchor)}}; }

json to_json(const Tiling& t) {
    json tiles = json::array();
    for (const auto& p : t.placements) tiles.push_back(to_json(p));
    return {{"region", to_json(t.region)}, {"tiles", std::move(tiles)}};
}

json to_json(const Word& w) { return {{"base", point_json(w.base)}, {"steps", format_steps(w.steps)}}; }

json error_json(const Error& e) {
    return {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
}

Region region_from_json(const json& j) {
    only_keys(j, {"cells"}, "region");
    if (!j["cells"].is_array()) bad("region 'cells' must be an array");
    std::vector<Point> cells;
    for (const auto& c : j["cells"]) cells.push_back(point_from_json(c));
    return Region(std::move(cells));
}

Tiling tiling_from_json(const json& j) {
    only_keys(j, {"region", "tiles"}, "tiling");
    auto region = region_from_json(j["region"]);
    if (!j["tiles"].is_array()) bad("tiling 'tiles' must be an array");
    std::vector<Placement> tiles;
    for (const auto& t : j["tiles"]) {
        only_keys(t, {"kind", "anchor"}, "tile");
        if (!t["kind"].is_string()) bad("tile 'kind' must be a string");
        auto kind = parse_tile_kind(t["kind"].get<std::string>());
        if (!kind) bad("unknown tile kind '" + t["kind"].get<std::string>() + "'");
        tiles.push_back({*kind, point_from_json(t["anchor"])});
    }
    return Tiling(std::move(region), std::move(tiles));
}

Word word_from_json(const json& j) {
    only_keys(j, {"base", "steps"}, "word");
    if (!j["steps"].is_string()) bad("word 'steps' must be a string");
    return make_word(j["steps"].get<std::string>(), point_from_json(j["base"]));
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) bad("cannot write '" + path + "'");
    out << contents;
}

}  // namespace tribone
