#pragma once

#include <string>

#include "json.hpp"

#include "tribone/error.hpp"
#include "tribone/region.hpp"
#include "tribone/tiling.hpp"

namespace tribone {

using json = nlohmann::ordered_json;

// {"cells": [[x, y], ...]}, cells sorted lexicographically.
json to_json(const Region& r);
// {"region": {...}, "tiles": [{"kind": "boneAB", "anchor": [x, y]}, ...]}
json to_json(const Tiling& t);
json to_json(const Placement& p);
// {"base": [x, y], "steps": "b a' c ..."}
json to_json(const Word& w);
json error_json(const Error& e);

// These reject unknown keys, wrong types and non-centre cells with
// parse_error (or not_a_cell_center).
Region region_from_json(const json& j);
Tiling tiling_from_json(const json& j);
Word word_from_json(const json& j);

json parse_json(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace tribone
