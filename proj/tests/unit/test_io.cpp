#include "doctest.h"
#include "tribone/io.hpp"
#include "tribone/pentagonal.hpp"

using namespace tribone;

TEST_CASE("region json") {
    const auto r = benzel(BenzelParams::make(3, 3));
    const auto j = to_json(r);
    CHECK(j.dump() == R"({"cells":[[-2,-2],[-1,0],[0,-1],[0,2],[1,1],[2,0]]})");
    CHECK(region_from_json(j) == r);
    CHECK(region_from_json(parse_json(R"({"cells":[[2,0],[-1,0]]})")).size() == 2);
    CHECK_THROWS_AS(region_from_json(parse_json(R"({"cells":[],"extra":1})")), Error);
    CHECK_THROWS_AS(region_from_json(parse_json(R"({"cells":[[0,0]]})")), Error);
    CHECK_THROWS_AS(region_from_json(parse_json(R"({"cells":[[1]]})")), Error);
    CHECK_THROWS_AS(parse_json("{"), Error);
}

TEST_CASE("tiling json") {
    const auto t = construct_tiling(2);
    const auto j = to_json(t);
    CHECK(j["tiles"].size() == 9);
    CHECK(j["tiles"][0]["kind"] == "boneAB");
    CHECK(tiling_from_json(parse_json(j.dump())) == t);
    auto bad = j;
    bad["tiles"][0]["kind"] = "phone";
    CHECK_THROWS_AS(tiling_from_json(bad), Error);
    bad = j;
    bad["tiles"][0]["rotation"] = 1;
    CHECK_THROWS_AS(tiling_from_json(bad), Error);
}

TEST_CASE("word json and errors") {
    const auto w = make_word("b a' c b' a c'", {0, 0});
    CHECK(to_json(w).dump() == R"({"base":[0,0],"steps":"b a' c b' a c'"})");
    CHECK(word_from_json(to_json(w)) == w);
    const auto e = error_json(Error(ErrorCode::resource_limit, "too big"));
    CHECK(e["error"]["code"] == "resource-limit");
    CHECK(e["error"]["message"] == "too big");
}
