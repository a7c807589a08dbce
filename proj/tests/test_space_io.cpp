#include "doctest.h"
#include "test_support.hpp"

#include "orthofix/space_io.hpp"

using namespace orthofix;

namespace {
const char* five_point_json = R"({
  "points": ["0","1","2","3","4"],
  "metric": [["0","1","2","3","4"],["1","0","1","2","3"],["2","1","0","1","2"],
             ["3","2","1","0","1"],["4","3","2","1","0"]],
  "relation": [[0,0],[1,0],[0,2],[3,4],[3,0],[4,0]],
  "map": [0,0,1,0,2] })";
} // namespace

TEST_CASE("parses the five-point file")
{
    const auto f = parse_space_json(five_point_json);
    const auto ref = test::five_point();
    CHECK(f.space.labels() == ref.labels());
    CHECK(f.space.metric() == ref.metric());
    CHECK(f.space.relation() == ref.relation());
    REQUIRE(f.map.has_value());
    CHECK(*f.map == test::five_point_t());
}

TEST_CASE("round trip")
{
    const auto f = parse_space_json(five_point_json);
    const auto text = space_to_json(f.space, f.map);
    const auto g = parse_space_json(text);
    CHECK(g.space.metric() == f.space.metric());
    CHECK(g.space.relation() == f.space.relation());
    CHECK(g.map == f.map);
    CHECK(space_to_json(g.space, g.map) == text);

    const auto h = parse_space_json(R"({"points":["a","b"],"metric":[[0,"1/3"],["1/3",0]],"relation":[]})");
    CHECK(h.space.distance(0, 1) == Rat(1, 3));
    CHECK_FALSE(h.map.has_value());
    CHECK(parse_space_json(space_to_json(h.space, std::nullopt)).space.metric() == h.space.metric());
}

TEST_CASE("strict parsing")
{
    auto rejects = [](const std::string& text, const std::string& fragment) {
        CAPTURE(text);
        CHECK_THROWS_WITH_AS(parse_space_json(text), doctest::Contains(fragment.c_str()), InputError);
    };
    rejects(R"({"points":["a","b"],"metric":[[0,1],[1,0]],"relation":[],"extra":1})", "extra");
    rejects(R"({"points":["a","b"],"metric":[[0,1.5],[1.5,0]],"relation":[]})", "metric[0][1]");
    rejects(R"({"points":["a","b"],"metric":[[0,"x"],["1",0]],"relation":[]})", "metric[0][1]");
    rejects(R"({"points":["a","b"],"metric":[[0,1],[1,0]],"relation":[],"map":[0,7]})", "map[1]");
    rejects(R"({"points":["a","b"],"metric":[[0,1],[1,0]],"relation":[[0,5]]})", "relation");
    rejects(R"({"points":["a","b"],"metric":[[0,1],[1]],"relation":[]})", "metric");
    rejects(R"({"points":["a","b","c"],"metric":[[0,1,5],[1,0,1],[5,1,0]],"relation":[]})", "triangle");
    rejects(R"({"points":["a","b"],"metric":[[0,1],[2,0]],"relation":[]})", "symmetry");
    rejects(R"({"metric":[[0]],"relation":[]})", "points");
    rejects("not json", "");
    CHECK_THROWS_AS(parse_space_file("/nonexistent/space.json"), InputError);
}
