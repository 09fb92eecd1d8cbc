#include "doctest.h"

#include "gitstab/io.hpp"

using namespace gitstab;

TEST_CASE("instance parsing")
{
    Json j = Json::parse(R"({"N": 1, "field": {"kind": "gfp", "p": 5}, "T": [[1, "1/2"], [0, 1]],
                            "points": [[1, 0]], "sheaf": {"q": 2}, "mode": "SEARCH"})");
    Instance in = parse_instance(j);
    CHECK(in.map.field() == Field::prime(5));
    CHECK(in.map.T.matrix()(0, 1).residue() == 3);
    CHECK(in.sheaf.q == 2);
    CHECK(in.sheaf.m == std::vector<int>{1});
    CHECK(in.mode == Mode::Search);
}

TEST_CASE("malformed instances are input errors")
{
    CHECK_THROWS_AS(parse_instance(Json::parse(R"({"N": 1})")), InputError);
    CHECK_THROWS_AS(parse_instance(Json::parse(R"({"N": 1, "T": [[1, 0]], "points": [[1, 0]]})")), InputError);
    CHECK_THROWS_AS(parse_instance(Json::parse(R"({"N": 1, "T": [[1, 0], [0, 1]], "points": [[0, 0]]})")),
                    InputError);
    CHECK_THROWS_AS(
        parse_instance(Json::parse(R"({"N": 1, "field": {"kind": "gfp", "p": 4}, "T": [[1, 0], [0, 1]], "points": [[1, 0]]})")),
        InputError);
    CHECK_THROWS_AS(parse_instance(Json::parse(R"({"N": 1, "T": [[1, 0], [0, 1]], "points": [[1, 0]],
                                                  "sheaf": {"m": [1, 1]}})")),
                    InputError);
    CHECK_THROWS_AS(parse_instance(Json::parse(R"({"N": 1, "T": [[1, 0], [0, 1]], "points": [[1, 0.5]]})")),
                    InputError);
    CHECK_THROWS_AS(load_instance("/nonexistent.json"), InputError);
}

TEST_CASE("verdict JSON round-trips through witness re-verification")
{
    Json j = Json::parse(R"({"N": 2, "field": {"kind": "gfp", "p": 3}, "T": [[1, 0, 0], [0, 1, 0], [0, 0, 2]],
                            "points": [[1, 0, 0], [1, 1, 0], [1, 2, 0]], "sheaf": {"q": 1}})");
    Instance in = parse_instance(j);
    StabilityVerdict v = check_stability(in.map, in.sheaf, Mode::Exact);
    Json out = to_json(v);
    CHECK(out["status"] == "UNSTABLE");
    Flag f = parse_flag(in.map.field(), out["witness"]["flag"], 3);
    CHECK(f == v.witness->flag);
    CHECK(to_string(classify_flag(in.map.T.matrix(), f)) == out["witness"]["type"]);
    CHECK(to_string(omega(in.map.points, in.sheaf.m, f)) == out["witness"]["omega"]);
    // byte-identical on repetition
    CHECK(to_json(check_stability(in.map, in.sheaf, Mode::Exact)).dump() == out.dump());
}

TEST_CASE("polyhedron JSON")
{
    Json p = to_json(corner_facets(Support::from_entries(2, {{1, 2}, {2, 3}})));
    CHECK(p["facets"].size() == 3);
    CHECK(p["facets"][2]["kind"] == "F-2B");
    CHECK(p["vertices"][0] == Json::array({"1", "0"}));
}
