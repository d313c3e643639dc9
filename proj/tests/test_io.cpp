#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acypart/construct.hpp"
#include "acypart/io.hpp"
#include "test_util.hpp"

using namespace acypart;

TEST_CASE("parse json") {
    const Hypergraph h =
        parse_hypergraph_json(R"({"n":6,"r":3,"edges":[[1,2,6],[1,3,5],[2,3,4]]})");
    CHECK(h == make_hypergraph(6, 3, testutil::triangle_cycle_edges()));

    // unsorted edges and reordered fields are fine
    const Hypergraph h2 =
        parse_hypergraph_json(R"({"edges":[[6,2,1]],"r":3,"n":6})");
    CHECK(h2.edges == std::vector<Hyperedge>{{1, 2, 6}});
}

TEST_CASE("parse json errors") {
    CHECK_THROWS_AS(parse_hypergraph_json("{"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_json("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_json(R"({"n":"6","r":3,"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_json(R"({"n":6,"r":3})"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_json(R"({"n":6,"r":3,"edges":[[1,1,2]]})"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_json(R"({"n":6,"r":3,"edges":[[1,2]]})"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_json(R"({"n":6,"r":3,"edges":[[1,2,7]]})"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_json(R"({"n":6,"r":3,"edges":[[1,2,3.5]]})"), ParseError);
}

TEST_CASE("parse txt") {
    CHECK(parse_hypergraph_txt("4 3\n") == make_hypergraph(4, 3, {}));
    CHECK(parse_hypergraph_txt("4 3") == make_hypergraph(4, 3, {}));
    const Hypergraph h = parse_hypergraph_txt("6 3\n1 2 6\n1 3 5\n2 3 4\n");
    CHECK(h == make_hypergraph(6, 3, testutil::triangle_cycle_edges()));
    // blank lines are skipped
    CHECK(parse_hypergraph_txt("\n6 3\n\n1 2 6\n").edges.size() == 1);
}

TEST_CASE("parse txt errors") {
    CHECK_THROWS_AS(parse_hypergraph_txt(""), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_txt("6\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_txt("6 3\n1 2 x\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_txt("6 3\n1 1 2\n"), ParseError);
    CHECK_THROWS_WITH_AS(parse_hypergraph_txt("6 3\n1 2 3\n4 5 oops\n"),
                         doctest::Contains("line 3"), ParseError);
}

TEST_CASE("format sniffing") {
    CHECK(parse_hypergraph(R"(  {"n":4,"r":3,"edges":[]})").n == 4);
    CHECK(parse_hypergraph("4 3\n").n == 4);
    CHECK_THROWS_AS(parse_hypergraph("   \n "), ParseError);
}

TEST_CASE("golden serialization of the (3,2) first part") {
    CHECK(serialize_json(build_omega(1, 3, 2)) == testutil::omega132_golden_json());
    CHECK(serialize_txt(make_hypergraph(4, 3, {{1, 2, 3}})) == "4 3\n1 2 3\n");
    CHECK(serialize_txt(make_hypergraph(4, 3, {})) == "4 3\n");
}

TEST_CASE("round trips") {
    std::mt19937 rng(53);
    std::vector<Hypergraph> instances = {build_omega(1, 3, 2), make_hypergraph(4, 3, {}),
                                         make_hypergraph(6, 3, testutil::triangle_cycle_edges()),
                                         build_omega(1, 1, 3)};
    for (int trial = 0; trial < 20; ++trial)
        instances.push_back(testutil::random_sub_hypergraph(rng, 8, 4));
    for (const auto& h : instances) {
        CHECK(parse_hypergraph(serialize_json(h)) == h);
        CHECK(parse_hypergraph(serialize_txt(h)) == h);
    }
}
