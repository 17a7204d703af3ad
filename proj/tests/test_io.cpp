#include "mgcolor/io.hpp"

#include "doctest.h"
#include "test_graphs.hpp"

using namespace mgcolor;
using namespace mgtest;

TEST_CASE("graph parsing") {
    Multigraph g = parse_graph("mgraph 2\ne 0 1 2\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.endpoints(0) == std::pair<Vertex, Vertex>{0, 1});
    CHECK(g.endpoints(1) == std::pair<Vertex, Vertex>{0, 1});

    Multigraph ft = parse_graph(
        "# fat triangle\nmgraph 3\ne 0 1 2\ne 0 2 2\ne 1 2 2\n");
    CHECK(ft == fat_triangle(2));

    CHECK_THROWS_AS(parse_graph("mgraph 2\ne 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("mgraph 2\ne 0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("mgraph 2\nx 0 1\n"), ParseError);

    try {
        parse_graph("mgraph 3\ne 0 1\ne 2 2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& ex) {
        CHECK(ex.line() == 3);
    }
}

TEST_CASE("graph round trip preserves edges and id order") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 30; ++round) {
        Multigraph g = random_multigraph(rng, 8, 16, 3);
        Multigraph back = parse_graph(serialize_graph(g));
        CHECK(back.vertex_count() == g.vertex_count());
        REQUIRE(back.edge_count() == g.edge_count());
        auto ga = g.edge_ids();
        auto gb = back.edge_ids();
        for (size_t i = 0; i < ga.size(); ++i)
            CHECK(g.endpoints(ga[i]) == back.endpoints(gb[i]));
    }
}

TEST_CASE("precoloring parsing") {
    Multigraph g = fat_triangle(2);
    Precoloring p = parse_precoloring("p 0 1\n", g);
    CHECK(p.matching == EdgeSet{0});
    CHECK(p.color_of(0) == 1);

    CHECK_THROWS_AS(parse_precoloring("p 99 1\n", g), ParseError);
    CHECK_THROWS_AS(parse_precoloring("p 0 7\n", g), InputError);  // palette 6
    CHECK_THROWS_AS(parse_precoloring("p 0 1\np 0 2\n", g), ParseError);
    // two adjacent edges are not a distance-3 matching
    CHECK_THROWS_AS(parse_precoloring("p 0 1\np 2 2\n", g), InputError);
}

TEST_CASE("coloring file round trip") {
    Multigraph g = fat_triangle(2);
    PartialEdgeColoring c(g, 6);
    int col = 1;
    for (EdgeId e : g.edge_ids()) c.assign(e, col++);
    std::string text = serialize_coloring(g, c);
    PartialEdgeColoring back = parse_coloring(text, g);
    for (EdgeId e : g.edge_ids()) CHECK(back.color(e) == c.color(e));
    CHECK(serialize_coloring(g, back) == text);
}

TEST_CASE("trace json round trip is deterministic") {
    Trace t;
    t.push_back({"init", "", {}, {}, 0, 1});
    t.push_back({"assign", "", {0, 1}, {2, 3}, -1, -1});
    t.push_back({"case-begin", "Op-I", {4, 0}, {}, 1, 1});
    std::string json = trace_to_json(t);
    Trace back = trace_from_json(json);
    CHECK(back == t);
    CHECK(trace_to_json(back) == json);
    CHECK(json.find("\"op\"") < json.find("\"case\""));
    CHECK(json.find("\"case\"") < json.find("\"edges\""));
}

TEST_CASE("trace replay applies assignments in order") {
    Multigraph g = path(3);
    Trace t;
    t.push_back({"assign", "", {0, 1}, {1, 2}, -1, -1});
    t.push_back({"assign", "", {0}, {2}, -1, -1});
    t.push_back({"assign", "", {0}, {0}, -1, -1});  // uncolor
    auto col = replay_trace(g, t);
    CHECK_FALSE(col.is_colored(0));
    CHECK(col.color(1) == 2);
}
