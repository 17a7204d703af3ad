#include "mgcolor/fans.hpp"

#include "doctest.h"
#include "mgcolor/oracle.hpp"
#include "test_graphs.hpp"

using namespace mgcolor;
using namespace mgtest;

namespace {

PartialEdgeColoring oracle_coloring(const Multigraph& g, int k) {
    auto col = brute_force_extension(g, Precoloring{}, k);
    REQUIRE(col.has_value());
    return *col;
}

}  // namespace

TEST_CASE("fan growth") {
    // nothing eligible: the fan is just the anchor
    Multigraph g(3);
    EdgeId e = g.add_edge(0, 1);
    g.add_edge(0, 2);
    PartialEdgeColoring c(g, 3);
    MultiFan lone = build_multifan(g, c, 0, e);
    CHECK(lone.entries.empty());
    CHECK(lone.anchor_target == 1);

    // an edge whose color is missing at y0 joins
    PartialEdgeColoring c2(g, 3);
    c2.assign(1, 1);  // (0,2) colored 1, missing at vertex 1
    MultiFan fan = build_multifan(g, c2, 0, e);
    REQUIRE(fan.entries.size() == 1);
    CHECK(fan.entries[0] == std::pair<EdgeId, Vertex>{1, 2});
}

TEST_CASE("fat triangle maximal fan reaches a saturated vertex") {
    // fat triangle, one (0,1)-edge uncolored, proper 5-coloring of the rest:
    // the maximal fan at 0 must contain vertex 2 with degree 4 and
    // multiplicity 2 towards the center (the Delta+mu-d(y)-e(x,y)+1 = 1
    // guarantee).
    Multigraph g = fat_triangle(2);
    Multigraph rest = g.minus_edge(0);
    auto col = oracle_coloring(rest, 5);
    MultiFan fan = build_multifan(g, col, 0, 0);
    bool found = false;
    for (Vertex z : fan.fan_vertices())
        if (z != 0 && z != 1 && g.degree(z) == 4 && g.multiplicity(0, z) == 2)
            found = true;
    CHECK(found);
}

TEST_CASE("fan with a forbidden color") {
    Multigraph g(4);
    EdgeId e = g.add_edge(0, 1);
    EdgeId f1 = g.add_edge(0, 2);
    EdgeId f2 = g.add_edge(0, 3);
    PartialEdgeColoring c(g, 4);
    c.assign(f1, 1);
    c.assign(f2, 2);
    MultiFan plain = build_multifan(g, c, 0, e);
    CHECK(plain.entries.size() == 2);
    MultiFan no1 = build_multifan(g, c, 0, e, 1);
    for (auto& [fe, fy] : no1.entries) CHECK(c.color(fe) != 1);
}

TEST_CASE("linear sequences") {
    Multigraph g(4);
    EdgeId e = g.add_edge(0, 1);
    EdgeId f = g.add_edge(0, 2);
    PartialEdgeColoring c(g, 3);
    c.assign(f, 1);  // 1 missing at vertex 1
    MultiFan fan = build_multifan(g, c, 0, e);

    LinearSequence s0 = linear_sequence_to(g, c, fan, 1);
    CHECK(s0.length() == 0);
    CHECK(s0.start == 1);

    LinearSequence s1 = linear_sequence_to(g, c, fan, 2);
    REQUIRE(s1.length() == 1);
    CHECK(s1.steps[0] == std::pair<EdgeId, Vertex>{f, 2});

    CHECK_THROWS_AS(linear_sequence_to(g, c, fan, 3), InputError);
}

TEST_CASE("sequence property holds edge by edge") {
    Multigraph g = fat_triangle(2);
    Multigraph rest = g.minus_edge(0);
    auto col = oracle_coloring(rest, 5);
    MultiFan fan = build_multifan(g, col, 0, 0);
    for (Vertex target : fan.fan_vertices()) {
        if (target == fan.anchor_target) continue;
        LinearSequence s = linear_sequence_to(g, col, fan, target);
        Vertex prev = s.start;
        for (auto& [edge, vert] : s.steps) {
            CHECK(col.is_missing(g, prev, col.color(edge)));
            prev = vert;
        }
        CHECK(prev == target);
    }
}

TEST_CASE("shifting") {
    // sequence with three colored edges at the center
    Multigraph g(5);
    EdgeId e = g.add_edge(0, 1);
    EdgeId s1 = g.add_edge(0, 2);
    EdgeId s2 = g.add_edge(0, 3);
    EdgeId s3 = g.add_edge(0, 4);
    PartialEdgeColoring c(g, 5);
    c.assign(s1, 1);
    c.assign(s2, 2);
    c.assign(s3, 3);
    // make them a chain: 1 missing at 1, 2 missing at 2, 3 missing at 3
    MultiFan fan = build_multifan(g, c, 0, e);
    REQUIRE(fan.entries.size() == 3);
    LinearSequence seq = linear_sequence_to(g, c, fan, 4);
    REQUIRE(seq.length() == 3);

    SUBCASE("adjacent shift moves one color") {
        auto shifted = shift(g, c, seq, 2, 3);
        CHECK(shifted.color(s2) == 3);
        CHECK(shifted.color(s3) == 3);  // e_to keeps its color
        CHECK(shifted.conflicts(g).size() == 1);
    }

    SUBCASE("full shift rotates colors down") {
        auto shifted = shift(g, c, seq, 1, 3);
        CHECK(shifted.color(s1) == 2);
        CHECK(shifted.color(s2) == 3);
        CHECK(shifted.color(s3) == 3);
        auto conf = shifted.conflicts(g);
        REQUIRE(conf.size() == 1);
        CHECK(conf[0] == std::pair<EdgeId, EdgeId>{s2, s3});

        SUBCASE("uncoloring the last edge restores properness") {
            shifted.unassign(s3);
            CHECK(shifted.is_proper(g));
            CHECK(shifted.missing(g, 0).count(1));
        }
    }

    SUBCASE("shift then inverse shift is the identity") {
        auto shifted = shift(g, c, seq, 1, 3);
        // invert: walk colors back up
        auto restored = shifted;
        restored.assign(s3, 3);
        restored.assign(s2, 2);
        restored.assign(s1, 1);
        CHECK(restored == c);
    }

    CHECK_THROWS_AS(shift(g, c, seq, 0, 2), InputError);
    CHECK_THROWS_AS(shift(g, c, seq, 2, 2), InputError);
    CHECK_THROWS_AS(shift(g, c, seq, 1, 4), InputError);
}
