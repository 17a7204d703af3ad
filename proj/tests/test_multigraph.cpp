#include "mgcolor/multigraph.hpp"

#include <random>

#include "doctest.h"
#include "test_graphs.hpp"

using namespace mgcolor;
using namespace mgtest;

TEST_CASE("edge distance basics") {
    // path u-v-w: adjacent edges have distance 0
    Multigraph p3 = path(3);
    CHECK(p3.edge_distance(0, 1) == 0);

    // C5: opposite-ish edges at distance 1
    Multigraph c5 = cycle(5);
    EdgeId e12 = 1;  // (1,2)
    EdgeId e34 = 3;  // (3,4)
    CHECK(c5.edge_distance(e12, e34) == 1);

    // path 0..7: edges (0,1) and (4,5) at distance 3
    Multigraph p8 = path(8);
    CHECK(p8.edge_distance(0, 4) == 3);

    CHECK_THROWS_AS(p8.edge_distance(0, 0), InputError);
    CHECK_THROWS_AS(p8.edge_distance(0, 99), InputError);

    // disconnected pieces
    Multigraph d(4);
    EdgeId a = d.add_edge(0, 1);
    EdgeId b = d.add_edge(2, 3);
    CHECK(d.edge_distance(a, b) == kInfinity);
}

TEST_CASE("edge distance symmetry (random)") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        Multigraph g = random_multigraph(rng, 8, 14, 3);
        auto ids = g.edge_ids();
        if (ids.size() < 2) continue;
        for (size_t i = 0; i < ids.size(); ++i)
            for (size_t j = i + 1; j < ids.size(); ++j)
                CHECK(g.edge_distance(ids[i], ids[j]) ==
                      g.edge_distance(ids[j], ids[i]));
    }
}

TEST_CASE("distance-t matchings") {
    Multigraph p8 = path(8);
    CHECK(p8.is_distance_matching({0}, 3));             // single edge: vacuous
    CHECK(p8.is_distance_matching({0, 4}, 3));          // distance exactly 3
    CHECK_FALSE(p8.is_distance_matching({0, 3}, 3));    // distance 2
    CHECK(p8.is_distance_matching({0, 3}, 2));
}

TEST_CASE("boundary") {
    Multigraph g = fat_triangle_pendant();
    VertexSet all{0, 1, 2, 3};
    CHECK(g.boundary(all).empty());
    CHECK(g.boundary({}).empty());

    VertexSet tri{0, 1, 2};
    EdgeSet b = g.boundary(tri);
    REQUIRE(b.size() == 1);
    auto [u, v] = g.endpoints(*b.begin());
    CHECK(((u == 3 && v == 0) || (u == 0 && v == 3)));
}

TEST_CASE("boundary partitions the edge set") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 40; ++round) {
        Multigraph g = random_multigraph(rng, 7, 16, 3);
        std::uniform_int_distribution<int> pick(0, 1);
        VertexSet x, rest;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            (pick(rng) ? x : rest).insert(v);
        size_t inside = g.induced(x).edge_count();
        size_t outside = g.induced(rest).edge_count();
        size_t crossing = g.boundary(x).size();
        CHECK(inside + outside + crossing ==
              static_cast<size_t>(g.edge_count()));
    }
}

TEST_CASE("diameter") {
    Multigraph g = fat_triangle_pendant();
    CHECK(g.diameter({0}) == 0);
    CHECK(g.diameter({0, 1, 2}) == 1);
    Multigraph d(3);
    d.add_edge(0, 1);
    CHECK(d.diameter({0, 2}) == kInfinity);
    CHECK_THROWS_AS(g.diameter({}), InputError);
}

TEST_CASE("edge ids are stable under deletion and restore") {
    Multigraph g = fat_triangle(2);
    auto before = g.edge_ids();
    g.remove_edge(2);
    CHECK_FALSE(g.has_edge(2));
    for (EdgeId e : before)
        if (e != 2) {
            CHECK(g.has_edge(e));
            CHECK(g.endpoints(e) == fat_triangle(2).endpoints(e));
        }
    g.restore_edge(2);
    CHECK(g.edge_ids() == before);
    CHECK(g == fat_triangle(2));

    // new edges never reuse ids
    EdgeId fresh = g.add_edge(0, 1);
    CHECK(fresh == 6);
}

TEST_CASE("degree and multiplicity are recomputed") {
    Multigraph g = fat_triangle(2);
    CHECK(g.max_degree() == 4);
    CHECK(g.max_multiplicity() == 2);
    g.remove_edge(0);
    CHECK(g.max_degree() == 4);  // vertex 2 keeps both pairs
    CHECK(g.degree(0) == 3);
    CHECK(g.multiplicity(0, 1) == 1);
    g.remove_edge(1);
    CHECK(g.multiplicity(0, 1) == 0);
    CHECK(g.max_multiplicity() == 2);
}

TEST_CASE("loops are rejected") {
    Multigraph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 5), InputError);
}

TEST_CASE("derived views keep ids aligned") {
    Multigraph g = fat_triangle_pendant();
    Multigraph tri = g.induced({0, 1, 2});
    CHECK(tri.edge_count() == 6);
    CHECK(tri.vertex_count() == 4);  // vertex slots survive
    CHECK(tri.degree(3) == 0);
    Multigraph still = g.minus_vertices({3});
    CHECK(still.edge_count() == 6);
    for (EdgeId e : tri.edge_ids()) CHECK(g.endpoints(e) == tri.endpoints(e));
}
