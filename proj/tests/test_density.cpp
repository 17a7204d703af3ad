#include "mgcolor/density.hpp"

#include <random>

#include "doctest.h"
#include "mgcolor/base_color.hpp"
#include "test_graphs.hpp"

using namespace mgcolor;
using namespace mgtest;

TEST_CASE("gamma") {
    Multigraph single(2);
    single.add_edge(0, 1);
    CHECK(gamma(single, 3) == Rational(0, 1));
    CHECK(gamma(single, 3).str() == "0");

    CHECK(gamma(cycle(3), 3) == Rational(3, 1));
    CHECK(gamma(fat_triangle(2), 3) == Rational(6, 1));
    CHECK(gamma(cycle(5), 5) == Rational(5, 2));
    CHECK(gamma(cycle(5), 5).str() == "5/2");

    CHECK_THROWS_AS(gamma(cycle(5), 2), InputError);
}

TEST_CASE("gamma matches a subset brute force oracle") {
    // independent re-computation with a different enumeration style
    std::mt19937_64 rng(5);
    for (int round = 0; round < 40; ++round) {
        Multigraph g = random_multigraph(rng, 7, 14, 3);
        int n = g.vertex_count();
        Rational best(0, 1);
        if (n >= 3) {
            std::vector<int> pick(n, 0);
            std::function<void(int, int)> rec = [&](int v, int size) {
                if (v == n) {
                    if (size < 3 || size % 2 == 0) return;
                    int edges = 0;
                    for (EdgeId e : g.edge_ids()) {
                        auto [a, b] = g.endpoints(e);
                        if (pick[a] && pick[b]) ++edges;
                    }
                    Rational cand(2 * edges, size - 1);
                    if (best < cand) best = cand;
                    return;
                }
                pick[v] = 0;
                rec(v + 1, size);
                pick[v] = 1;
                rec(v + 1, size + 1);
                pick[v] = 0;
            };
            rec(0, 0);
        }
        CHECK(gamma(g, std::max(3, n)) == best);
    }
}

TEST_CASE("k-critical edges") {
    CHECK(is_k_critical_edge(cycle(3), 0, 2));
    CHECK_FALSE(is_k_critical_edge(cycle(4), 0, 2));
    for (EdgeId e : fat_triangle(2).edge_ids())
        CHECK(is_k_critical_edge(fat_triangle(2), e, 5));
    CHECK_THROWS_AS(is_k_critical_edge(cycle(3), 99, 2), InputError);
}

TEST_CASE("critical dense subgraph of the fat triangle") {
    Multigraph g = fat_triangle(2);
    DenseSubgraph h = critical_dense_subgraph(g, 0, 5);
    CHECK(h.vertices == VertexSet{0, 1, 2});
    CHECK(h.k == 5);
    CHECK(h.edge_count == 5);
    CHECK(h.boundary.empty());

    // pendant vertex is excluded by the dense equation
    Multigraph gp = fat_triangle_pendant();
    DenseSubgraph hp = critical_dense_subgraph(gp, 0, 5);
    CHECK(hp.vertices == VertexSet{0, 1, 2});
    CHECK_FALSE(hp.contains(3));
    REQUIRE(hp.boundary.size() == 1);

    CHECK_THROWS_AS(critical_dense_subgraph(cycle(4), 0, 2), InputError);
}

TEST_CASE("maximal k-dense subgraphs") {
    // precondition rejection: chi' = maxdeg
    CHECK(maximal_k_dense_subgraphs(cycle(4), 2).empty());

    // one fat triangle minus an edge: the whole graph is the only subgraph
    Multigraph ft = fat_triangle(2).minus_edge(0);
    auto one = maximal_k_dense_subgraphs(ft, 5);
    REQUIRE(one.size() == 1);
    CHECK(one[0].vertices == VertexSet{0, 1, 2});

    // two disjoint fat triangles, each missing one edge
    Multigraph two = two_fat_triangles(2);
    two.remove_edge(0);
    two.remove_edge(6);
    auto both = maximal_k_dense_subgraphs(two, 5);
    REQUIRE(both.size() == 2);
    CHECK(both[0].vertices == VertexSet{0, 1, 2});
    CHECK(both[1].vertices == VertexSet{3, 4, 5});
    CHECK(both[0].disjoint_from(both[1]));
}

TEST_CASE("density lower bound and desk-scale Goldberg-Seymour") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 60; ++round) {
        Multigraph g = random_connected_multigraph(rng, 6, 10, 3);
        int chi = exact_chromatic_index(g).chi;
        Rational gm = gamma(g, std::max(3, g.vertex_count()));
        CHECK(gm.ceil() <= chi);
        if (chi >= g.max_degree() + 2) CHECK(chi == gm.ceil());
    }
}

TEST_CASE("lemma 1 and 2 as executable checks") {
    std::mt19937_64 rng(19);
    int exercised = 0;
    for (int round = 0; round < 120 && exercised < 8; ++round) {
        Multigraph g = random_connected_multigraph(rng, 6, 10, 3);
        int chi = exact_chromatic_index(g).chi;
        if (chi < g.max_degree() + 1) continue;
        auto subs = maximal_k_dense_subgraphs(g, chi);
        if (subs.empty()) continue;
        ++exercised;
        for (size_t i = 0; i < subs.size(); ++i)
            for (size_t j = i + 1; j < subs.size(); ++j)
                CHECK(subs[i].disjoint_from(subs[j]));
        for (unsigned long long seed = 1; seed <= 3; ++seed) {
            auto col = k_edge_color_seeded(g, chi, seed);
            REQUIRE(col.has_value());
            for (const auto& h : subs) {
                auto flags = classify_vertex_set(g, *col, h.vertices);
                CHECK(flags.closed);
                CHECK(flags.strongly_closed);
                Multigraph hv = g.induced(h.vertices);
                CHECK(classify_vertex_set(hv, col->restricted_to(hv),
                                          h.vertices)
                          .elementary);
            }
        }
    }
    CHECK(exercised > 0);
}
