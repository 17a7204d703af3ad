#include "mgcolor/oracle.hpp"

#include <random>

#include "doctest.h"
#include "mgcolor/base_color.hpp"
#include "test_graphs.hpp"

using namespace mgcolor;
using namespace mgtest;

TEST_CASE("brute force extension basics") {
    // empty precoloring reduces to plain k-colorability
    CHECK(brute_force_extension(cycle(5), {}, 3).has_value());
    CHECK_FALSE(brute_force_extension(cycle(5), {}, 2).has_value());

    Multigraph ft = fat_triangle(2);
    Precoloring p;
    p.matching = {0};
    p.colors[0] = 1;
    auto col = brute_force_extension(ft, p, 6);
    REQUIRE(col.has_value());
    CHECK(col->color(0) == 1);
    CHECK(col->is_proper(ft));
    CHECK(col->total_on(ft));

    // C5 with one edge precolored but too small a palette
    Precoloring pc5;
    pc5.matching = {0};
    pc5.colors[0] = 1;
    CHECK_FALSE(brute_force_extension(cycle(5), pc5, 2).has_value());
}

TEST_CASE("oracle agrees with the exact solver on colorability") {
    std::mt19937_64 rng(61);
    for (int round = 0; round < 60; ++round) {
        Multigraph g = random_multigraph(rng, 6, 10, 3);
        int chi = exact_chromatic_index(g).chi;
        for (int k = std::max(0, chi - 1); k <= chi + 1; ++k) {
            bool oracle_says = brute_force_extension(g, {}, k).has_value();
            CHECK(oracle_says == (k >= chi));
        }
    }
}

TEST_CASE("verify extension diagnostics") {
    Multigraph ft = fat_triangle(2);
    Precoloring p;
    p.matching = {0};
    p.colors[0] = 1;
    auto col = brute_force_extension(ft, p, 6);
    REQUIRE(col.has_value());
    CHECK(verify_extension(ft, p, *col).ok);

    auto incomplete = *col;
    incomplete.unassign(3);
    auto r1 = verify_extension(ft, p, incomplete);
    CHECK_FALSE(r1.ok);
    CHECK(r1.diagnostics[0].find("incomplete") != std::string::npos);

    auto disagree = *col;
    // recolor the precolored edge to some other feasible slot
    disagree.assign(0, disagree.color(1));
    auto r2 = verify_extension(ft, p, disagree);
    CHECK_FALSE(r2.ok);
    bool mentions = false;
    for (auto& d : r2.diagnostics)
        if (d.find("disagreement") != std::string::npos) mentions = true;
    CHECK(mentions);

    auto clash = *col;
    clash.assign(2, clash.color(3));
    auto r3 = verify_extension(ft, p, clash);
    CHECK_FALSE(r3.ok);
    bool conflict = false;
    for (auto& d : r3.diagnostics)
        if (d.find("conflict") != std::string::npos) conflict = true;
    CHECK(conflict);

    auto outside = *col;
    outside.widen_palette(10);
    outside.assign(5, 9);
    auto r4 = verify_extension(ft, p, outside);
    CHECK_FALSE(r4.ok);
}

TEST_CASE("oracle budget") {
    CHECK_THROWS_AS(brute_force_extension(fat_triangle(3), {}, 9, 3),
                    ResourceError);
}
