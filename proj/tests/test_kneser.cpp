#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "assoc_kneser/kneser.hpp"

using namespace assockg;

TEST_CASE("Petersen graph from 2-subsets of [5]") {
    KneserGraph g = build_kneser(k_subsets_family(5, 2));
    CHECK(g.n() == 10);
    CHECK(g.edge_count() == 15);
    for (int v = 0; v < g.n(); ++v) CHECK(g.adj[v].count() == 3);
}

TEST_CASE("KG(T_4) is a single edge") {
    KneserGraph g = kneser_of_triangulations(4);
    CHECK(g.n() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("KG(T_6): Z is adjacent to exactly its two rotations among the zig-zags") {
    auto all = enumerate_triangulations(6);
    KneserGraph g = kneser_of_triangulations(6);
    CHECK(g.n() == 14);
    // Brute-force disjointness oracle against the adjacency rows.
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) {
            bool disjoint = u != v && !all[u].diagonals().intersects(all[v].diagonals());
            CHECK(g.adjacent(u, v) == disjoint);
        }
    // The zig-zag clique contains Z's orbit mates; find Z's index.
    auto zz = zigzag_cliques(6);
    int zi = -1;
    for (int v = 0; v < g.n(); ++v)
        if (all[v] == hexagon_Z()) zi = v;
    REQUIRE(zi >= 0);
    int adjacent_zigzags = 0;
    for (const Triangulation& t : zz) {
        int ti = -1;
        for (int v = 0; v < g.n(); ++v)
            if (all[v] == t) ti = v;
        REQUIRE(ti >= 0);
        if (g.adjacent(zi, ti)) ++adjacent_zigzags;
    }
    CHECK(adjacent_zigzags == 2);
}

TEST_CASE("zig-zag cliques are pairwise disjoint maximum structures") {
    for (int n = 4; n <= 10; ++n) {
        auto zz = zigzag_cliques(n);
        REQUIRE(static_cast<int>(zz.size()) == n / 2);
        for (const Triangulation& t : zz) CHECK(t.n() == n);
        int total = 0;
        for (size_t a = 0; a < zz.size(); ++a) {
            total += zz[a].diagonals().count();
            for (size_t b = a + 1; b < zz.size(); ++b)
                CHECK_FALSE(zz[a].diagonals().intersects(zz[b].diagonals()));
        }
        CHECK(total == (n / 2) * (n - 3));
    }
    // The pentagon picture: two zig-zags, four distinct diagonals.
    auto z5 = zigzag_cliques(5);
    CHECK(z5.size() == 2);
    CHECK(z5[0].diagonals().count() == 2);
    CHECK_FALSE(z5[0].diagonals().intersects(z5[1].diagonals()));
}

TEST_CASE("cd2 witness coloring") {
    CHECK(cd2_witness_check(6));
    CHECK(cd2_witness_check(7));
    CHECK_FALSE(cd2_witness_check(5));
    CHECK_THROWS(cd2_witness_check(3));
}

TEST_CASE("triangle membership classification") {
    auto all6 = enumerate_triangulations(6);
    CHECK(triangle_membership(hexagon_Z(), all6));
    CHECK_FALSE(triangle_membership(hexagon_Delta(), all6));
    CHECK_FALSE(triangle_membership(hexagon_DeltaPrime(), all6));

    auto all7 = enumerate_triangulations(7);
    for (const Triangulation& t : all7)
        if (star_center(t).has_value()) CHECK_FALSE(triangle_membership(t, all7));
}

TEST_CASE("vertex deletion keeps the family consistent") {
    KneserGraph g = kneser_of_triangulations(5);
    KneserGraph h = g.without_vertices({0, 3});
    CHECK(h.n() == 3);
    for (int u = 0; u < h.n(); ++u)
        for (int v = 0; v < h.n(); ++v)
            if (u != v)
                CHECK(h.adjacent(u, v) ==
                      !h.family.members[u].intersects(h.family.members[v]));
}
