#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "assoc_kneser/triangulation.hpp"

using namespace assockg;

TEST_CASE("diagonal inventory and canonical order") {
    auto d4 = all_diagonals(4);
    REQUIRE(d4.size() == 2);
    CHECK(d4[0] == Diagonal(1, 3));
    CHECK(d4[1] == Diagonal(2, 4));

    CHECK(all_diagonals(5).size() == 5);
    CHECK(all_diagonals(6).size() == 9);
    CHECK(diagonal_count(12) == 54);
    CHECK_THROWS(diagonal_count(2));

    for (int n : {4, 5, 6, 9, 12}) {
        auto ds = all_diagonals(n);
        CHECK(static_cast<int>(ds.size()) == diagonal_count(n));
        for (size_t k = 0; k < ds.size(); ++k) {
            CHECK(diagonal_index(n, ds[k]) == static_cast<int>(k));
            CHECK(diagonal_at(n, static_cast<int>(k)) == ds[k]);
        }
    }
}

TEST_CASE("crossing is strict interleaving") {
    CHECK(crosses(Diagonal(1, 3), Diagonal(2, 4)));
    CHECK_FALSE(crosses(Diagonal(1, 3), Diagonal(1, 4)));  // shared endpoint
    CHECK(crosses(Diagonal(2, 5), Diagonal(1, 4)));
    CHECK_FALSE(crosses(Diagonal(1, 4), Diagonal(2, 3)));  // nested
    CHECK_FALSE(crosses(Diagonal(1, 3), Diagonal(1, 3)));
}

TEST_CASE("triangulation enumeration matches the Catalan recurrence") {
    CHECK(enumerate_triangulations(4).size() == 2);
    CHECK(enumerate_triangulations(6).size() == 14);
    CHECK(enumerate_triangulations(9).size() == 429);  // C_7 by the recurrence
    CHECK(catalan_number(7) == 429);

    for (int n = 3; n <= 10; ++n) {
        long long count = 0;
        for_each_triangulation(n, [&](const Triangulation&) { ++count; });
        CHECK(count == static_cast<long long>(catalan_number(n - 2)));
    }

    // Exactly once, deterministic order.
    auto a = enumerate_triangulations(7);
    auto b = enumerate_triangulations(7);
    std::set<DiagonalSet> seen;
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        seen.insert(a[i].diagonals());
    }
    CHECK(seen.size() == a.size());
}

TEST_CASE("triangulation validation") {
    CHECK_THROWS(Triangulation(6, std::vector<Diagonal>{{1, 3}}));  // wrong count
    CHECK_THROWS(Triangulation(6, std::vector<Diagonal>{{1, 3}, {2, 4}, {1, 5}}));  // crossing
    CHECK_THROWS(Triangulation(4, std::vector<Diagonal>{{1, 2}}));  // a side
}

TEST_CASE("triangle decomposition") {
    Triangulation t4(4, std::vector<Diagonal>{{1, 3}});
    auto tris = triangles_of(t4);
    REQUIRE(tris.size() == 2);
    CHECK(tris[0] == Triangle{1, 2, 3});
    CHECK(tris[1] == Triangle{1, 3, 4});

    auto tz = triangles_of(hexagon_Z());
    std::set<Triangle> zset(tz.begin(), tz.end());
    CHECK(zset == std::set<Triangle>{{2, 3, 4}, {2, 4, 5}, {1, 2, 5}, {1, 5, 6}});

    Triangulation star5(5, std::vector<Diagonal>{{2, 5}, {3, 5}});
    auto ts = triangles_of(star5);
    std::set<Triangle> sset(ts.begin(), ts.end());
    CHECK(sset == std::set<Triangle>{{1, 2, 5}, {2, 3, 5}, {3, 4, 5}});
}

TEST_CASE("decomposition counts: each side once, each diagonal twice") {
    for (int n : {5, 6, 7}) {
        for (const Triangulation& t : enumerate_triangulations(n)) {
            auto tris = triangles_of(t);
            REQUIRE(static_cast<int>(tris.size()) == n - 2);
            std::map<std::pair<int, int>, int> edge_uses;
            for (const Triangle& tr : tris) {
                edge_uses[{tr[0], tr[1]}]++;
                edge_uses[{tr[1], tr[2]}]++;
                edge_uses[{tr[0], tr[2]}]++;
            }
            for (const auto& [e, uses] : edge_uses) {
                bool is_side = e.second - e.first == 1 || e.second - e.first == n - 1;
                CHECK(uses == (is_side ? 1 : 2));
            }
        }
    }
}

TEST_CASE("every triangulation has at least two ears") {
    for (int n = 4; n <= 9; ++n)
        for_each_triangulation(n, [&](const Triangulation& t) {
            CHECK(ears_of(t).size() >= 2);
        });
}

TEST_CASE("dihedral action") {
    Triangulation delta = hexagon_Delta();
    DihedralElement id{0, false};
    CHECK(dihedral_apply(delta, id) == delta);

    DihedralElement rot1{1, false};
    CHECK(dihedral_apply(delta, rot1) == hexagon_DeltaPrime());

    // Orbit of Delta under D_6 has exactly two elements.
    std::set<DiagonalSet> orbit;
    for (const DihedralElement& gelt : dihedral_group(6))
        orbit.insert(dihedral_apply(delta, gelt).diagonals());
    CHECK(orbit.size() == 2);

    // Group action identity on every hexagon triangulation.
    auto all6 = enumerate_triangulations(6);
    for (const DihedralElement& gg : dihedral_group(6))
        for (const DihedralElement& hh : dihedral_group(6)) {
            DihedralElement hg = dihedral_compose(hh, gg, 6);
            for (const Triangulation& t : all6)
                CHECK(dihedral_apply(dihedral_apply(t, gg), hh) == dihedral_apply(t, hg));
        }
}

TEST_CASE("star centers") {
    Triangulation star6(6, std::vector<Diagonal>{{2, 6}, {3, 6}, {4, 6}});
    CHECK(star_center(star6) == 6);
    CHECK_FALSE(star_center(hexagon_Z()).has_value());

    // Every pentagon triangulation is a star.
    for (const Triangulation& t : enumerate_triangulations(5))
        CHECK(star_center(t).has_value());

    // The 3-gon convention.
    Triangulation t3(3, std::vector<Diagonal>{});
    CHECK(star_center(t3) == 1);
}

TEST_CASE("Z-copies") {
    auto z = find_z_copy(hexagon_Z());
    REQUIRE(z.has_value());
    CHECK(*z == ZTuple{1, 2, 3, 4, 5, 6});

    CHECK_FALSE(find_z_copy(hexagon_Delta()).has_value());
    CHECK_FALSE(find_z_copy(hexagon_DeltaPrime()).has_value());

    // The heptagon case: the triangle-type hexagon extended by an ear at 7
    // contains the Z-copy 6,5,4,3,1,7 (descending traversal).
    Triangulation t7(7, std::vector<Diagonal>{{1, 3}, {1, 5}, {3, 5}, {1, 6}});
    CHECK(is_z_tuple(t7, ZTuple{6, 5, 4, 3, 1, 7}));
    auto found = find_z_copy(t7);
    REQUIRE(found.has_value());
    CHECK(is_z_tuple(t7, *found));
}

TEST_CASE("Z-copy exists exactly outside stars and the two triangle types") {
    for (int n = 6; n <= 9; ++n)
        for_each_triangulation(n, [&](const Triangulation& t) {
            bool none_expected = star_center(t).has_value() || is_delta_type(t);
            CHECK(find_z_copy(t).has_value() == !none_expected);
        });
}
