#include "common.hpp"
#include "doctest.h"
#include "semifree/localization.hpp"

using namespace semifree;

TEST_CASE("point contributions") {
    auto t = point_contribution({1, 1, 1}, 3);
    CHECK(t.coeff == 27);
    CHECK(t.lambda_power == 0);
    t = point_contribution({-1, -1, -1}, 0);
    CHECK(t.coeff == -1);
    CHECK(t.lambda_power == -3);
    t = point_contribution({-1, -1, 1}, 1);
    CHECK(t.coeff == -1);
    CHECK(t.lambda_power == -2);
}

TEST_CASE("interior surfaces") {
    auto t = interior_surface_contribution({2, 2, 4}, 1);
    CHECK(t.coeff == -4);
    CHECK(t.lambda_power == -2);
    for (Int bn = -3; bn <= 3; ++bn)
        for (Int bp = -3; bp <= 3; ++bp) {
            CHECK(interior_surface_contribution({bn, bp, 2 + bn + bp}, 3).coeff == 0);
            CHECK(interior_surface_contribution({bn, bp, 5}, 3).lambda_power == 0);
        }
    CHECK(interior_surface_contribution({1, 1, 4}, 0).coeff == 0);
}

TEST_CASE("extremal surfaces") {
    CHECK(extremal_surface_contribution({Extremum::Min, 0, 2}, 3).coeff == 24);
    CHECK(extremal_surface_contribution({Extremum::Max, 2, 4}, 3).coeff == 32);
    CHECK(extremal_surface_contribution({Extremum::Max, 0, 2}, 0).coeff == 0);
    // both ends S2xS2-type spheres with b = 2
    std::vector<FixedComponentLocal> both{ExtremalSurfaceLocal{Extremum::Min, 2, 4},
                                          ExtremalSurfaceLocal{Extremum::Max, 2, 4}};
    CHECK(integrate(both, 3) == 64);
    CHECK(integrate(both, 0) == 0);
    CHECK(integrate(both, 1) == 0);
}

TEST_CASE("extremal four-manifolds") {
    auto p2 = SurfaceLattice::projective_plane(0);
    FourManifoldLocal top{Extremum::Max, CohClass::parse(p2, "-u")};
    CHECK(extremal_fourmanifold_contribution(top, 3).coeff == 37);
    auto t0 = extremal_fourmanifold_contribution(top, 0);
    CHECK(abs(t0.coeff) == 1);
    CHECK(t0.lambda_power == -3);
    // the point minimum plus the P2 maximum is P3
    std::vector<FixedComponentLocal> p3{PointLocal{{1, 1, 1}}, top};
    CHECK(integrate(p3, 3) == 64);
    CHECK(integrate(p3, 1) == 0);
    CHECK(integrate(p3, 0) == 0);
}

TEST_CASE("homogeneity is enforced") {
    for (int p : {0, 1, 3}) {
        CHECK(point_contribution({1, -1, 1}, p).lambda_power == p - 3);
        CHECK(extremal_surface_contribution({Extremum::Min, 1, 3}, p).lambda_power == p - 3);
    }
}

TEST_CASE("table rows through the residue sum") {
    const TFD* i3 = test::by_label("(I-3)");
    REQUIRE(i3);
    CHECK(integrate(i3->local_data(), 3) == 52);
    const TFD* iii1 = test::by_label("(III-1)");
    REQUIRE(iii1);
    CHECK(integrate(iii1->local_data(), 1) == 0);
    CHECK(integrate(iii1->local_data(), 3) == 64);
    const TFD* k5 = test::by_label("(II-1-4.5)");
    REQUIRE(k5);
    CHECK(integrate(k5->local_data(), 3) == 24);
}

TEST_CASE("III-4 with e = -u + 2E1 below an X_1 maximum gives 50") {
    auto x1 = SurfaceLattice::projective_plane(1);
    auto e = CohClass::parse(x1, "-u + 2E1");
    int seen = 0;
    for (const auto& t : test::labeled().rows) {
        if (t.label.rfind("(III-4", 0) != 0) continue;
        for (const auto& c : t.components)
            if (c.euler && *c.euler == e) {
                ++seen;
                CHECK(integrate(t.local_data(), 3) == 50);
            }
    }
    CHECK(seen >= 1);
}

TEST_CASE("every classified row: vanishing for p = 0, 1 and the tabled c1^3") {
    for (const auto& t : test::labeled().rows) {
        CAPTURE(t.label);
        auto local = t.local_data();
        CHECK(integrate(local, 0) == 0);
        CHECK(integrate(local, 1) == 0);
        CHECK(integrate(local, 3) == t.derived.c1_cubed);
    }
}
