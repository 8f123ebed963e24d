#include "common.hpp"
#include "doctest.h"
#include "semifree/wallcross.hpp"

using namespace semifree;

namespace {

CohClass cls(const SurfaceLattice& lat, const char* text) { return CohClass::parse(lat, text); }

QClass q(const CohClass& c) { return to_q(c); }

bool same(const QClass& a, const QClass& b) { return a.lattice == b.lattice && a.coeffs == b.coeffs; }

} // namespace

TEST_CASE("class_at: I-2 family") {
    auto x3 = SurfaceLattice::projective_plane(3);
    WallSegment seg{0, 1, cls(x3, "3u - E1 - E2 - E3"), cls(x3, "-u + E1 + E2 + E3")};
    CHECK(same(class_at(seg, 1), q(cls(x3, "4u - 2E1 - 2E2 - 2E3"))));
    CHECK(same(class_at(seg, 0), q(seg.omega_at_lo)));
}

TEST_CASE("class_at: II-3 family is affine in t") {
    auto x1 = SurfaceLattice::projective_plane(1);
    for (Int a = -2; a <= 2; ++a)
        for (Int b = -2; b <= 2; ++b) {
            WallSegment seg{0, 1, cls(x1, "3u - E1"), CohClass(x1, {a - 1, b + 1})};
            Rational t(1, 2);
            auto w = class_at(seg, t);
            CHECK(w.coeffs[0] == 3 - a * t + t);
            CHECK(w.coeffs[1] == -(1 + b * t + t));
        }
}

TEST_CASE("cross: blow-up adds new classes, surfaces add their duals") {
    auto p2 = SurfaceLattice::projective_plane(0);
    Crossing x;
    x.level = -1;
    x.new_exceptional = 2;
    auto e = cross(cls(p2, "-u"), x);
    auto x2 = SurfaceLattice::projective_plane(2);
    CHECK(e == cls(x2, "-u + E1 + E2"));
    Crossing z;
    z.level = 0;
    z.surface_classes = {cls(x2, "u - E1"), cls(x2, "u - E2")};
    CHECK(cross(e, z) == cls(x2, "u"));
}

TEST_CASE("cross: blow-up followed by the reverse blow-down is the identity") {
    // read downwards the Euler classes change sign and the new classes become blow-downs
    for (int k = 0; k <= 3; ++k) {
        auto lat = SurfaceLattice::projective_plane(k);
        for (const char* s : {"-u", "0", "2u"}) {
            auto e = CohClass::parse(lat, s);
            Crossing up;
            up.new_exceptional = 2;
            auto mid = cross(e, up);
            const auto& big = mid.lattice();
            Crossing down;
            down.blowdown_classes = {CohClass::basis(big, big.rank() - 2), CohClass::basis(big, big.rank() - 1)};
            auto back = cross(-mid, down);
            CHECK(convert_basis(back, lat) == -e);
        }
    }
}

TEST_CASE("vanishing times") {
    auto es2 = SurfaceLattice::hirzebruch(0);
    auto y = cls(es2, "y");
    for (Int k = 0; k <= 3; ++k) {
        // <omega, y> = 1 and <e, y> = k + 1, so the area of y is 1 - (k+1) t
        WallSegment seg{0, 1, cls(es2, "3x + 2y"), CohClass(es2, {k + 1, 0})};
        auto t = vanishing_area_time(seg, y);
        REQUIRE(t);
        CHECK(*t == Rational(1, k + 1));
    }
    WallSegment flat{0, 1, cls(es2, "3x + 2y"), CohClass::zero(es2)};
    CHECK_FALSE(vanishing_area_time(flat, y).has_value());
}

TEST_CASE("blow-down classes of every row vanish exactly at level 1") {
    int checked = 0;
    for (const auto& t : test::labeled().rows) {
        if (t.blowdowns.empty()) continue;
        WallSegment seg{0, 1, t.omega0, t.euler_plus};
        for (const auto& c : t.blowdowns) {
            CAPTURE(t.label);
            auto v = vanishing_area_time(seg, c);
            REQUIRE(v);
            CHECK(*v == 1);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("Duistermaat-Heckman: forced k = 3") {
    for (int k = 0; k <= 5; ++k) {
        auto lat = SurfaceLattice::projective_plane(k);
        CohClass w = 3 * CohClass::basis(lat, 0), e = -CohClass::basis(lat, 0);
        for (int i = 1; i <= k; ++i) {
            w -= CohClass::basis(lat, i);
            e += CohClass::basis(lat, i);
        }
        auto dh = volume_polynomial({WallSegment{0, 1, w, e}});
        REQUIRE(dh.pieces.size() == 1);
        CHECK(dh.pieces[0].at(1) == 16 - 4 * k);
        CHECK((dh.pieces[0].at(1) == 4) == (k == 3));
    }
}

TEST_CASE("Duistermaat-Heckman: constant family and a negative case") {
    auto x1 = SurfaceLattice::projective_plane(1);
    auto dh = volume_polynomial({WallSegment{-1, 1, cls(x1, "3u - E1"), CohClass::zero(x1)}});
    CHECK(dh.positive);
    CHECK(dh.pieces[0].a1 == 0);
    CHECK(dh.pieces[0].a2 == 0);
    CHECK(dh.pieces[0].at(0) == 8);

    // DH(t) = (5t - 3)^2 - 2 (t - 1)^2 on X_2
    auto x2 = SurfaceLattice::projective_plane(2);
    auto bad = volume_polynomial({WallSegment{0, 1, cls(x2, "-3u + E1 + E2"), cls(x2, "-5u + E1 + E2")}});
    CHECK(bad.pieces[0].at(Rational(3, 5)) < 0);
    CHECK_FALSE(bad.positive);
}

TEST_CASE("Duistermaat-Heckman: continuity across a mismatched wall is flagged") {
    auto p2 = SurfaceLattice::projective_plane(0);
    auto dh = volume_polynomial({WallSegment{0, 1, cls(p2, "3u"), cls(p2, "-u")},
                                 WallSegment{1, 2, cls(p2, "3u"), cls(p2, "-u")}});
    CHECK_FALSE(dh.continuous);
}

TEST_CASE("every classified row: DH continuous and positive, exceptional areas positive") {
    for (const auto& t : test::labeled().rows) {
        CAPTURE(t.label);
        auto segs = t.segments();
        auto dh = volume_polynomial(segs);
        CHECK(dh.continuous);
        CHECK(dh.positive);
        for (const auto& s : segs) {
            const auto& ex = exceptional_classes(s.lattice());
            Rational mid = (s.t_lo + s.t_hi) / 2;
            auto w = class_at(s, mid);
            for (const auto& c : ex) CHECK(w.pair(c) > 0);
        }
    }
}

TEST_CASE("quadratic positivity") {
    CHECK(quadratic_positive(9, 0, 0, 3));
    CHECK_FALSE(quadratic_positive(1, 1, 0, 1)); // 1 - 2s reaches 0 before s = 1
    CHECK(quadratic_positive(1, 1, 1, 1));       // (1 - s)^2 > 0 for s < 1
}
