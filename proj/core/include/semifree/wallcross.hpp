#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semifree/lattice.hpp"
#include "semifree/rational.hpp"

namespace semifree {

// class with rational coefficients, e.g. [omega_t] at a non-integral t
struct QClass {
    SurfaceLattice lattice;
    std::vector<Rational> coeffs;

    Rational pair(const QClass& o) const;
    Rational pair(const CohClass& o) const;
};

QClass to_q(const CohClass& c);

// [omega_t] = omega_at_lo - (t - t_lo) euler on [t_lo, t_hi]
struct WallSegment {
    Rational t_lo;
    Rational t_hi;
    CohClass omega_at_lo;
    CohClass euler;

    const SurfaceLattice& lattice() const { return omega_at_lo.lattice(); }
};

struct Crossing {
    int level = 0;
    int new_exceptional = 0;                // index-2 isolated points, appended as E_{k+1}, ...
    std::vector<CohClass> surface_classes;  // PD of 2-dim fixed components at this level
    std::vector<CohClass> blowdown_classes; // co-index-2 collapses (index-4 isolated points)
};

// Identification of C^perp, for pairwise orthogonal exceptional classes C, with a standard lattice.
struct BlowDown {
    SurfaceLattice source;
    SurfaceLattice target;
    std::vector<CohClass> contracted;
    std::vector<CohClass> basis; // images in source of the target basis vectors

    // a must be orthogonal to every contracted class
    CohClass map(const CohClass& a) const;
    // inverse of map: target class back in source coordinates
    CohClass lift(const CohClass& a) const;
};

std::optional<BlowDown> blow_down(const SurfaceLattice& lat, const std::vector<CohClass>& classes);

QClass class_at(const WallSegment& seg, const Rational& t);

// e+ = pullback(e-) + sum new E + sum PD(Z); blow-downs are then contracted.
CohClass cross(const CohClass& euler_minus, const Crossing& x);

std::optional<Rational> vanishing_area_time(const WallSegment& seg, const CohClass& c);

// DH(t) = a0 + a1 (t - t_lo) + a2 (t - t_lo)^2 on one segment
struct DHPiece {
    Rational t_lo, t_hi;
    Rational a0, a1, a2;
    Rational at(const Rational& t) const;
};

struct VolumePolynomial {
    std::vector<DHPiece> pieces;
    bool continuous = true;
    bool positive = true;
    std::string failure;
};

// pieces per segment; flags a jump at a shared endpoint or a non-positive value inside
VolumePolynomial volume_polynomial(const std::vector<WallSegment>& segments);

// Exact positivity of omega_s = omega_lo - s e on the open interval 0 < s < length:
// omega^2 > 0, c1.omega > 0, C.omega > 0 for every listed exceptional class C.
bool positive_on_interval(const CohClass& omega_lo, const CohClass& euler, Int length,
                          const std::vector<const CohClass*>& exceptional);

// quadratic part alone: P - 2 Q s + R s^2 > 0 for 0 < s < length
bool quadratic_positive(Int P, Int Q, Int R, Int length);

} // namespace semifree
