#pragma once

#include <array>
#include <variant>
#include <vector>

#include "semifree/lattice.hpp"
#include "semifree/rational.hpp"

namespace semifree {

enum class Extremum { Min, Max };

struct PointLocal {
    std::array<int, 3> weights;
};

// interior surface: normal bundle (-lambda + b_neg q)(lambda + b_pos q), c1|_Z = c1_deg q
struct SurfaceLocal {
    Int b_neg = 0;
    Int b_pos = 0;
    Int c1_deg = 0;
};

// extremal surface, both normal weights +1 (min) or -1 (max); b is the normal Chern number
struct ExtremalSurfaceLocal {
    Extremum sign = Extremum::Min;
    Int b = 0;
    Int c1_deg = 0;
};

// extremal 4-manifold; euler is e(P^+) above a minimum, e(P^-) below a maximum
struct FourManifoldLocal {
    Extremum sign = Extremum::Min;
    CohClass euler;
};

using FixedComponentLocal = std::variant<PointLocal, SurfaceLocal, ExtremalSurfaceLocal, FourManifoldLocal>;

struct LocalTerm {
    Rational coeff;
    int lambda_power = 0;
};

LocalTerm point_contribution(const std::array<int, 3>& weights, int p);
LocalTerm interior_surface_contribution(const SurfaceLocal& s, int p);
LocalTerm extremal_surface_contribution(const ExtremalSurfaceLocal& s, int p);
LocalTerm extremal_fourmanifold_contribution(const FourManifoldLocal& f, int p);
LocalTerm contribution(const FixedComponentLocal& c, int p);

// sum of residues; throws std::logic_error if the terms disagree on the power of lambda
Rational integrate(const std::vector<FixedComponentLocal>& components, int p);

// closed forms for c1^3, used as independent cross-checks of the residue sum
// sphere minimum, 4-dim maximum: 24 + 4 b_min - m + <3c1^2 - 3 c1 e + e^2>, e = e(P^-) below the maximum
Rational chern_cubed_sphere_min_fourfold_max(Int b_min, Int m, const CohClass& e_below_max);
// 4-dim at both ends: <2e^2 + 6c1^2 - 3 c1 Z0 + 2 e Z0 + Z0^2>, e = e(P^+) above the minimum
Rational chern_cubed_fourfold_both(const CohClass& e_above_min, const CohClass& z0);

} // namespace semifree
