#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semifree/lattice.hpp"
#include "semifree/localization.hpp"
#include "semifree/wallcross.hpp"

namespace semifree {

struct CaseSpec {
    int dim_min = 0;
    int dim_max = 0;
    std::vector<int> crit; // ascending

    int min_level() const { return crit.front(); }
    int max_level() const { return crit.back(); }
    bool has(int level) const;
    // "(0,0,{-3,0,3})"
    std::string str() const;
    static CaseSpec parse(const std::string& text);
    // throws std::invalid_argument when the extremal levels do not fit the dimensions
    void validate(int real_dim = 6) const;

    auto operator<=>(const CaseSpec&) const = default;
};

enum class Topology { Point, Sphere, Surface, FourManifold };

struct FixedComponentRecord {
    int level = 0;
    int dim = 0;
    Topology topology = Topology::Point;
    Int genus = 0;
    std::array<int, 3> weights{0, 0, 0}; // isolated points
    std::optional<CohClass> cls;         // PD in M_0, interior surfaces
    Int b_neg = 0, b_pos = 0;            // interior surfaces
    Int b = 0;                           // extremal spheres
    Int volume = 0;                      // area for surfaces, omega^2 for 4-manifolds
    std::optional<CohClass> euler;       // extremal 4-manifolds, in their own lattice
    std::string type;                    // "pt", "S2", "T2", "Sigma_g", lattice name

    FixedComponentLocal local() const;
};

struct Derived {
    std::array<Int, 7> poincare{};
    Int b2 = 0;
    Int b_odd = 0;
    Int c1_cubed = 0;
    Rational p0, p1; // localization with powers 0 and 1, must vanish
};

// Free data of a candidate; everything else is determined by it.
struct TfdParams {
    CaseSpec spec;
    SurfaceLattice seed;         // P2 (point min), S2xS2 or E_S2 (sphere min), M_0 (4-dim min)
    CohClass seed_euler;         // e(P^+) above the minimum, in the seed frame
    int m_minus = 0;             // index-2 points at level -1
    std::vector<CohClass> z0;    // components at level 0, in M_0
};

struct TFD {
    TfdParams params;
    SurfaceLattice lattice0;
    CohClass omega0;
    CohClass euler_min_plus;
    CohClass omega_m1, omega_p1;     // [omega_{-1}], [omega_1] in M_0
    CohClass euler_minus, euler_plus;
    std::vector<CohClass> blowdowns; // vanishing classes at level 1
    CohClass euler_top;              // e(P^-) below a point/sphere maximum, in M_0 (orthogonal to blowdowns)
    Int b_min = 0, b_max = 0, vol_min = 0, vol_max = 0;
    std::vector<FixedComponentRecord> components;
    Derived derived;
    std::string label;
    std::vector<std::string> flags;
    std::string key; // canonical key, identical for isomorphic data

    int count_points(int level) const;
    std::vector<int> critical_levels() const;
    std::vector<FixedComponentLocal> local_data() const;
    // normal-form bottom and top pieces plus the M_0-frame pieces
    std::vector<WallSegment> segments() const;
};

// Validate and complete a candidate. Returns nullopt (with a reason) if any filter fails.
std::optional<TFD> build_tfd(const TfdParams& p, std::string* why = nullptr);

// Orientation reversal; only for dim_min == dim_max.
std::optional<TfdParams> flip(const TFD& t);

// canonical key of this orientation (E permutations, x<->y symmetry)
std::string orientation_key(const TFD& t);
// canonical TFD among the orientations permitted by the conventions
TFD canonical(const TFD& t);

Derived derived_invariants(const TFD& t);

std::vector<TFD> enumerate_case(const CaseSpec& spec);

// every spec with dim_min <= dim_max allowed by the level table
std::vector<CaseSpec> admissible_specs();

struct Tables {
    std::vector<TFD> a; // point minimum
    std::vector<TFD> b; // sphere at both ends
    std::vector<TFD> c; // sphere or 4-manifold minimum with 4-manifold maximum
};

Tables all_tables();

// ---- four-dimensional table ----

struct TFD4 {
    CaseSpec spec;
    int k = 0;      // interior points
    Int a = 0;      // area of the minimal sphere (sphere minimum)
    Int b = 0;      // e(P_min^+) coefficient
    Int area_max = 0;
    std::string manifold;
    Int b2 = 0;
    std::string label;
    std::string euler_str() const;
};

std::vector<TFD4> enumerate_case_4dim(const CaseSpec& spec);
std::vector<TFD4> table4dim();

std::string to_string(Topology t);

} // namespace semifree
