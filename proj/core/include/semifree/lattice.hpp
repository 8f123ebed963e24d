#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semifree {

using Int = std::int64_t;

enum class LatticeKind { ProjectivePlaneBlowup, SphereProductBlowup, HirzebruchBlowup };

// H^2 of a reduced space: X_k (basis u,E_1..E_k), S2xS2#k or E_S2#k (basis x,y,E_1..E_k).
class SurfaceLattice {
public:
    SurfaceLattice() = default;
    SurfaceLattice(LatticeKind kind, int k);

    static SurfaceLattice projective_plane(int k = 0) { return {LatticeKind::ProjectivePlaneBlowup, k}; }
    static SurfaceLattice sphere_product(int k = 0) { return {LatticeKind::SphereProductBlowup, k}; }
    static SurfaceLattice hirzebruch(int k = 0) { return {LatticeKind::HirzebruchBlowup, k}; }

    // accepts the names produced by name(): "X_3", "P2", "S2xS2#1", "E_S2#2"
    static SurfaceLattice parse(std::string_view name);

    LatticeKind kind() const { return kind_; }
    int blowups() const { return k_; }
    int rank() const { return first_exceptional() + k_; }
    int first_exceptional() const { return kind_ == LatticeKind::ProjectivePlaneBlowup ? 1 : 2; }
    bool is_even() const { return kind_ == LatticeKind::SphereProductBlowup && k_ == 0; }

    Int gram(int i, int j) const;
    std::vector<std::vector<Int>> gram_matrix() const;
    std::vector<Int> c1_coeffs() const;

    // the same lattice with n more exceptional classes appended
    SurfaceLattice blown_up(int n) const { return {kind_, k_ + n}; }

    std::string name() const;
    std::string basis_label(int i) const;

    // bilinear form on raw coefficient arrays of length rank()
    Int pair(const Int* a, const Int* b) const;

    auto operator<=>(const SurfaceLattice&) const = default;

private:
    LatticeKind kind_ = LatticeKind::ProjectivePlaneBlowup;
    int k_ = 0;
};

class CohClass {
public:
    CohClass() = default;
    CohClass(SurfaceLattice lat, std::vector<Int> coeffs);

    static CohClass zero(const SurfaceLattice& lat);
    static CohClass basis(const SurfaceLattice& lat, int i);
    // "2x + y - E1", "3u-E_1-E_2", "0"
    static CohClass parse(const SurfaceLattice& lat, std::string_view text);

    const SurfaceLattice& lattice() const { return lat_; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    int rank() const { return static_cast<int>(c_.size()); }
    bool is_zero() const;

    CohClass operator+(const CohClass& o) const;
    CohClass operator-(const CohClass& o) const;
    CohClass operator-() const;
    CohClass& operator+=(const CohClass& o);
    CohClass& operator-=(const CohClass& o);
    friend CohClass operator*(Int s, const CohClass& c);

    // zero-pad into a blow-up of the same family
    CohClass pulled_back(const SurfaceLattice& bigger) const;

    std::string str() const;

    bool operator==(const CohClass&) const = default;
    auto operator<=>(const CohClass& o) const {
        if (auto r = lat_ <=> o.lat_; r != 0) return r;
        return c_ <=> o.c_;
    }

private:
    SurfaceLattice lat_;
    std::vector<Int> c_;
};

Int pairing(const CohClass& a, const CohClass& b);
CohClass c1(const SurfaceLattice& lat);

bool convertible(const SurfaceLattice& from, const SurfaceLattice& to);
CohClass convert_basis(const CohClass& c, const SurfaceLattice& target);

// Sorted list of all C with C.C = -1, c1.C = 1 (blow-ups of P2 with at most 8 points).
// S2xS2 itself has none.
const std::vector<CohClass>& exceptional_classes(const SurfaceLattice& lat);

std::optional<Int> adjunction_genus(const CohClass& c);

} // namespace semifree
