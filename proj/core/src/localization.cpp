#include "semifree/localization.hpp"

#include <stdexcept>

namespace semifree {

namespace {

// Truncated equivariant cohomology of a fixed component Z of complex dimension n <= 2,
// tensored with Q[lambda, lambda^-1]. A homogeneous element of degree d is
//   a0 lambda^d + a1 lambda^(d-1) + a2 lambda^(d-2),  a1 in H^2(Z), a2 in H^4(Z).
// For a surface H^2 = Q q with q^2 = 0; for a 4-manifold H^2 is the lattice tensor Q.
struct Ring {
    int n = 0;
    int r = 0;
    const SurfaceLattice* lat = nullptr;

    Rational pair(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
        if (n < 2) return 0;
        Rational s = 0;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                Int g = lat->gram(i, j);
                if (g) s += a[i] * b[j] * g;
            }
        return s;
    }
};

struct Jet {
    int deg = 0;
    Rational a0;
    std::vector<Rational> a1;
    Rational a2;
};

Jet constant(const Ring& R, Rational v, int deg) {
    Jet j;
    j.deg = deg;
    j.a0 = std::move(v);
    j.a1.assign(R.r, Rational(0));
    return j;
}

Jet mul(const Ring& R, const Jet& x, const Jet& y) {
    Jet z;
    z.deg = x.deg + y.deg;
    z.a0 = x.a0 * y.a0;
    z.a1.resize(R.r);
    for (int i = 0; i < R.r; ++i) z.a1[i] = x.a0 * y.a1[i] + y.a0 * x.a1[i];
    z.a2 = x.a0 * y.a2 + y.a0 * x.a2 + R.pair(x.a1, y.a1);
    return z;
}

Jet power(const Ring& R, const Jet& x, int p) {
    Jet z = constant(R, 1, 0);
    for (int i = 0; i < p; ++i) z = mul(R, z, x);
    return z;
}

// 1/(a0 lambda^d (1 + y)) = a0^-1 lambda^-d (1 - y + y^2); y^3 = 0 in dimension <= 4
Jet inverse(const Ring& R, const Jet& x) {
    if (x.a0 == 0) throw std::domain_error("equivariant Euler class is not invertible");
    Jet y = constant(R, 0, 0);
    for (int i = 0; i < R.r; ++i) y.a1[i] = x.a1[i] / x.a0;
    y.a2 = x.a2 / x.a0;
    Jet y2 = mul(R, y, y);
    Jet s = constant(R, 1, 0);
    for (int i = 0; i < R.r; ++i) s.a1[i] = -y.a1[i] + y2.a1[i];
    s.a2 = -y.a2 + y2.a2;
    s.a0 = 1;
    Jet out = s;
    out.deg = -x.deg;
    out.a0 /= x.a0;
    for (auto& v : out.a1) v /= x.a0;
    out.a2 /= x.a0;
    return out;
}

LocalTerm integrate_over(const Ring& R, const Jet& x) {
    LocalTerm t;
    t.lambda_power = x.deg - R.n;
    if (R.n == 0) t.coeff = x.a0;
    else if (R.n == 1) t.coeff = x.a1[0];
    else t.coeff = x.a2;
    return t;
}

void check_power(int p) {
    if (p != 0 && p != 1 && p != 3) throw std::invalid_argument("localization supports powers 0, 1 and 3 only");
}

// lambda-linear element sigma*lambda + f, f in H^2
Jet linear(const Ring& R, Rational sigma, std::vector<Rational> f) {
    Jet j = constant(R, std::move(sigma), 1);
    j.a1 = std::move(f);
    return j;
}

LocalTerm surface_term(Rational s1, Rational b1, Rational s2, Rational b2, Rational cs, Rational cdeg, int p) {
    Ring R{1, 1, nullptr};
    Jet n = mul(R, linear(R, s1, {b1}), linear(R, s2, {b2}));
    Jet c = linear(R, cs, {cdeg});
    return integrate_over(R, mul(R, power(R, c, p), inverse(R, n)));
}

} // namespace

LocalTerm point_contribution(const std::array<int, 3>& w, int p) {
    check_power(p);
    for (int v : w)
        if (v != 1 && v != -1) throw std::invalid_argument("isolated fixed point weights must be +1 or -1");
    Ring R{0, 0, nullptr};
    Jet n = constant(R, w[0] * w[1] * w[2], 3);
    Jet c = constant(R, w[0] + w[1] + w[2], 1);
    return integrate_over(R, mul(R, power(R, c, p), inverse(R, n)));
}

LocalTerm interior_surface_contribution(const SurfaceLocal& s, int p) {
    check_power(p);
    return surface_term(-1, s.b_neg, 1, s.b_pos, 0, s.c1_deg, p);
}

LocalTerm extremal_surface_contribution(const ExtremalSurfaceLocal& s, int p) {
    check_power(p);
    // only d1 + d2 = b enters, so the split b = b + 0 is harmless
    Rational w = s.sign == Extremum::Min ? 1 : -1;
    return surface_term(w, s.b, w, 0, 2 * w, s.c1_deg, p);
}

LocalTerm extremal_fourmanifold_contribution(const FourManifoldLocal& f, int p) {
    check_power(p);
    const SurfaceLattice& lat = f.euler.lattice();
    Ring R{2, lat.rank(), &lat};
    Rational w = f.sign == Extremum::Min ? 1 : -1;
    std::vector<Rational> e(R.r);
    for (int i = 0; i < R.r; ++i) e[i] = w * Rational(f.euler[i]);
    Jet n = linear(R, w, e);
    auto c1v = lat.c1_coeffs();
    std::vector<Rational> cf(R.r);
    for (int i = 0; i < R.r; ++i) cf[i] = Rational(c1v[i]) + e[i];
    Jet c = linear(R, w, cf);
    return integrate_over(R, mul(R, power(R, c, p), inverse(R, n)));
}

LocalTerm contribution(const FixedComponentLocal& c, int p) {
    return std::visit(
        [p](const auto& v) -> LocalTerm {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PointLocal>) return point_contribution(v.weights, p);
            else if constexpr (std::is_same_v<T, SurfaceLocal>) return interior_surface_contribution(v, p);
            else if constexpr (std::is_same_v<T, ExtremalSurfaceLocal>) return extremal_surface_contribution(v, p);
            else return extremal_fourmanifold_contribution(v, p);
        },
        c);
}

Rational integrate(const std::vector<FixedComponentLocal>& components, int p) {
    Rational total = 0;
    for (const auto& c : components) {
        LocalTerm t = contribution(c, p);
        if (t.lambda_power != p - 3) throw std::logic_error("inhomogeneous localization term");
        total += t.coeff;
    }
    return total;
}

Rational chern_cubed_sphere_min_fourfold_max(Int b_min, Int m, const CohClass& e) {
    CohClass c = c1(e.lattice());
    return Rational(24 + 4 * b_min - m + 3 * pairing(c, c) - 3 * pairing(c, e) + pairing(e, e));
}

Rational chern_cubed_fourfold_both(const CohClass& e, const CohClass& z0) {
    CohClass c = c1(e.lattice());
    return Rational(2 * pairing(e, e) + 6 * pairing(c, c) - 3 * pairing(c, z0) + 2 * pairing(e, z0) +
                    pairing(z0, z0));
}

} // namespace semifree
