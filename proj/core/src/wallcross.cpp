#include "semifree/wallcross.hpp"

#include <functional>
#include <stdexcept>

namespace semifree {

Rational QClass::pair(const QClass& o) const {
    if (lattice != o.lattice) throw std::invalid_argument("pairing across lattices");
    Rational s = 0;
    int r = lattice.rank();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Int g = lattice.gram(i, j);
            if (g) s += coeffs[i] * o.coeffs[j] * g;
        }
    return s;
}

Rational QClass::pair(const CohClass& o) const { return pair(to_q(o)); }

QClass to_q(const CohClass& c) {
    QClass q{c.lattice(), {}};
    for (Int v : c.coeffs()) q.coeffs.emplace_back(v);
    return q;
}

CohClass BlowDown::map(const CohClass& a) const {
    std::vector<Int> out(target.rank());
    for (const auto& c : contracted)
        if (pairing(a, c) != 0) throw std::invalid_argument("class not orthogonal to contracted classes");
    if (target.kind() == LatticeKind::SphereProductBlowup) {
        // a = alpha x + beta y with x.y = 1, x^2 = y^2 = 0
        out[0] = pairing(a, basis[1]);
        out[1] = pairing(a, basis[0]);
    } else {
        out[0] = pairing(a, basis[0]);
        for (int j = 1; j < target.rank(); ++j) out[j] = -pairing(a, basis[j]);
    }
    CohClass r(target, out);
    if (lift(r) != a) throw std::logic_error("blow-down basis does not span the orthogonal complement");
    return r;
}

CohClass BlowDown::lift(const CohClass& a) const {
    CohClass r = CohClass::zero(source);
    for (int j = 0; j < target.rank(); ++j) r += a[j] * basis[j];
    return r;
}

std::optional<BlowDown> blow_down(const SurfaceLattice& lat, const std::vector<CohClass>& classes) {
    const auto& ex = exceptional_classes(lat);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (pairing(classes[i], classes[i]) != -1 || pairing(c1(lat), classes[i]) != 1)
            throw std::invalid_argument("blow-down class is not exceptional: " + classes[i].str());
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (pairing(classes[i], classes[j]) != 0)
                throw std::invalid_argument("blow-down classes are not pairwise orthogonal");
    }
    BlowDown bd;
    bd.source = lat;
    bd.contracted = classes;
    int r = lat.rank() - static_cast<int>(classes.size());
    if (r < 1) return std::nullopt;
    CohClass cprime = c1(lat);
    for (const auto& c : classes) cprime += c;

    std::vector<const CohClass*> perp;
    for (const auto& e : ex) {
        bool ok = true;
        for (const auto& c : classes) ok = ok && pairing(e, c) == 0;
        if (ok) perp.push_back(&e);
    }
    auto divisible = [](const CohClass& c, Int d) {
        for (Int v : c.coeffs())
            if (v % d != 0) return false;
        return true;
    };
    auto divide = [](const CohClass& c, Int d) {
        auto v = c.coeffs();
        for (auto& x : v) x /= d;
        return CohClass(c.lattice(), v);
    };

    // even complement: S2xS2 with x = A + B for exceptional A, B meeting once
    if (r == 2 && perp.empty()) {
        if (!divisible(cprime, 2)) return std::nullopt;
        CohClass half = divide(cprime, 2);
        for (const auto& a : ex)
            for (const auto& b : ex) {
                if (pairing(a, b) != 1) continue;
                CohClass x = a + b;
                bool ok = true;
                for (const auto& c : classes) ok = ok && pairing(x, c) == 0;
                if (!ok) continue;
                CohClass y = half - x;
                if (pairing(y, y) != 0 || pairing(x, y) != 1) continue;
                bd.target = SurfaceLattice::sphere_product(0);
                bd.basis = {x, y};
                return bd;
            }
        return std::nullopt;
    }

    // odd complement: X_{r-1} with u' = (c1' + sum E')/3
    bd.target = SurfaceLattice::projective_plane(r - 1);
    std::vector<const CohClass*> chosen;
    std::function<bool(std::size_t)> search = [&](std::size_t from) -> bool {
        if (static_cast<int>(chosen.size()) == r - 1) {
            CohClass s = cprime;
            for (const auto* e : chosen) s += *e;
            if (!divisible(s, 3)) return false;
            CohClass u = divide(s, 3);
            if (pairing(u, u) != 1) return false;
            bd.basis = {u};
            for (const auto* e : chosen) bd.basis.push_back(*e);
            return true;
        }
        for (std::size_t i = from; i < perp.size(); ++i) {
            bool ok = true;
            for (const auto* e : chosen) ok = ok && pairing(*e, *perp[i]) == 0;
            if (!ok) continue;
            chosen.push_back(perp[i]);
            if (search(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (search(0)) return bd;
    return std::nullopt;
}

QClass class_at(const WallSegment& seg, const Rational& t) {
    if (t < seg.t_lo || t > seg.t_hi) throw std::out_of_range("t outside wall segment");
    QClass q{seg.lattice(), {}};
    Rational s = t - seg.t_lo;
    for (int i = 0; i < seg.lattice().rank(); ++i)
        q.coeffs.push_back(Rational(seg.omega_at_lo[i]) - s * Rational(seg.euler[i]));
    return q;
}

CohClass cross(const CohClass& euler_minus, const Crossing& x) {
    CohClass e = euler_minus;
    if (x.new_exceptional > 0) {
        SurfaceLattice big = e.lattice().blown_up(x.new_exceptional);
        e = e.pulled_back(big);
        for (int i = 0; i < x.new_exceptional; ++i)
            e += CohClass::basis(big, big.rank() - x.new_exceptional + i);
    }
    for (const auto& z : x.surface_classes) e += z;
    if (x.blowdown_classes.empty()) return e;
    for (const auto& c : x.blowdown_classes) e += c;
    auto bd = blow_down(e.lattice(), x.blowdown_classes);
    if (!bd) throw std::invalid_argument("blow-down classes do not contract to a standard lattice");
    return bd->map(e);
}

std::optional<Rational> vanishing_area_time(const WallSegment& seg, const CohClass& c) {
    Rational a0 = pairing(seg.omega_at_lo, c);
    Rational slope = -Rational(pairing(seg.euler, c));
    if (a0 == 0) return seg.t_lo;
    if (slope >= 0 || a0 < 0) return std::nullopt;
    Rational t = seg.t_lo - a0 / slope;
    if (t > seg.t_hi) return std::nullopt;
    return t;
}

Rational DHPiece::at(const Rational& t) const {
    Rational s = t - t_lo;
    return a0 + a1 * s + a2 * s * s;
}

VolumePolynomial volume_polynomial(const std::vector<WallSegment>& segments) {
    VolumePolynomial vp;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const auto& s = segments[i];
        DHPiece p{s.t_lo, s.t_hi, Rational(pairing(s.omega_at_lo, s.omega_at_lo)),
                  Rational(-2 * pairing(s.omega_at_lo, s.euler)), Rational(pairing(s.euler, s.euler))};
        // positivity inside: endpoints and vertex
        Rational len = s.t_hi - s.t_lo;
        bool ok = p.at(s.t_lo) >= 0 && p.at(s.t_hi) >= 0;
        if (p.a2 > 0) {
            Rational v = -p.a1 / (2 * p.a2);
            if (v > 0 && v < len && p.at(s.t_lo + v) <= 0) ok = false;
        } else if (p.a2 == 0 && p.a1 == 0 && p.a0 <= 0) {
            ok = false;
        } else if (p.a2 == 0 && p.at(s.t_lo) == 0 && p.at(s.t_hi) == 0) {
            ok = false;
        }
        if (!ok && vp.positive) {
            vp.positive = false;
            vp.failure = "DH not positive on (" + s.t_lo.str() + ", " + s.t_hi.str() + ")";
        }
        if (!vp.pieces.empty()) {
            const auto& prev = vp.pieces.back();
            if (prev.t_hi != p.t_lo || prev.at(prev.t_hi) != p.at(p.t_lo)) {
                if (vp.continuous) vp.failure = "DH jumps at t = " + p.t_lo.str();
                vp.continuous = false;
            }
        }
        vp.pieces.push_back(p);
    }
    return vp;
}

bool quadratic_positive(Int P, Int Q, Int R, Int len) {
    // f(s) = P - 2 Q s + R s^2
    Int f0 = P;
    Int f1 = P - 2 * Q * len + R * len * len;
    if (f0 < 0 || f1 < 0) return false;
    if (R > 0) {
        // vertex s* = Q / R
        if (Q > 0 && Q < R * len && P * R - Q * Q <= 0) return false;
        if (f0 == 0 && f1 == 0) return false;
    } else if (R == 0) {
        if (f0 == 0 && f1 == 0) return false;
    }
    return true;
}

bool positive_on_interval(const CohClass& omega, const CohClass& e, Int len,
                          const std::vector<const CohClass*>& exceptional) {
    const auto& lat = omega.lattice();
    auto affine_ok = [&](const Int* c) {
        Int a0 = lat.pair(omega.coeffs().data(), c);
        Int a1 = a0 - len * lat.pair(e.coeffs().data(), c);
        return a0 >= 0 && a1 >= 0 && (a0 > 0 || a1 > 0);
    };
    auto k = lat.c1_coeffs();
    if (!affine_ok(k.data())) return false;
    for (const auto* c : exceptional)
        if (!affine_ok(c->coeffs().data())) return false;
    Int P = pairing(omega, omega), Q = pairing(omega, e), R = pairing(e, e);
    return quadratic_positive(P, Q, R, len);
}

} // namespace semifree
