#include "semifree/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "semifree/splitter.hpp"

namespace semifree {

namespace {

constexpr Int kBox = 6;

int min_level_of(int dim, int real_dim) {
    if (real_dim == 4) return dim == 0 ? -2 : -1;
    return dim == 0 ? -3 : dim == 2 ? -2 : -1;
}

int max_level_of(int dim, int real_dim) { return -min_level_of(dim, real_dim); }

bool is_basis_vector(const CohClass& c, int idx) {
    for (int i = 0; i < c.rank(); ++i)
        if (c[i] != (i == idx ? 1 : 0)) return false;
    return true;
}

// coordinates of a in the basis B of a standard lattice `target` (B given inside a's lattice)
std::optional<CohClass> coordinates_in(const std::vector<CohClass>& B, const SurfaceLattice& target,
                                       const CohClass& a) {
    std::vector<Int> d(B.size());
    for (std::size_t j = 0; j < B.size(); ++j) d[j] = pairing(a, B[j]);
    std::vector<Int> c(B.size());
    int f = target.first_exceptional();
    switch (target.kind()) {
    case LatticeKind::ProjectivePlaneBlowup: c[0] = d[0]; break;
    case LatticeKind::SphereProductBlowup: c[0] = d[1]; c[1] = d[0]; break;
    case LatticeKind::HirzebruchBlowup: c[0] = d[0] + d[1]; c[1] = d[0]; break;
    }
    for (std::size_t j = static_cast<std::size_t>(f); j < B.size(); ++j) c[j] = -d[j];
    CohClass out(target, c);
    CohClass back = CohClass::zero(a.lattice());
    for (std::size_t j = 0; j < B.size(); ++j) back += c[j] * B[j];
    if (back != a) return std::nullopt;
    return out;
}

std::string surface_type(Int g) {
    if (g == 0) return "S2";
    if (g == 1) return "T2";
    return "Sigma_" + std::to_string(g);
}

std::string del_pezzo_name(const SurfaceLattice& L) {
    // by rank and parity only, so the name does not depend on the chosen frame
    if (L.rank() == 1) return "P2";
    if (L.is_even()) return "S2xS2";
    return "X_" + std::to_string(L.rank() - 1);
}

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

} // namespace

bool CaseSpec::has(int level) const { return std::find(crit.begin(), crit.end(), level) != crit.end(); }

std::string CaseSpec::str() const {
    std::string s = "(" + std::to_string(dim_min) + "," + std::to_string(dim_max) + ",{";
    for (std::size_t i = 0; i < crit.size(); ++i) s += (i ? "," : "") + std::to_string(crit[i]);
    return s + "})";
}

// "(dmin,dmax,{c1,...,cn})", spaces allowed between tokens
CaseSpec CaseSpec::parse(const std::string& text) {
    std::size_t i = 0;
    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("bad case spec at offset " + std::to_string(i) + ": " + text);
    };
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char ch) {
        skip();
        if (i >= text.size() || text[i] != ch) throw bad();
        ++i;
    };
    auto number = [&] {
        skip();
        std::size_t j = i;
        if (j < text.size() && text[j] == '-') ++j;
        std::size_t d = j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == d || j - d > 3) throw bad();
        int v = std::stoi(text.substr(i, j - i));
        i = j;
        return v;
    };
    CaseSpec s;
    expect('(');
    s.dim_min = number();
    expect(',');
    s.dim_max = number();
    expect(',');
    expect('{');
    s.crit.push_back(number());
    skip();
    while (i < text.size() && text[i] == ',') {
        ++i;
        s.crit.push_back(number());
        skip();
    }
    expect('}');
    expect(')');
    skip();
    if (i != text.size()) throw bad();
    std::sort(s.crit.begin(), s.crit.end());
    return s;
}

void CaseSpec::validate(int real_dim) const {
    auto bad = [&](const std::string& m) { throw std::invalid_argument("unsupported case " + str() + ": " + m); };
    auto ok_dim = [&](int d) { return d == 0 || d == 2 || (real_dim == 6 && d == 4); };
    if (!ok_dim(dim_min) || !ok_dim(dim_max)) bad("extremal dimension");
    if (crit.size() < 2) bad("needs both extremal levels");
    if (!std::is_sorted(crit.begin(), crit.end()) || std::adjacent_find(crit.begin(), crit.end()) != crit.end())
        bad("levels must be strictly increasing");
    if (crit.front() != min_level_of(dim_min, real_dim)) bad("minimum level does not match its dimension");
    if (crit.back() != max_level_of(dim_max, real_dim)) bad("maximum level does not match its dimension");
    for (std::size_t i = 1; i + 1 < crit.size(); ++i) {
        int c = crit[i];
        bool allowed = real_dim == 6 ? (c >= -1 && c <= 1) : c == 0;
        if (!allowed) bad("interior level " + std::to_string(c));
    }
}

std::string to_string(Topology t) {
    switch (t) {
    case Topology::Point: return "point";
    case Topology::Sphere: return "sphere";
    case Topology::Surface: return "surface";
    case Topology::FourManifold: return "fourmanifold";
    }
    return {};
}

FixedComponentLocal FixedComponentRecord::local() const {
    switch (dim) {
    case 0: return PointLocal{weights};
    case 2:
        if (level == -2) return ExtremalSurfaceLocal{Extremum::Min, b, volume};
        if (level == 2) return ExtremalSurfaceLocal{Extremum::Max, b, volume};
        return SurfaceLocal{b_neg, b_pos, volume};
    default: return FourManifoldLocal{level < 0 ? Extremum::Min : Extremum::Max, *euler};
    }
}

int TFD::count_points(int level) const {
    return static_cast<int>(std::count_if(components.begin(), components.end(),
                                          [&](const auto& c) { return c.dim == 0 && c.level == level; }));
}

std::vector<int> TFD::critical_levels() const {
    std::set<int> s;
    for (const auto& c : components) s.insert(c.level);
    return {s.begin(), s.end()};
}

std::vector<FixedComponentLocal> TFD::local_data() const {
    std::vector<FixedComponentLocal> out;
    for (const auto& c : components) out.push_back(c.local());
    return out;
}

std::vector<WallSegment> TFD::segments() const {
    std::vector<WallSegment> segs;
    const auto& spec = params.spec;
    const SurfaceLattice& L = lattice0;
    if (spec.dim_min == 0) {
        auto P = SurfaceLattice::projective_plane(0);
        segs.push_back({-3, -1, CohClass::zero(P), CohClass(P, {-1})});
    } else if (spec.dim_min == 2) {
        const auto& S = params.seed;
        segs.push_back({-2, -1, vol_min * CohClass::basis(S, 0), params.seed_euler});
    }
    segs.push_back({-1, 0, omega_m1, euler_minus});
    segs.push_back({0, 1, c1(L), euler_plus});
    if (spec.dim_max == 0) {
        auto P = SurfaceLattice::projective_plane(0);
        segs.push_back({1, 3, CohClass(P, {2}), CohClass(P, {1})});
    } else if (spec.dim_max == 2) {
        // normal form near a sphere maximum: omega_t = V x + (2 - t) e, e = y + j x, e.x = 1, e^2 = -b_max
        bool even = b_max % 2 == 0;
        auto S = even ? SurfaceLattice::sphere_product(0) : SurfaceLattice::hirzebruch(0);
        Int j = even ? -b_max / 2 : (1 - b_max) / 2;
        CohClass e(S, {j, 1});
        CohClass top = vol_max * CohClass::basis(S, 0);
        segs.push_back({1, 2, top + e, e});
    }
    return segs;
}

Derived derived_invariants(const TFD& t) {
    Derived d;
    auto& P = d.poincare;
    for (const auto& c : t.components) {
        int lvl = c.level;
        switch (c.dim) {
        case 0: {
            int idx = 0;
            for (int w : c.weights) idx += w < 0 ? 2 : 0;
            P[idx] += 1;
            break;
        }
        case 2:
            if (lvl == -2) { P[0] += 1; P[2] += 1; }
            else if (lvl == 2) { P[4] += 1; P[6] += 1; }
            else { P[2] += 1; P[3] += 2 * c.genus; P[4] += 1; }
            break;
        default: {
            Int r = c.euler->lattice().rank();
            int s = lvl < 0 ? 0 : 2;
            P[s] += 1;
            P[s + 2] += r;
            P[s + 4] += 1;
        }
        }
    }
    d.b2 = P[2];
    d.b_odd = P[1] + P[3] + P[5];
    auto loc = t.local_data();
    d.p0 = integrate(loc, 0);
    d.p1 = integrate(loc, 1);
    Rational c3 = integrate(loc, 3);
    if (!is_integer(c3)) throw std::logic_error("non-integral Chern number");
    d.c1_cubed = static_cast<Int>(boost::multiprecision::numerator(c3));
    return d;
}

std::optional<TFD> build_tfd(const TfdParams& p, std::string* why) {
    const CaseSpec& spec = p.spec;
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        fail(why, e.what());
        return std::nullopt;
    }
    auto reject = [&](const std::string& m) -> std::optional<TFD> {
        fail(why, m);
        return std::nullopt;
    };
    TFD t;
    t.params = p;

    // bottom normal form
    CohClass omega_seed_m1;
    if (spec.dim_min == 0) {
        if (p.seed != SurfaceLattice::projective_plane(0) || p.seed_euler != CohClass(p.seed, {-1}))
            return reject("point minimum needs seed (P2, -u)");
        omega_seed_m1 = CohClass(p.seed, {2});
    } else if (spec.dim_min == 2) {
        if (p.seed.blowups() != 0 || p.seed.kind() == LatticeKind::ProjectivePlaneBlowup)
            return reject("sphere minimum needs an S2-bundle seed");
        if (p.seed_euler.lattice() != p.seed || p.seed_euler[1] != -1)
            return reject("seed Euler class must be k x - y");
        t.b_min = -pairing(p.seed_euler, p.seed_euler);
        t.vol_min = 2 + t.b_min;
        if (t.vol_min < 1) return reject("minimal sphere has non-positive area");
        CohClass w2 = t.vol_min * CohClass::basis(p.seed, 0);
        std::vector<const CohClass*> ex;
        for (const auto& c : exceptional_classes(p.seed)) ex.push_back(&c);
        if (!positive_on_interval(w2, p.seed_euler, 1, ex)) return reject("not positive on (-2,-1)");
        omega_seed_m1 = w2 - p.seed_euler;
    } else {
        if (p.seed_euler.lattice() != p.seed) return reject("seed Euler class in wrong lattice");
        if (p.m_minus != 0) return reject("no points below a 4-dimensional minimum");
        omega_seed_m1 = c1(p.seed) + p.seed_euler;
    }
    if (spec.dim_min != 4 && spec.has(-1) != (p.m_minus > 0)) return reject("points at -1 do not match levels");
    if (p.seed.rank() + p.m_minus > 9) return reject("more than 8 blow-ups");

    const SurfaceLattice L = p.seed.blown_up(p.m_minus);
    t.lattice0 = L;
    t.omega0 = c1(L);
    t.euler_min_plus = p.seed_euler;
    t.euler_minus = cross(p.seed_euler, Crossing{-1, p.m_minus, {}, {}});
    t.omega_m1 = omega_seed_m1.pulled_back(L);
    if (t.omega_m1 - t.euler_minus != t.omega0) return reject("reduced space at 0 is not monotone");

    const auto& exl = exceptional_classes(L);
    std::vector<const CohClass*> ex;
    for (const auto& c : exl) ex.push_back(&c);
    int first_new = L.rank() - p.m_minus;
    for (const auto& c : exl) {
        Int a = pairing(t.omega_m1, c);
        bool fresh = false;
        for (int i = first_new; i < L.rank(); ++i) fresh = fresh || is_basis_vector(c, i);
        if (fresh ? a != 0 : a < 1) return reject("wrong vanishing at -1: " + c.str());
    }
    if (spec.dim_min == 4) {
        t.vol_min = pairing(t.omega_m1, t.omega_m1);
        if (t.vol_min < 1 || pairing(t.omega0, t.omega_m1) < 1) return reject("minimum has no volume");
    }
    if (!positive_on_interval(t.omega_m1, t.euler_minus, 1, ex)) return reject("not positive on (-1,0)");

    // level 0
    if (spec.has(0) != !p.z0.empty()) return reject("surfaces at 0 do not match levels");
    CohClass z0 = CohClass::zero(L);
    for (const auto& z : p.z0) {
        if (z.lattice() != L) return reject("surface class in wrong lattice");
        z0 += z;
    }
    if (!p.z0.empty()) {
        Splitting want;
        for (const auto& z : p.z0) {
            auto g = adjunction_genus(z);
            if (!g) return reject("no genus for " + z.str());
            want.parts.push_back({z, *g});
        }
        std::sort(want.parts.begin(), want.parts.end());
        auto all = enumerate_splittings(z0, t.omega0);
        if (!std::binary_search(all.begin(), all.end(), want)) return reject("surface splitting not realizable");
    }
    t.euler_plus = t.euler_minus + z0;
    t.omega_p1 = t.omega0 - t.euler_plus;
    if (!positive_on_interval(t.omega0, t.euler_plus, 1, ex)) return reject("not positive on (0,1)");

    // level 1
    if (spec.dim_max == 4) {
        for (const auto& c : exl)
            if (pairing(t.omega_p1, c) < 1) return reject("maximum not positive on " + c.str());
        t.vol_max = pairing(t.omega_p1, t.omega_p1);
        if (t.vol_max < 1 || pairing(t.omega0, t.omega_p1) < 1) return reject("maximum has no volume");
    } else {
        for (const auto& c : exl) {
            Int a = pairing(t.omega_p1, c);
            if (a < 0) return reject("negative area at 1");
            if (a == 0) t.blowdowns.push_back(c);
        }
        for (std::size_t i = 0; i < t.blowdowns.size(); ++i)
            for (std::size_t j = i + 1; j < t.blowdowns.size(); ++j)
                if (pairing(t.blowdowns[i], t.blowdowns[j]) != 0) return reject("vanishing classes intersect");
        int m_plus = static_cast<int>(t.blowdowns.size());
        if (spec.has(1) != (m_plus > 0)) return reject("points at 1 do not match levels");
        CohClass e2 = t.euler_plus;
        for (const auto& c : t.blowdowns) {
            if (pairing(t.euler_plus, c) != 1) return reject("Euler class does not meet vanishing class once");
            e2 += c;
        }
        t.euler_top = e2;
        std::vector<const CohClass*> perp;
        for (const auto* c : ex) {
            bool ok = true;
            for (const auto& b : t.blowdowns) ok = ok && pairing(*c, b) == 0;
            if (ok) perp.push_back(c);
        }
        int r = L.rank() - m_plus;
        if (spec.dim_max == 0) {
            if (r != 1) return reject("point maximum needs rank one after blow-down");
            if (pairing(e2, e2) != 1 || pairing(t.omega0, e2) != 3) return reject("top Euler class is not a line");
            if (t.omega_p1 != 2 * e2) return reject("omega_1 is not 2e at a point maximum");
        } else {
            if (r != 2) return reject("sphere maximum needs rank two after blow-down");
            CohClass w2 = t.omega_p1 - e2;
            Int g = 0;
            for (Int v : w2.coeffs()) g = std::gcd(g, v < 0 ? -v : v);
            if (g == 0) return reject("maximal sphere has zero area");
            auto xs = w2.coeffs();
            for (auto& v : xs) v /= g;
            CohClass x(L, xs);
            if (pairing(x, x) != 0 || pairing(t.omega0, x) != 2 || pairing(e2, x) != 1)
                return reject("omega_2 is not a multiple of a fiber class");
            t.b_max = -pairing(e2, e2);
            t.vol_max = g;
            if (t.vol_max != 2 + t.b_max) return reject("maximal sphere area differs from 2 + b_max");
            if (!positive_on_interval(t.omega_p1, e2, 1, perp)) return reject("not positive on (1,2)");
        }
    }

    // components
    auto add = [&](FixedComponentRecord r) { t.components.push_back(std::move(r)); };
    if (spec.dim_min == 0) {
        FixedComponentRecord r;
        r.level = -3; r.dim = 0; r.weights = {1, 1, 1}; r.type = "pt";
        add(r);
    } else if (spec.dim_min == 2) {
        FixedComponentRecord r;
        r.level = -2; r.dim = 2; r.topology = Topology::Sphere; r.b = t.b_min; r.volume = t.vol_min; r.type = "S2";
        add(r);
    } else {
        FixedComponentRecord r;
        r.level = -1; r.dim = 4; r.topology = Topology::FourManifold; r.euler = t.euler_minus;
        r.volume = t.vol_min; r.type = del_pezzo_name(L);
        add(r);
    }
    for (int i = 0; i < p.m_minus; ++i) {
        FixedComponentRecord r;
        r.level = -1; r.dim = 0; r.weights = {-1, 1, 1}; r.type = "pt";
        add(r);
    }
    auto zs = p.z0;
    std::sort(zs.begin(), zs.end());
    for (const auto& z : zs) {
        FixedComponentRecord r;
        r.level = 0; r.dim = 2; r.cls = z; r.genus = *adjunction_genus(z);
        r.topology = r.genus == 0 ? Topology::Sphere : Topology::Surface;
        r.b_neg = -pairing(t.euler_minus, z);
        r.b_pos = pairing(t.euler_plus, z);
        r.volume = pairing(t.omega0, z);
        r.type = surface_type(r.genus);
        add(r);
    }
    for (std::size_t i = 0; i < t.blowdowns.size(); ++i) {
        FixedComponentRecord r;
        r.level = 1; r.dim = 0; r.weights = {-1, -1, 1}; r.type = "pt";
        add(r);
    }
    if (spec.dim_max == 0) {
        FixedComponentRecord r;
        r.level = 3; r.dim = 0; r.weights = {-1, -1, -1}; r.type = "pt";
        add(r);
    } else if (spec.dim_max == 2) {
        FixedComponentRecord r;
        r.level = 2; r.dim = 2; r.topology = Topology::Sphere; r.b = t.b_max; r.volume = t.vol_max; r.type = "S2";
        add(r);
    } else {
        FixedComponentRecord r;
        r.level = 1; r.dim = 4; r.topology = Topology::FourManifold; r.euler = t.euler_plus;
        r.volume = t.vol_max; r.type = del_pezzo_name(L);
        add(r);
    }

    auto vp = volume_polynomial(t.segments());
    if (!vp.continuous || !vp.positive) return reject("Duistermaat-Heckman check: " + vp.failure);

    t.derived = derived_invariants(t);
    if (t.derived.p0 != 0 || t.derived.p1 != 0) return reject("localization of c1^0 or c1^1 does not vanish");
    return t;
}

std::optional<TfdParams> flip(const TFD& t) {
    const auto& spec = t.params.spec;
    if (spec.dim_min != spec.dim_max) return std::nullopt;
    TfdParams q;
    q.spec.dim_min = spec.dim_min;
    q.spec.dim_max = spec.dim_max;
    for (auto it = spec.crit.rbegin(); it != spec.crit.rend(); ++it) q.spec.crit.push_back(-*it);
    const SurfaceLattice& L = t.lattice0;
    if (spec.dim_min == 4) {
        q.seed = L;
        q.seed_euler = -t.euler_plus;
        q.z0 = t.params.z0;
        return q;
    }
    std::vector<CohClass> B;
    SurfaceLattice target;
    int m = static_cast<int>(t.blowdowns.size());
    if (spec.dim_min == 0) {
        q.seed = SurfaceLattice::projective_plane(0);
        q.seed_euler = CohClass(q.seed, {-1});
        B.push_back(t.euler_top);
        target = q.seed.blown_up(m);
    } else {
        auto xs = (t.omega_p1 - t.euler_top).coeffs();
        for (auto& v : xs) v /= t.vol_max;
        CohClass x(L, xs);
        bool even = t.b_max % 2 == 0;
        Int k = even ? t.b_max / 2 : (t.b_max - 1) / 2;
        CohClass y = k * x + t.euler_top;
        q.seed = even ? SurfaceLattice::sphere_product(0) : SurfaceLattice::hirzebruch(0);
        q.seed_euler = CohClass(q.seed, {k, -1});
        B = {x, y};
        target = q.seed.blown_up(m);
    }
    for (const auto& c : t.blowdowns) B.push_back(c);
    q.m_minus = m;
    for (const auto& z : t.params.z0) {
        auto img = coordinates_in(B, target, z);
        if (!img) return std::nullopt;
        q.z0.push_back(*img);
    }
    return q;
}

namespace {

// canonical representative of params under E permutations (and x<->y on S2xS2)
// 4-manifold frames other than S2xS2 are moved to the P2 blow-up model
TfdParams normalized(const TfdParams& p) {
    if (p.spec.dim_min != 4 || p.seed.kind() == LatticeKind::ProjectivePlaneBlowup || p.seed.is_even()) return p;
    SurfaceLattice X = SurfaceLattice::projective_plane(p.seed.blowups() + 1);
    TfdParams q = p;
    q.seed = X;
    q.seed_euler = convert_basis(p.seed_euler, X);
    for (auto& z : q.z0) z = convert_basis(z, X);
    return q;
}

std::pair<std::string, TfdParams> canonical_params(const TfdParams& p0) {
    const TfdParams p = normalized(p0);
    const SurfaceLattice L = p.seed.blown_up(p.m_minus);
    bool seed_is_L = p.spec.dim_min == 4;
    int f = L.first_exceptional();
    int n = L.blowups();

    auto encode = [&](const TfdParams& q) {
        std::ostringstream os;
        os << q.spec.str() << "|" << q.seed.name() << "|" << q.seed_euler.str() << "|" << q.m_minus << "|";
        auto zs = q.z0;
        std::sort(zs.begin(), zs.end());
        for (const auto& z : zs) {
            os << "[";
            for (Int v : z.coeffs()) os << v << ",";
            os << "]";
        }
        return os.str();
    };
    auto permute = [&](const CohClass& c, const std::vector<int>& perm) {
        auto v = c.coeffs();
        auto w = v;
        for (int i = 0; i < n; ++i) w[f + i] = v[f + perm[i]];
        return CohClass(c.lattice(), w);
    };
    auto apply = [&](const TfdParams& q, const std::vector<int>& perm) {
        TfdParams r = q;
        if (seed_is_L) r.seed_euler = permute(q.seed_euler, perm);
        for (auto& z : r.z0) z = permute(z, perm);
        std::sort(r.z0.begin(), r.z0.end());
        return r;
    };

    std::vector<TfdParams> starts{p};
    if (seed_is_L && L == SurfaceLattice::sphere_product(0)) {
        auto swap = [](const CohClass& c) { return CohClass(c.lattice(), {c[1], c[0]}); };
        TfdParams s = p;
        s.seed_euler = swap(p.seed_euler);
        for (auto& z : s.z0) z = swap(z);
        starts.push_back(s);
    }

    std::string best_key;
    TfdParams best;
    bool have = false;
    for (const auto& s0 : starts) {
        // sort E columns by (seed euler, sum of Z0) and enumerate permutations inside ties
        CohClass tot = CohClass::zero(L);
        for (const auto& z : s0.z0) tot += z;
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        auto col = [&](int i) {
            Int a = seed_is_L ? s0.seed_euler[f + i] : 0;
            return std::make_pair(a, tot[f + i]);
        };
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return col(a) < col(b); });
        std::vector<std::pair<int, int>> groups;
        for (int i = 0; i < n;) {
            int j = i;
            while (j < n && col(order[j]) == col(order[i])) ++j;
            groups.push_back({i, j});
            i = j;
        }
        std::function<void(std::size_t)> rec = [&](std::size_t g) {
            if (g == groups.size()) {
                auto q = apply(s0, order);
                auto k = encode(q);
                if (!have || k < best_key) {
                    best_key = k;
                    best = q;
                    have = true;
                }
                return;
            }
            auto [lo, hi] = groups[g];
            std::sort(order.begin() + lo, order.begin() + hi);
            do {
                rec(g + 1);
            } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
        };
        rec(0);
    }
    return {best_key, best};
}

} // namespace

std::string orientation_key(const TFD& t) { return canonical_params(t.params).first; }

TFD canonical(const TFD& t) {
    auto [k0, p0] = canonical_params(t.params);
    const auto& spec = t.params.spec;
    auto finish = [](TfdParams p, const std::string& key) {
        auto r = build_tfd(p);
        if (!r) throw std::logic_error("canonical representative failed validation");
        r->key = key;
        return *r;
    };
    if (spec.dim_min != spec.dim_max) return finish(p0, k0);
    auto fp = flip(t);
    if (!fp) throw std::logic_error("orientation reversal failed");
    auto ft = build_tfd(*fp);
    if (!ft) throw std::logic_error("reversed data failed validation");
    auto [k1, p1] = canonical_params(ft->params);
    bool keep_first;
    if (spec.dim_min == 2 && t.b_min != ft->b_min) keep_first = t.b_min < ft->b_min;
    else if (spec.dim_min == 4 && t.vol_min != ft->vol_min) keep_first = t.vol_min > ft->vol_min;
    else keep_first = k0 <= k1;
    return keep_first ? finish(p0, k0) : finish(p1, k1);
}

namespace {

// Classes in L with coefficients in [-box, box], every exceptional area >= min_area,
// c1-degree in [deg_lo, deg_hi]. E coefficients are nonincreasing inside each tie group.
std::vector<CohClass> enumerate_classes(const SurfaceLattice& L, Int min_area, Int deg_lo, Int deg_hi,
                                        const std::vector<int>& group_of, bool swap_sorted) {
    std::vector<CohClass> out;
    int f = L.first_exceptional();
    int r = L.rank();
    const auto& exl = exceptional_classes(L);
    std::vector<std::vector<const CohClass*>> by_last(r);
    for (const auto& c : exl) {
        int last = 0;
        for (int i = 0; i < r; ++i)
            if (c[i] != 0) last = i;
        by_last[last].push_back(&c);
    }
    auto c1v = L.c1_coeffs();
    std::vector<Int> v(r, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i > 0) {
            for (const auto* c : by_last[i - 1])
                if (L.pair(v.data(), c->coeffs().data()) < min_area) return;
        }
        if (i >= f) {
            // c1.v for the assigned part; each remaining E contributes its coefficient, at most -min_area
            std::vector<Int> part(v.begin(), v.begin() + i);
            part.resize(r, 0);
            Int deg = L.pair(c1v.data(), part.data());
            int rest = r - i;
            if (deg - rest * min_area < deg_lo) return;
            if (deg - rest * kBox > deg_hi) return;
        }
        if (i == r) {
            CohClass c(L, v);
            Int deg = pairing(c1(L), c);
            if (deg < deg_lo || deg > deg_hi) return;
            out.push_back(c);
            return;
        }
        Int hi = kBox;
        if (i >= f + 1 && group_of[i - f] == group_of[i - f - 1]) hi = v[i - 1];
        if (swap_sorted && i == 1) hi = std::min(hi, v[0]);
        for (Int x = -kBox; x <= hi; ++x) {
            v[i] = x;
            rec(i + 1);
        }
        v[i] = 0;
    };
    rec(0);
    return out;
}

bool touches_box(const CohClass& c) {
    for (Int v : c.coeffs())
        if (v == kBox || v == -kBox) return true;
    return false;
}

struct Seed {
    SurfaceLattice lat;
    CohClass e;
};

std::vector<Seed> seeds_for(const CaseSpec& spec) {
    std::vector<Seed> out;
    if (spec.dim_min == 0) {
        auto P = SurfaceLattice::projective_plane(0);
        out.push_back({P, CohClass(P, {-1})});
    } else if (spec.dim_min == 2) {
        for (auto S : {SurfaceLattice::sphere_product(0), SurfaceLattice::hirzebruch(0)})
            for (Int k = -kBox; k <= kBox; ++k) out.push_back({S, CohClass(S, {k, -1})});
    } else {
        std::vector<SurfaceLattice> Ls{SurfaceLattice::projective_plane(0), SurfaceLattice::sphere_product(0)};
        for (int k = 1; k <= 8; ++k) Ls.push_back(SurfaceLattice::projective_plane(k));
        for (const auto& L : Ls) {
            Int c2 = pairing(c1(L), c1(L));
            std::vector<int> groups(L.blowups(), 0);
            bool sw = L == SurfaceLattice::sphere_product(0);
            for (const auto& w : enumerate_classes(L, 1, 1, 2 * c2 - 1, groups, sw)) {
                if (pairing(w, w) < 1) continue;
                out.push_back({L, w - c1(L)});
            }
        }
    }
    return out;
}

} // namespace

std::vector<TFD> enumerate_case(const CaseSpec& spec) {
    spec.validate();
    std::map<std::string, TFD> found;
    std::vector<std::string> binding;
    for (const auto& seed : seeds_for(spec)) {
        int mlo = 0, mhi = 0;
        if (spec.dim_min != 4 && spec.has(-1)) {
            mlo = 1;
            mhi = 9 - seed.lat.rank();
        }
        for (int m = mlo; m <= mhi; ++m) {
            TfdParams base{spec, seed.lat, seed.e, m, {}};
            const SurfaceLattice L = seed.lat.blown_up(m);
            if (!spec.has(0)) {
                if (auto t = build_tfd(base)) {
                    auto c = canonical(*t);
                    found.emplace(c.key, c);
                }
                continue;
            }
            // quick screen of the part below 0 through a Z0-free probe
            CohClass em = cross(seed.e, Crossing{-1, m, {}, {}});
            CohClass ws = c1(seed.lat) + seed.e;
            if (spec.dim_min == 0) ws = CohClass(seed.lat, {2});
            if (spec.dim_min == 2) {
                Int V = 2 - pairing(seed.e, seed.e);
                if (V < 1) continue;
                ws = V * CohClass::basis(seed.lat, 0) - seed.e;
            }
            CohClass wm1 = ws.pulled_back(L);
            if (wm1 - em != c1(L)) continue;
            {
                std::vector<const CohClass*> ex;
                for (const auto& c : exceptional_classes(L)) ex.push_back(&c);
                if (!positive_on_interval(wm1, em, 1, ex)) continue;
            }
            // tie groups of E columns of the data below 0
            int f = L.first_exceptional();
            std::vector<int> groups(L.blowups(), 0);
            for (int i = 1; i < L.blowups(); ++i) {
                bool same = wm1[f + i] == wm1[f + i - 1] && em[f + i] == em[f + i - 1];
                groups[i] = same ? groups[i - 1] : groups[i - 1] + 1;
            }
            Int min_area = spec.dim_max == 4 ? 1 : 0;
            Int c2 = pairing(c1(L), c1(L));
            Int deg_hi = 2 * c2 - pairing(c1(L), wm1) - 1;
            for (const auto& w1 : enumerate_classes(L, min_area, 1, deg_hi, groups, false)) {
                CohClass z0 = 2 * c1(L) - wm1 - w1;
                CohClass ep = c1(L) - w1;
                {
                    std::vector<const CohClass*> ex;
                    for (const auto& c : exceptional_classes(L)) ex.push_back(&c);
                    if (!positive_on_interval(c1(L), ep, 1, ex)) continue;
                }
                for (const auto& s : enumerate_splittings(z0, c1(L))) {
                    TfdParams p = base;
                    for (const auto& part : s.parts) p.z0.push_back(part.cls);
                    auto t = build_tfd(p);
                    if (!t) continue;
                    if (touches_box(w1) || touches_box(wm1)) binding.push_back(spec.str());
                    auto c = canonical(*t);
                    found.emplace(c.key, c);
                }
            }
        }
    }
    if (!binding.empty()) throw std::logic_error("coefficient box is binding in case " + binding.front());
    std::vector<TFD> out;
    for (auto& [k, t] : found) out.push_back(t);
    return out;
}

std::vector<CaseSpec> admissible_specs() {
    std::vector<CaseSpec> out;
    for (int dmin : {0, 2, 4})
        for (int dmax : {0, 2, 4}) {
            if (dmin > dmax) continue;
            int lo = min_level_of(dmin, 6), hi = max_level_of(dmax, 6);
            std::vector<int> interior;
            for (int c = lo + 1; c < hi; ++c)
                if (c >= -1 && c <= 1) interior.push_back(c);
            int n = static_cast<int>(interior.size());
            for (int mask = 0; mask < (1 << n); ++mask) {
                CaseSpec s{dmin, dmax, {lo}};
                for (int i = 0; i < n; ++i)
                    if (mask & (1 << i)) s.crit.push_back(interior[i]);
                s.crit.push_back(hi);
                out.push_back(s);
            }
        }
    return out;
}

Tables all_tables() {
    Tables t;
    for (const auto& spec : admissible_specs()) {
        auto rows = enumerate_case(spec);
        auto& dst = spec.dim_min == 0 ? t.a : (spec.dim_min == 2 && spec.dim_max == 2) ? t.b : t.c;
        dst.insert(dst.end(), rows.begin(), rows.end());
    }
    return t;
}

// ---- four-dimensional table ----

std::string TFD4::euler_str() const {
    if (b == 0) return "0";
    if (b == 1) return "u";
    if (b == -1) return "-u";
    return std::to_string(b) + "u";
}

std::vector<TFD4> enumerate_case_4dim(const CaseSpec& spec) {
    spec.validate(4);
    std::vector<TFD4> out;
    bool pts = spec.has(0);
    auto finish = [&](TFD4 r, bool sphere_min, bool sphere_max) {
        // Poincare: b2 = (#pts at 0) + (min sphere) + (max sphere) [+1 for two point extremes]
        r.b2 = r.k + (sphere_min ? 1 : 0) + (sphere_max ? 1 : 0);
        bool even;
        if (!sphere_min && !sphere_max) {
            r.b2 = r.k;
            even = true; // gradient spheres from the minimum: square 0, meeting once
        } else if (!sphere_min || !sphere_max) {
            even = false; // a fiber through the maximal sphere has square 1
        } else {
            even = r.k == 0 && (r.a - 2) % 2 == 0;
        }
        if (r.b2 == 1) r.manifold = "P2";
        else if (r.b2 == 2 && even) r.manifold = "S2xS2";
        else r.manifold = "X_" + std::to_string(r.b2 - 1);
        out.push_back(r);
    };
    if (spec.dim_min == 0 && spec.dim_max == 0) {
        for (int k = 0; k <= 2 * kBox; ++k) {
            if ((k > 0) != pts) continue;
            // e(P_{-2}^+) = -u, e(P_2^-) = u
            if (-1 + k != 1) continue;
            TFD4 r;
            r.spec = spec; r.k = k; r.a = 0; r.b = -1; r.area_max = 0;
            finish(r, false, false);
        }
    } else if (spec.dim_min == 0 && spec.dim_max == 2) {
        for (int k = 0; k <= 2 * kBox; ++k) {
            if ((k > 0) != pts) continue;
            Int w1 = 2 - (-1 + k);
            if (w1 < 1) continue;
            TFD4 r;
            r.spec = spec; r.k = k; r.a = 0; r.b = -1; r.area_max = w1;
            finish(r, false, true);
        }
    } else if (spec.dim_min == 2 && spec.dim_max == 2) {
        std::map<std::tuple<Int, Int, int>, TFD4> keep;
        for (Int a = 1; a <= kBox; ++a)
            for (int k = 0; k <= 2 * kBox; ++k) {
                if ((k > 0) != pts) continue;
                Int b = a - 2;
                Int w1 = a - 2 * b - k;
                if (w1 < 1) continue;
                // orientation: (a,b,k) ~ (a-2b-k, -(b+k), k); keep smaller |b|, ties to negative b
                Int fb = -(b + k);
                bool mine = std::abs(b) < std::abs(fb) || (std::abs(b) == std::abs(fb) && b <= fb);
                Int ra = mine ? a : w1, rb = mine ? b : fb;
                TFD4 r;
                r.spec = spec; r.k = k; r.a = ra; r.b = rb; r.area_max = ra - 2 * rb - k;
                keep.emplace(std::make_tuple(ra, rb, k), r);
            }
        for (auto& [key, r] : keep) finish(r, true, true);
    } else {
        throw std::invalid_argument("4-dimensional cases have dim_min <= dim_max");
    }
    return out;
}

std::vector<TFD4> table4dim() {
    std::vector<TFD4> out;
    for (auto [dmin, dmax] : {std::pair{0, 0}, {0, 2}, {2, 2}}) {
        int lo = min_level_of(dmin, 4), hi = max_level_of(dmax, 4);
        for (bool pts : {false, true}) {
            CaseSpec s{dmin, dmax, {lo}};
            if (pts) s.crit.push_back(0);
            s.crit.push_back(hi);
            auto rows = enumerate_case_4dim(s);
            out.insert(out.end(), rows.begin(), rows.end());
        }
    }
    return out;
}

} // namespace semifree
