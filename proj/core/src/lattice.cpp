#include "semifree/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

namespace semifree {

SurfaceLattice::SurfaceLattice(LatticeKind kind, int k) : kind_(kind), k_(k) {
    if (k < 0) throw std::invalid_argument("negative blow-up count");
}

SurfaceLattice SurfaceLattice::parse(std::string_view name) {
    std::string s(name);
    auto count_after = [&](std::size_t pos) {
        if (pos >= s.size()) return 0;
        return std::stoi(s.substr(pos));
    };
    if (s == "P2") return projective_plane(0);
    if (s.rfind("X_", 0) == 0) return projective_plane(count_after(2));
    if (s.rfind("P2#", 0) == 0) return projective_plane(count_after(3));
    if (s == "S2xS2") return sphere_product(0);
    if (s.rfind("S2xS2#", 0) == 0) return sphere_product(count_after(6));
    if (s == "E_S2") return hirzebruch(0);
    if (s.rfind("E_S2#", 0) == 0) return hirzebruch(count_after(5));
    throw std::invalid_argument("unknown lattice name: " + s);
}

Int SurfaceLattice::gram(int i, int j) const {
    int f = first_exceptional();
    if (i >= f || j >= f) return (i == j) ? -1 : 0;
    switch (kind_) {
    case LatticeKind::ProjectivePlaneBlowup: return 1;
    case LatticeKind::SphereProductBlowup: return i == j ? 0 : 1;
    case LatticeKind::HirzebruchBlowup:
        if (i != j) return 1;
        return i == 0 ? 0 : -1;
    }
    return 0;
}

std::vector<std::vector<Int>> SurfaceLattice::gram_matrix() const {
    int r = rank();
    std::vector<std::vector<Int>> g(r, std::vector<Int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) g[i][j] = gram(i, j);
    return g;
}

std::vector<Int> SurfaceLattice::c1_coeffs() const {
    std::vector<Int> c(rank(), -1);
    switch (kind_) {
    case LatticeKind::ProjectivePlaneBlowup: c[0] = 3; break;
    case LatticeKind::SphereProductBlowup: c[0] = 2; c[1] = 2; break;
    case LatticeKind::HirzebruchBlowup: c[0] = 3; c[1] = 2; break;
    }
    return c;
}

std::string SurfaceLattice::name() const {
    switch (kind_) {
    case LatticeKind::ProjectivePlaneBlowup: return "X_" + std::to_string(k_);
    case LatticeKind::SphereProductBlowup: return k_ ? "S2xS2#" + std::to_string(k_) : "S2xS2";
    case LatticeKind::HirzebruchBlowup: return k_ ? "E_S2#" + std::to_string(k_) : "E_S2";
    }
    return {};
}

std::string SurfaceLattice::basis_label(int i) const {
    int f = first_exceptional();
    if (i >= f) return "E" + std::to_string(i - f + 1);
    if (f == 1) return "u";
    return i == 0 ? "x" : "y";
}

Int SurfaceLattice::pair(const Int* a, const Int* b) const {
    Int s = 0;
    int f;
    switch (kind_) {
    case LatticeKind::ProjectivePlaneBlowup:
        s = a[0] * b[0];
        f = 1;
        break;
    case LatticeKind::SphereProductBlowup:
        s = a[0] * b[1] + a[1] * b[0];
        f = 2;
        break;
    default:
        s = a[0] * b[1] + a[1] * b[0] - a[1] * b[1];
        f = 2;
        break;
    }
    for (int i = f, r = f + k_; i < r; ++i) s -= a[i] * b[i];
    return s;
}

CohClass::CohClass(SurfaceLattice lat, std::vector<Int> coeffs) : lat_(lat), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != lat_.rank())
        throw std::invalid_argument("coefficient count does not match rank of " + lat_.name());
}

CohClass CohClass::zero(const SurfaceLattice& lat) { return {lat, std::vector<Int>(lat.rank(), 0)}; }

CohClass CohClass::basis(const SurfaceLattice& lat, int i) {
    auto z = zero(lat);
    z.c_.at(i) = 1;
    return z;
}

CohClass CohClass::parse(const SurfaceLattice& lat, std::string_view text) {
    std::vector<Int> c(lat.rank(), 0);
    std::size_t i = 0, n = text.size();
    auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    bool any = false;
    skip();
    while (i < n) {
        Int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip();
        } else if (any) {
            throw std::invalid_argument("expected sign in class expression: " + std::string(text));
        }
        Int mult = 1;
        bool digits = false;
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) {
            mult = std::stoll(std::string(text.substr(start, i - start)));
            digits = true;
        }
        skip();
        int idx = -1;
        if (i < n && (text[i] == 'u' || text[i] == 'x' || text[i] == 'y')) {
            char s = text[i++];
            if (lat.first_exceptional() == 1) {
                if (s != 'u') throw std::invalid_argument("x,y not in basis of " + lat.name());
                idx = 0;
            } else {
                if (s == 'u') throw std::invalid_argument("u not in basis of " + lat.name());
                idx = s == 'x' ? 0 : 1;
            }
        } else if (i < n && text[i] == 'E') {
            ++i;
            if (i < n && text[i] == '_') ++i;
            std::size_t s0 = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == s0) throw std::invalid_argument("missing index after E");
            int e = std::stoi(std::string(text.substr(s0, i - s0)));
            if (e < 1 || e > lat.blowups()) throw std::invalid_argument("E index out of range for " + lat.name());
            idx = lat.first_exceptional() + e - 1;
        } else if (digits && mult == 0) {
            any = true;
            skip();
            continue;
        } else {
            throw std::invalid_argument("bad class expression: " + std::string(text));
        }
        c[idx] += sign * mult;
        any = true;
        skip();
    }
    return {lat, c};
}

bool CohClass::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Int v) { return v == 0; });
}

CohClass CohClass::operator+(const CohClass& o) const { auto r = *this; r += o; return r; }
CohClass CohClass::operator-(const CohClass& o) const { auto r = *this; r -= o; return r; }

CohClass CohClass::operator-() const {
    auto r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

CohClass& CohClass::operator+=(const CohClass& o) {
    if (lat_ != o.lat_) throw std::invalid_argument("lattice mismatch: " + lat_.name() + " vs " + o.lat_.name());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
    if (lat_ != o.lat_) throw std::invalid_argument("lattice mismatch: " + lat_.name() + " vs " + o.lat_.name());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CohClass operator*(Int s, const CohClass& c) {
    auto r = c;
    for (auto& v : r.c_) v *= s;
    return r;
}

CohClass CohClass::pulled_back(const SurfaceLattice& bigger) const {
    if (bigger.kind() != lat_.kind() || bigger.blowups() < lat_.blowups())
        throw std::invalid_argument("cannot pull back " + lat_.name() + " to " + bigger.name());
    auto c = c_;
    c.resize(bigger.rank(), 0);
    return {bigger, c};
}

std::string CohClass::str() const {
    std::string out;
    for (int i = 0; i < rank(); ++i) {
        Int v = c_[i];
        if (v == 0) continue;
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        Int a = v < 0 ? -v : v;
        if (a != 1) out += std::to_string(a);
        out += lat_.basis_label(i);
    }
    return out.empty() ? "0" : out;
}

Int pairing(const CohClass& a, const CohClass& b) {
    if (a.lattice() != b.lattice())
        throw std::invalid_argument("pairing across lattices " + a.lattice().name() + " and " + b.lattice().name());
    return a.lattice().pair(a.coeffs().data(), b.coeffs().data());
}

CohClass c1(const SurfaceLattice& lat) { return {lat, lat.c1_coeffs()}; }

namespace {

// the blow-up of P2 a lattice is isometric to, if any
std::optional<SurfaceLattice> projective_model(const SurfaceLattice& lat) {
    switch (lat.kind()) {
    case LatticeKind::ProjectivePlaneBlowup: return lat;
    case LatticeKind::HirzebruchBlowup: return SurfaceLattice::projective_plane(lat.blowups() + 1);
    case LatticeKind::SphereProductBlowup:
        if (lat.blowups() == 0) return std::nullopt;
        return SurfaceLattice::projective_plane(lat.blowups() + 1);
    }
    return std::nullopt;
}

CohClass to_projective(const CohClass& c) {
    const auto& lat = c.lattice();
    const auto& a = c.coeffs();
    auto target = projective_model(lat);
    if (!target) throw std::invalid_argument("no isometry from " + lat.name() + " to a blow-up of P2");
    std::vector<Int> r(target->rank(), 0);
    switch (lat.kind()) {
    case LatticeKind::ProjectivePlaneBlowup: return c;
    case LatticeKind::HirzebruchBlowup:
        // x = u - E1, y = E1, E_i = E_{i+1}
        r[0] = a[0];
        r[1] = a[1] - a[0];
        for (int i = 2; i < lat.rank(); ++i) r[i] = a[i];
        break;
    case LatticeKind::SphereProductBlowup:
        // x = u - E1, y = u - E2, E1 = u - E1 - E2, E_i = E_{i+1} for i >= 2
        r[0] = a[0] + a[1] + a[2];
        r[1] = -a[0] - a[2];
        r[2] = -a[1] - a[2];
        for (int i = 3; i < lat.rank(); ++i) r[i] = a[i];
        break;
    }
    return {*target, r};
}

CohClass from_projective(const CohClass& c, const SurfaceLattice& target) {
    const auto& b = c.coeffs();
    std::vector<Int> r(target.rank(), 0);
    switch (target.kind()) {
    case LatticeKind::ProjectivePlaneBlowup: return {target, b};
    case LatticeKind::HirzebruchBlowup:
        r[0] = b[0];
        r[1] = b[1] + b[0];
        for (int i = 2; i < target.rank(); ++i) r[i] = b[i];
        break;
    case LatticeKind::SphereProductBlowup: {
        Int e1 = -(b[0] + b[1] + b[2]);
        r[0] = b[0] + b[2];
        r[1] = b[0] + b[1];
        r[2] = e1;
        for (int i = 3; i < target.rank(); ++i) r[i] = b[i];
        break;
    }
    }
    return {target, r};
}

} // namespace

bool convertible(const SurfaceLattice& from, const SurfaceLattice& to) {
    if (from == to) return true;
    auto a = projective_model(from), b = projective_model(to);
    return a && b && *a == *b;
}

CohClass convert_basis(const CohClass& c, const SurfaceLattice& target) {
    if (c.lattice() == target) return c;
    if (!convertible(c.lattice(), target))
        throw std::invalid_argument("no isometry between " + c.lattice().name() + " and " + target.name());
    return from_projective(to_projective(c), target);
}

namespace {

struct Family {
    Int degree;
    std::vector<Int> mult; // class = degree*u - sum mult_i E_i
};

const std::vector<Family>& families() {
    static const std::vector<Family> f = {
        {0, {-1}},
        {1, {1, 1}},
        {2, {1, 1, 1, 1, 1}},
        {3, {2, 1, 1, 1, 1, 1, 1}},
        {4, {2, 2, 2, 1, 1, 1, 1, 1}},
        {5, {2, 2, 2, 2, 2, 2, 1, 1}},
        {6, {3, 2, 2, 2, 2, 2, 2, 2}},
    };
    return f;
}

void place(const Family& fam, std::vector<Int>& remaining, int idx, int k, std::vector<Int>& cur,
           std::vector<std::vector<Int>>& out) {
    if (remaining.empty()) {
        out.push_back(cur);
        return;
    }
    if (idx > k) return;
    if (static_cast<int>(remaining.size()) > k - idx + 1) return;
    // leave E_idx unused
    place(fam, remaining, idx + 1, k, cur, out);
    // or give it one of the distinct remaining multiplicities
    std::vector<Int> tried;
    for (std::size_t j = 0; j < remaining.size(); ++j) {
        Int m = remaining[j];
        if (std::find(tried.begin(), tried.end(), m) != tried.end()) continue;
        tried.push_back(m);
        remaining.erase(remaining.begin() + static_cast<long>(j));
        cur[idx] = -m;
        place(fam, remaining, idx + 1, k, cur, out);
        cur[idx] = 0;
        remaining.insert(remaining.begin() + static_cast<long>(j), m);
    }
}

std::vector<CohClass> build_exceptional(const SurfaceLattice& lat) {
    auto model = projective_model(lat);
    if (!model) return {};
    int k = model->blowups();
    if (k > 8) throw std::invalid_argument("exceptional classes unsupported beyond 8 blow-ups");
    std::vector<std::vector<Int>> raw;
    for (const auto& fam : families()) {
        if (static_cast<int>(fam.mult.size()) > k) continue;
        std::vector<Int> cur(k + 1, 0);
        cur[0] = fam.degree;
        auto rem = fam.mult;
        place(fam, rem, 1, k, cur, raw);
    }
    std::vector<CohClass> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.push_back(convert_basis(CohClass(*model, r), lat));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

const std::vector<CohClass>& exceptional_classes(const SurfaceLattice& lat) {
    static std::mutex mu;
    static std::map<SurfaceLattice, std::vector<CohClass>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lat);
    if (it == cache.end()) it = cache.emplace(lat, build_exceptional(lat)).first;
    return it->second;
}

std::optional<Int> adjunction_genus(const CohClass& c) {
    Int twice = pairing(c, c) - pairing(c1(c.lattice()), c) + 2;
    if (twice < 0 || twice % 2 != 0) return std::nullopt;
    return twice / 2;
}

} // namespace semifree
