#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace semifree::oracle {

namespace {

// Visits every coefficient vector with head entries in [-hb, hb], tail entries in [-tb, tb],
// C.C >= min_square and c1.C in [deg_lo, deg_hi]. In every family the tail enters C.C as
// -sum e_i^2 and c1.C as +sum e_i, which is all the pruning uses.
void each_class(const SurfaceLattice& lat, Int hb, Int tb, Int min_square, Int deg_lo, Int deg_hi,
                const std::function<void(const CohClass&)>& visit) {
    const int head = lat.first_exceptional();
    const int n = lat.rank();
    const CohClass k = c1(lat);
    std::vector<Int> c(static_cast<std::size_t>(n), 0);
    Int lo = 0, hi = 0;
    auto feasible = [&](Int sum, Int budget, int rest) {
        // some x in [lo - sum, hi - sum] with |x| <= rest * tb and x^2 <= rest * budget
        Int a = lo - sum, b = hi - sum;
        Int x = a > 0 ? a : (b < 0 ? b : 0);
        Int r = rest;
        return (x < 0 ? -x : x) <= r * tb && x * x <= r * budget;
    };
    std::function<void(int, Int, Int)> tail = [&](int i, Int budget, Int sum) {
        if (!feasible(sum, budget, n - i)) return;
        if (i == n) {
            visit(CohClass(lat, c));
            return;
        }
        for (Int v = -tb; v <= tb; ++v) {
            if (v * v > budget) continue;
            c[static_cast<std::size_t>(i)] = v;
            tail(i + 1, budget - v * v, sum + v);
        }
        c[static_cast<std::size_t>(i)] = 0;
    };
    std::function<void(int)> heads = [&](int i) {
        if (i == head) {
            Int q = 0, lin = 0;
            for (int a = 0; a < head; ++a) {
                for (int b = 0; b < head; ++b)
                    q += c[static_cast<std::size_t>(a)] * lat.gram(a, b) * c[static_cast<std::size_t>(b)];
                for (int b = 0; b < head; ++b) lin += k[a] * lat.gram(a, b) * c[static_cast<std::size_t>(b)];
            }
            lo = deg_lo - lin;
            hi = deg_hi - lin;
            if (q - min_square >= 0) tail(head, q - min_square, 0);
            return;
        }
        for (Int v = -hb; v <= hb; ++v) {
            c[static_cast<std::size_t>(i)] = v;
            heads(i + 1);
        }
        c[static_cast<std::size_t>(i)] = 0;
    };
    heads(0);
}

} // namespace

std::vector<CohClass> exceptional_classes(const SurfaceLattice& lat, Int head_box, Int e_box) {
    std::vector<CohClass> out;
    CohClass k = c1(lat);
    each_class(lat, head_box, e_box, -1, 1, 1, [&](const CohClass& c) {
        if (pairing(c, c) == -1 && pairing(k, c) == 1) out.push_back(c);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Splitting> splittings(const CohClass& total, const CohClass& area_form) {
    const SurfaceLattice& lat = total.lattice();
    Int box = 0;
    for (Int v : total.coeffs()) box = std::max(box, std::abs(v));
    box += 3;
    Int area = pairing(area_form, total);
    auto ex = exceptional_classes(lat, 6, 3);
    if (lat.kind() != LatticeKind::ProjectivePlaneBlowup) ex = exceptional_classes(lat, 8, 4);

    // area >= 1 and genus >= 0 give C.C >= -1; the degree window only prunes when area = c1
    bool monotone = area_form == c1(lat);
    const Int wide = 1000000;
    std::vector<CohClass> parts;
    each_class(lat, box, box, -1, monotone ? 1 : -wide, monotone ? area : wide, [&](const CohClass& c) {
        Int a = pairing(area_form, c);
        if (a < 1 || a > area) return;
        auto g = adjunction_genus(c);
        if (!g) return;
        Int s = pairing(c, c);
        if (*g == 0 && s == -1 && !std::binary_search(ex.begin(), ex.end(), c)) return;
        if (*g == 0 && s >= 0)
            for (const auto& e : ex)
                if (pairing(c, e) < 0) return;
        parts.push_back(c);
    });
    std::sort(parts.begin(), parts.end());

    std::vector<Splitting> out;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t, CohClass)> grow = [&](std::size_t from, CohClass rest) {
        if (rest.is_zero()) {
            Splitting s;
            for (auto i : pick) s.parts.push_back({parts[i], *adjunction_genus(parts[i])});
            std::sort(s.parts.begin(), s.parts.end());
            out.push_back(s);
            return;
        }
        for (std::size_t i = from; i < parts.size(); ++i) {
            bool orth = true;
            for (auto j : pick) orth = orth && pairing(parts[i], parts[j]) == 0;
            if (!orth || pairing(area_form, parts[i]) > pairing(area_form, rest)) continue;
            pick.push_back(i);
            grow(i, rest - parts[i]);
            pick.pop_back();
        }
    };
    grow(0, total);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::set<std::string> classify_case(const CaseSpec& spec, int max_rank, Int box) {
    struct Seed {
        SurfaceLattice lat;
        CohClass e;
        CohClass omega_m1; // [omega] just above the minimum, before the points at -1
    };
    std::vector<Seed> seeds;
    if (spec.dim_min == 0) {
        auto p2 = SurfaceLattice::projective_plane(0);
        seeds.push_back({p2, CohClass(p2, {-1}), CohClass(p2, {2})});
    } else if (spec.dim_min == 2) {
        for (auto s : {SurfaceLattice::sphere_product(0), SurfaceLattice::hirzebruch(0)})
            for (Int k = -box; k <= box; ++k) {
                CohClass e(s, {k, -1});
                Int vol = 2 - pairing(e, e);
                seeds.push_back({s, e, vol * CohClass::basis(s, 0) - e});
            }
    } else {
        for (auto s : {SurfaceLattice::projective_plane(0), SurfaceLattice::sphere_product(0),
                       SurfaceLattice::projective_plane(1), SurfaceLattice::projective_plane(2)}) {
            if (s.rank() > max_rank) continue;
            std::vector<Int> c(static_cast<std::size_t>(s.rank()), -box);
            while (true) {
                CohClass e(s, c);
                seeds.push_back({s, e, c1(s) + e});
                std::size_t i = 0;
                while (i < c.size() && c[i] == box) c[i++] = -box;
                if (i == c.size()) break;
                ++c[i];
            }
        }
    }

    std::set<std::string> keys;
    auto keep = [&](const TfdParams& p) {
        if (auto t = build_tfd(p)) keys.insert(canonical(*t).key);
    };
    for (const auto& seed : seeds) {
        for (int m = 0; seed.lat.rank() + m <= max_rank; ++m) {
            if (spec.dim_min == 4 && m > 0) break;
            TfdParams base{spec, seed.lat, seed.e, m, {}};
            if (!spec.has(0)) {
                keep(base);
                continue;
            }
            SurfaceLattice L = seed.lat.blown_up(m);
            CohClass em = seed.e.pulled_back(L);
            for (int i = 0; i < m; ++i) em += CohClass::basis(L, L.rank() - m + i);
            // monotonicity of the reduced space at 0 does not involve the level-0 data
            if (seed.omega_m1.pulled_back(L) - em != c1(L)) continue;
            std::vector<const CohClass*> ex;
            for (const auto& c : semifree::exceptional_classes(L)) ex.push_back(&c);
            if (!positive_on_interval(seed.omega_m1.pulled_back(L), em, 1, ex)) continue;
            std::vector<Int> c(static_cast<std::size_t>(L.rank()), -box);
            while (true) {
                CohClass total(L, c);
                if (pairing(c1(L), total) >= 1 && positive_on_interval(c1(L), em + total, 1, ex)) {
                    for (const auto& s : semifree::enumerate_splittings(total, c1(L))) {
                        TfdParams p = base;
                        for (const auto& part : s.parts) p.z0.push_back(part.cls);
                        keep(p);
                    }
                }
                std::size_t i = 0;
                while (i < c.size() && c[i] == box) c[i++] = -box;
                if (i == c.size()) break;
                ++c[i];
            }
        }
    }
    return keys;
}

} // namespace semifree::oracle
