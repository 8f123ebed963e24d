#include "semifree/splitter.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace semifree {

namespace {

Int box_of(const CohClass& total) {
    Int b = 0;
    for (Int v : total.coeffs()) b = std::max(b, std::abs(v));
    return b + 3;
}

bool in_box(const CohClass& c, Int box) {
    for (Int v : c.coeffs())
        if (std::abs(v) > box) return false;
    return true;
}

// Every class in the coefficient box with 1 <= area <= max_area and genus >= 0.
// Enumerated in the P2-blow-up model (d u - sum m_i E_i) where c^2 >= area - 2 bounds m.
std::vector<CohClass> candidate_parts(const CohClass& total, const CohClass& area_form, Int max_area) {
    const SurfaceLattice& lat = total.lattice();
    Int box = box_of(total);
    std::vector<CohClass> out;
    auto consider = [&](const CohClass& c) {
        Int a = pairing(area_form, c);
        if (a < 1 || a > max_area) return;
        if (!in_box(c, box)) return;
        if (pairing(c, total) != pairing(c, c)) return;
        if (!admissible_part(c, area_form)) return;
        out.push_back(c);
    };
    if (area_form != c1(lat))
        throw std::invalid_argument("splitter expects the monotone area form [omega_0] = c1");
    if (lat.is_even()) {
        for (Int a = -box; a <= box; ++a)
            for (Int b = -box; b <= box; ++b) consider(CohClass(lat, {a, b}));
    } else {
        SurfaceLattice model = SurfaceLattice::projective_plane(
            lat.kind() == LatticeKind::ProjectivePlaneBlowup ? lat.blowups() : lat.blowups() + 1);
        int n = model.blowups();
        // the conversions have entries of size <= 1, so 3*box bounds model coefficients
        Int dmax = 3 * box;
        std::vector<Int> m(n + 1, 0);
        // sum m_i must land in [3d - max_area, 3d - 1]; prune with (target - sum)^2 <= rest * budget
        auto reachable = [&](Int d, Int sum, Int budget, int rest) {
            Int lo = 3 * d - max_area - sum, hi = 3 * d - 1 - sum;
            if (lo <= 0 && hi >= 0) return true;
            Int need = lo > 0 ? lo : -hi;
            return need * need <= static_cast<Int>(rest) * budget;
        };
        std::function<void(int, Int, Int, Int)> rec = [&](int i, Int d, Int budget, Int sum) {
            if (!reachable(d, sum, budget, n - i + 1)) return;
            if (i > n) {
                std::vector<Int> coeffs(n + 1);
                coeffs[0] = d;
                for (int j = 1; j <= n; ++j) coeffs[j] = -m[j];
                consider(convert_basis(CohClass(model, coeffs), lat));
                return;
            }
            for (Int v = -dmax; v <= dmax; ++v) {
                if (v * v > budget) continue;
                m[i] = v;
                rec(i + 1, d, budget - v * v, sum + v);
            }
            m[i] = 0;
        };
        for (Int d = -dmax; d <= dmax; ++d) {
            // genus >= 0 and area >= 1 force sum m_i^2 <= d^2 + 1
            rec(1, d, d * d + 1, 0);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

bool admissible_part(const CohClass& c, const CohClass& area_form) {
    if (pairing(area_form, c) < 1) return false;
    auto g = adjunction_genus(c);
    if (!g) return false;
    Int self = pairing(c, c);
    if (*g == 0 && self < -1) return false;
    const auto& ex = exceptional_classes(c.lattice());
    if (*g == 0 && self == -1) return std::binary_search(ex.begin(), ex.end(), c);
    if (*g == 0 && self >= 0) {
        for (const auto& e : ex)
            if (pairing(c, e) < 0) return false;
    }
    return true;
}

std::vector<Splitting> enumerate_splittings(const CohClass& total, const CohClass& area_form) {
    static std::mutex mu;
    static std::map<std::pair<CohClass, CohClass>, std::vector<Splitting>> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({total, area_form});
        if (it != memo.end()) return it->second;
    }

    std::vector<Splitting> result;
    Int A = pairing(area_form, total);
    if (A >= 1) {
        auto cands = candidate_parts(total, area_form, A);
        std::vector<std::size_t> chosen;
        std::function<void(std::size_t, const CohClass&)> dfs = [&](std::size_t from, const CohClass& rest) {
            if (rest.is_zero()) {
                Splitting s;
                for (auto i : chosen) s.parts.push_back({cands[i], *adjunction_genus(cands[i])});
                std::sort(s.parts.begin(), s.parts.end());
                result.push_back(std::move(s));
                return;
            }
            Int left = pairing(area_form, rest);
            if (left < 1) return;
            for (std::size_t i = from; i < cands.size(); ++i) {
                const auto& c = cands[i];
                if (pairing(area_form, c) > left) continue;
                bool ok = true;
                for (auto j : chosen) ok = ok && pairing(cands[j], c) == 0;
                if (!ok) continue;
                chosen.push_back(i);
                dfs(i, rest - c);
                chosen.pop_back();
            }
        };
        dfs(0, total);
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
    }

    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_pair(total, area_form), result);
    return result;
}

} // namespace semifree
