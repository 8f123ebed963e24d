#include "semifree/momentdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace semifree {

namespace {

Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec scale(Int s, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x *= s;
    return r;
}

Int content(const Vec& v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, std::abs(x));
    return g;
}

Vec primitive(const Vec& v) {
    Int g = content(v);
    if (g == 0) throw std::invalid_argument("zero vector has no direction");
    Vec r(v);
    for (auto& x : r) x /= g;
    return r;
}

Int det2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

Int det3(const Vec& a, const Vec& b, const Vec& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Vec cross(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool parallel(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] - a[j] * b[i] != 0) return false;
    return true;
}

// d = k e for an integer k
std::optional<Int> multiple_of(const Vec& d, const Vec& e) {
    if (!parallel(d, e)) return std::nullopt;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) {
            if (d[i] % e[i] != 0) return std::nullopt;
            Int k = d[i] / e[i];
            if (scale(k, e) != d) return std::nullopt;
            return k;
        }
    return std::nullopt;
}

// coordinates of d in the basis (b1, b2) of a rank-2 sublattice; nullopt if not integral
std::optional<std::pair<Int, Int>> plane_coords(const Vec& d, const Vec& b1, const Vec& b2) {
    std::size_t n = d.size();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s) {
            Int D = b1[r] * b2[s] - b1[s] * b2[r];
            if (D == 0) continue;
            Int x = d[r] * b2[s] - d[s] * b2[r];
            Int y = b1[r] * d[s] - b1[s] * d[r];
            if (x % D != 0 || y % D != 0) return std::nullopt;
            std::pair<Int, Int> c{x / D, y / D};
            if (add(scale(c.first, b1), scale(c.second, b2)) != d) return std::nullopt;
            return c;
        }
    return std::nullopt;
}

std::vector<Facet> facets_of(int dim, const std::vector<Vec>& V) {
    std::set<Facet> out;
    int n = static_cast<int>(V.size());
    auto consider = [&](Vec nrm, const Vec& base) {
        if (content(nrm) == 0) return;
        nrm = primitive(nrm);
        Int b = dot(nrm, base);
        bool ge = true, le = true;
        for (const auto& v : V) {
            Int x = dot(nrm, v);
            ge = ge && x >= b;
            le = le && x <= b;
        }
        if (!ge && !le) return;
        if (!ge) {
            nrm = scale(-1, nrm);
            b = -b;
        }
        int on = 0;
        for (const auto& v : V) on += dot(nrm, v) == b;
        if (on < dim) return;
        out.insert({nrm, -b});
    };
    if (dim == 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Vec d = sub(V[j], V[i]);
                consider({-d[1], d[0]}, V[i]);
            }
    } else if (dim == 3) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) consider(cross(sub(V[j], V[i]), sub(V[k], V[i])), V[i]);
    } else {
        throw std::invalid_argument("polytopes must have dimension 2 or 3");
    }
    return {out.begin(), out.end()};
}

std::string name_by_rank(int n_edges, bool even) {
    if (n_edges == 3) return "P2";
    if (n_edges == 4 && even) return "S2xS2";
    return "X_" + std::to_string(n_edges - 3);
}

} // namespace

std::vector<MomentGraph::Half> MomentGraph::around(int v) const {
    std::vector<Half> out;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        const auto& e = edges[i];
        if (e.a == v) out.push_back({i, e.b, e.dir});
        else if (e.b == v) out.push_back({i, e.a, scale(-1, e.dir)});
    }
    return out;
}

void MomentGraph::add_edge(int a, int b) {
    Vec d = sub(vertices.at(b), vertices.at(a));
    Int len = content(d);
    if (len == 0) throw std::invalid_argument("edge joins a vertex to itself");
    edges.push_back({a, b, primitive(d), len});
}

DelzantPolytope DelzantPolytope::from_vertices(int dim, std::vector<Vec> vertices) {
    for (const auto& v : vertices)
        if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("vertex of wrong dimension");
    {
        auto s = vertices;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("duplicate vertex");
    }
    DelzantPolytope p;
    p.dim = dim;
    p.vertices = std::move(vertices);
    p.facets = facets_of(dim, p.vertices);
    int n = static_cast<int>(p.vertices.size());
    p.vertex_facets.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int f = 0; f < static_cast<int>(p.facets.size()); ++f)
            if (dot(p.facets[f].normal, p.vertices[i]) + p.facets[f].offset == 0) p.vertex_facets[i].push_back(f);
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(p.vertex_facets[i].size()) < dim)
            throw std::invalid_argument("point is not a vertex of the convex hull");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> common;
            std::set_intersection(p.vertex_facets[i].begin(), p.vertex_facets[i].end(), p.vertex_facets[j].begin(),
                                  p.vertex_facets[j].end(), std::back_inserter(common));
            if (static_cast<int>(common.size()) >= dim - 1) p.add_edge(i, j);
        }
    return p;
}

DelzantPolytope DelzantPolytope::from_facets(int dim, std::vector<Facet> facets) {
    std::set<Vec> pts;
    int m = static_cast<int>(facets.size());
    auto feasible = [&](const Vec& x) {
        for (const auto& f : facets)
            if (dot(f.normal, x) + f.offset < 0) return false;
        return true;
    };
    if (dim == 2) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                const auto &a = facets[i].normal, &b = facets[j].normal;
                Int D = det2(a, b);
                if (D == 0) continue;
                Int ca = -facets[i].offset, cb = -facets[j].offset;
                Int x = ca * b[1] - cb * a[1], y = a[0] * cb - b[0] * ca;
                if (x % D || y % D) throw std::invalid_argument("facet intersection is not a lattice point");
                Vec v{x / D, y / D};
                if (feasible(v)) pts.insert(v);
            }
    } else {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = j + 1; k < m; ++k) {
                    const auto &a = facets[i].normal, &b = facets[j].normal, &c = facets[k].normal;
                    Int D = det3(a, b, c);
                    if (D == 0) continue;
                    Vec rhs{-facets[i].offset, -facets[j].offset, -facets[k].offset};
                    // Cramer on the rows a, b, c
                    Vec col0{a[0], b[0], c[0]}, col1{a[1], b[1], c[1]}, col2{a[2], b[2], c[2]};
                    Int x = det3(rhs, col1, col2), y = det3(col0, rhs, col2), z = det3(col0, col1, rhs);
                    if (x % D || y % D || z % D) continue;
                    Vec v{x / D, y / D, z / D};
                    if (feasible(v)) pts.insert(v);
                }
    }
    return from_vertices(dim, {pts.begin(), pts.end()});
}

GkmGraph GkmGraph::from_edges(std::vector<Vec> vertices, const std::vector<std::pair<int, int>>& edges) {
    GkmGraph g;
    g.dim = vertices.empty() ? 2 : static_cast<int>(vertices[0].size());
    g.vertices = std::move(vertices);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= static_cast<int>(g.vertices.size()) || b >= static_cast<int>(g.vertices.size()))
            throw std::invalid_argument("edge refers to a missing vertex");
        g.add_edge(a, b);
    }
    return g;
}

bool check_delzant(const DelzantPolytope& p) {
    for (int v = 0; v < static_cast<int>(p.vertices.size()); ++v) {
        auto h = p.around(v);
        if (static_cast<int>(h.size()) != p.dim || static_cast<int>(p.vertex_facets[v].size()) != p.dim) return false;
        Int d = p.dim == 2 ? det2(h[0].dir, h[1].dir) : det3(h[0].dir, h[1].dir, h[2].dir);
        if (d != 1 && d != -1) return false;
    }
    return true;
}

bool check_gkm(const GkmGraph& g) {
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        auto h = g.around(v);
        if (h.size() != 3) return false;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (parallel(h[i].dir, h[j].dir)) return false;
    }
    return true;
}

bool check_reflexive(const DelzantPolytope& p) {
    Vec lo = p.vertices[0], hi = p.vertices[0];
    for (const auto& v : p.vertices)
        for (int i = 0; i < p.dim; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    std::vector<Vec> interior;
    Vec x = lo;
    while (true) {
        bool in = true;
        for (const auto& f : p.facets) in = in && dot(f.normal, x) + f.offset > 0;
        if (in) interior.push_back(x);
        int i = 0;
        while (i < p.dim && ++x[i] > hi[i]) x[i] = lo[i], ++i;
        if (i == p.dim) break;
    }
    if (interior.size() != 1) return false;
    for (const auto& f : p.facets)
        if (dot(f.normal, interior[0]) + f.offset != 1) return false;
    return true;
}

bool check_semifree(const MomentGraph& g, const Vec& xi) {
    if (static_cast<int>(xi.size()) != g.dim) throw std::invalid_argument("xi has the wrong dimension");
    if (content(xi) != 1) throw std::invalid_argument("xi must be a primitive nonzero vector");
    for (const auto& e : g.edges)
        if (std::abs(dot(e.dir, xi)) > 1) return false;
    return true;
}

Int balanced_shift(const MomentGraph& g, const Vec& xi) {
    std::optional<Int> shift;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        Int s = 0;
        for (const auto& h : g.around(v)) s += dot(h.dir, xi);
        Int here = -s - dot(g.vertices[v], xi);
        if (shift && *shift != here) throw std::invalid_argument("no balanced moment map: levels are inconsistent");
        shift = here;
    }
    return shift.value_or(0);
}

std::vector<FixedComponentRecord> fixed_components(const MomentGraph& g, const Vec& xi) {
    if (!check_semifree(g, xi)) throw std::invalid_argument("circle action is not semifree");
    Int shift = balanced_shift(g, xi);
    int n = static_cast<int>(g.vertices.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : g.edges)
        if (dot(e.dir, xi) == 0) parent[find(e.a)] = find(e.b);
    std::map<int, std::vector<int>> comps;
    for (int v = 0; v < n; ++v) comps[find(v)].push_back(v);

    // normal degree along the sphere p -> q of the line through half-edge a at p: the partner at q
    // carries the same circle weight, and a - partner = degree * e
    auto degree = [&](int q, const Vec& e, const Vec& a) -> Int {
        std::optional<Int> found;
        for (const auto& h : g.around(q)) {
            if (dot(h.dir, xi) != dot(a, xi) || dot(h.dir, xi) == 0) continue;
            if (auto k = multiple_of(sub(a, h.dir), e)) {
                if (found) throw std::invalid_argument("ambiguous connection along an invariant sphere");
                found = *k;
            }
        }
        if (!found) throw std::invalid_argument("no connection along an invariant sphere");
        return *found;
    };

    std::vector<FixedComponentRecord> out;
    for (auto& [root, vs] : comps) {
        FixedComponentRecord r;
        const int v0 = vs[0];
        auto h0 = g.around(v0);
        int zeros = 0;
        std::vector<int> w;
        for (const auto& h : h0) {
            Int x = dot(h.dir, xi);
            if (x == 0) ++zeros;
            w.push_back(static_cast<int>(x));
        }
        std::sort(w.begin(), w.end());
        for (std::size_t i = 0; i < 3 && i < w.size(); ++i) r.weights[i] = w[i];
        r.level = static_cast<int>(dot(g.vertices[v0], xi) + shift);
        r.dim = 2 * zeros;
        for (int v : vs) {
            int z = 0;
            for (const auto& h : g.around(v)) z += dot(h.dir, xi) == 0;
            if (z != zeros) throw std::invalid_argument("fixed component with mixed dimension");
        }
        if (zeros == 0) {
            r.topology = Topology::Point;
            r.type = "pt";
        } else if (zeros == 1) {
            if (vs.size() != 2) throw std::invalid_argument("fixed surface that is not a single invariant sphere");
            const GraphEdge* e = nullptr;
            for (const auto& h : h0)
                if (dot(h.dir, xi) == 0) e = &g.edges[h.edge];
            int q = e->a == v0 ? e->b : e->a;
            Vec dir = e->a == v0 ? e->dir : scale(-1, e->dir);
            r.topology = Topology::Sphere;
            r.type = "S2";
            r.volume = e->length;
            // the total degree does not depend on how the normal lines are paired
            Vec diff(dir.size(), 0);
            for (const auto& h : h0)
                if (dot(h.dir, xi) != 0) diff = add(diff, h.dir);
            for (const auto& h : g.around(q))
                if (dot(h.dir, xi) != 0) diff = sub(diff, h.dir);
            auto tot = multiple_of(diff, dir);
            if (!tot) throw std::invalid_argument("normal bundle of a fixed sphere is not a sum of line bundles");
            Int total = *tot;
            bool extremal = r.weights[0] == 0 || r.weights[2] == 0;
            if (extremal) {
                r.b = total;
            } else {
                for (const auto& h : h0) {
                    Int x = dot(h.dir, xi);
                    if (x < 0) r.b_neg = degree(q, dir, h.dir);
                    if (x > 0) r.b_pos = degree(q, dir, h.dir);
                }
                if (r.b_neg + r.b_pos != total) throw std::logic_error("inconsistent normal degrees");
            }
            if (r.volume != 2 + total) throw std::invalid_argument("fixed sphere area differs from 2 + normal degree");
        } else if (zeros == 2) {
            r.topology = Topology::FourManifold;
            // walk the boundary polygon
            std::vector<int> cyc{v0};
            int prev = -1, cur = v0;
            while (true) {
                int next = -1;
                for (const auto& h : g.around(cur))
                    if (dot(h.dir, xi) == 0 && h.to != prev) {
                        next = h.to;
                        break;
                    }
                if (next == v0 || next < 0) break;
                cyc.push_back(next);
                prev = cur;
                cur = next;
                if (cyc.size() > vs.size()) throw std::invalid_argument("fixed 4-dimensional face is not a polygon");
            }
            int m = static_cast<int>(cyc.size());
            if (m != static_cast<int>(vs.size())) throw std::invalid_argument("fixed 4-dimensional face is not a polygon");
            Vec b1 = sub(g.vertices[cyc[1]], g.vertices[cyc[0]]);
            Vec b2 = sub(g.vertices[cyc[m - 1]], g.vertices[cyc[0]]);
            b1 = primitive(b1);
            b2 = primitive(b2);
            std::vector<std::pair<Int, Int>> pos, dirs;
            for (int i = 0; i < m; ++i) {
                auto c = plane_coords(sub(g.vertices[cyc[i]], g.vertices[cyc[0]]), b1, b2);
                if (!c) throw std::invalid_argument("fixed face is not a lattice polygon in its plane");
                pos.push_back(*c);
            }
            Int twice_area = 0;
            for (int i = 0; i < m; ++i) {
                auto [x0, y0] = pos[i];
                auto [x1, y1] = pos[(i + 1) % m];
                twice_area += x0 * y1 - x1 * y0;
                Int l = std::gcd(std::abs(x1 - x0), std::abs(y1 - y0));
                dirs.push_back({(x1 - x0) / l, (y1 - y0) / l});
            }
            r.volume = std::abs(twice_area);
            bool even = false;
            if (m == 4) {
                auto d = [&](int i, int j) {
                    return dirs[i].first * dirs[j].second - dirs[i].second * dirs[j].first;
                };
                Int a = d(0, 2) != 0 ? d(0, 2) : d(1, 3);
                even = std::abs(a) % 2 == 0;
            }
            if (m < 3 || m > 6) throw std::invalid_argument("unsupported 4-dimensional fixed component");
            r.type = name_by_rank(m, even);
        } else {
            throw std::invalid_argument("fixed component of dimension 6");
        }
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.level, a.dim, a.volume, a.b, a.b_neg, a.b_pos) <
               std::tie(b.level, b.dim, b.volume, b.b, b.b_neg, b.b_pos);
    });
    return out;
}

Int chern_number_cubed(const DelzantPolytope& p) {
    if (p.dim != 3) throw std::invalid_argument("chern_number_cubed needs a 3-dimensional polytope");
    Vec c = p.vertices[0];
    // any interior rational point works; use 3 * sum of vertices over 3n by scaling everything by n
    Int n = static_cast<Int>(p.vertices.size());
    Vec centroid(3, 0);
    for (const auto& v : p.vertices) centroid = add(centroid, v);
    Int six_vol_scaled = 0;
    for (int f = 0; f < static_cast<int>(p.facets.size()); ++f) {
        std::vector<int> fv;
        for (int v = 0; v < static_cast<int>(p.vertices.size()); ++v)
            if (std::binary_search(p.vertex_facets[v].begin(), p.vertex_facets[v].end(), f)) fv.push_back(v);
        // order the facet boundary
        std::vector<int> cyc{fv[0]};
        std::set<int> used{fv[0]};
        while (cyc.size() < fv.size()) {
            bool step = false;
            for (const auto& h : p.around(cyc.back()))
                if (!used.count(h.to) && std::find(fv.begin(), fv.end(), h.to) != fv.end()) {
                    cyc.push_back(h.to);
                    used.insert(h.to);
                    step = true;
                    break;
                }
            if (!step) throw std::invalid_argument("facet boundary is not a cycle");
        }
        for (std::size_t i = 1; i + 1 < cyc.size(); ++i) {
            Vec a = sub(scale(n, p.vertices[cyc[0]]), centroid);
            Vec b = sub(scale(n, p.vertices[cyc[i]]), centroid);
            Vec d = sub(scale(n, p.vertices[cyc[i + 1]]), centroid);
            six_vol_scaled += std::abs(det3(a, b, d));
        }
    }
    (void)c;
    Int denom = n * n * n;
    if (six_vol_scaled % denom != 0) throw std::logic_error("polytope volume is not a multiple of 1/6");
    return six_vol_scaled / denom;
}

Rational chern_number_cubed_localized(const MomentGraph& g) {
    std::vector<Vec> etas = g.dim == 2 ? std::vector<Vec>{{1, 17}, {3, 29}, {7, 11}}
                                       : std::vector<Vec>{{1, 17, 289}, {3, 29, 101}, {7, 11, 53}};
    for (const auto& eta : etas) {
        bool ok = true;
        for (const auto& e : g.edges) ok = ok && dot(e.dir, eta) != 0;
        if (!ok) continue;
        Rational total = 0;
        for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
            Rational s = 0, prod = 1;
            for (const auto& h : g.around(v)) {
                Int x = dot(h.dir, eta);
                s += x;
                prod *= x;
            }
            total += s * s * s / prod;
        }
        return total;
    }
    throw std::logic_error("no generic direction for localization");
}

Int betti2(const std::vector<FixedComponentRecord>& comps) {
    Int b2 = 0;
    for (const auto& c : comps) {
        int idx = 0;
        for (int w : c.weights) idx += w < 0 ? 2 : 0;
        if (c.dim == 0) b2 += idx == 2;
        else if (c.dim == 2) b2 += (idx == 0) + (idx == 2);
        else {
            Int r = c.type == "P2" ? 1 : c.type == "S2xS2" ? 2 : std::stoll(c.type.substr(2)) + 1;
            b2 += idx == 0 ? r : (idx == 2 ? 1 : 0);
        }
    }
    return b2;
}

DelzantPolytope blow_up_edge(const DelzantPolytope& p, int a, int b) {
    if (p.dim != 3) throw std::invalid_argument("edge blow-up needs a 3-dimensional polytope");
    std::vector<int> common;
    std::set_intersection(p.vertex_facets.at(a).begin(), p.vertex_facets.at(a).end(), p.vertex_facets.at(b).begin(),
                          p.vertex_facets.at(b).end(), std::back_inserter(common));
    if (common.size() != 2) throw std::invalid_argument("vertices do not span an edge");
    const auto &f1 = p.facets[common[0]], &f2 = p.facets[common[1]];
    auto fs = p.facets;
    fs.push_back({add(f1.normal, f2.normal), f1.offset + f2.offset - 1});
    return DelzantPolytope::from_facets(3, fs);
}

GkmGraph blow_up_edge(const GkmGraph& g, int a, int b) {
    int eid = -1;
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
        if ((g.edges[i].a == a && g.edges[i].b == b) || (g.edges[i].a == b && g.edges[i].b == a)) eid = i;
    if (eid < 0) throw std::invalid_argument("vertices do not span an edge");
    Vec e = primitive(sub(g.vertices[b], g.vertices[a]));
    struct Side {
        int edge, to;
        Vec dir;
    };
    auto others = [&](int v) {
        std::vector<Side> s;
        for (const auto& h : g.around(v))
            if (h.edge != eid) s.push_back({h.edge, h.to, h.dir});
        if (s.size() != 2) throw std::invalid_argument("blow-up needs 3-valent endpoints");
        return s;
    };
    auto at_a = others(a), at_b = others(b);
    // pair each half-edge at a with the half-edge at b congruent to it modulo e
    std::vector<int> match(2, -1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (multiple_of(sub(at_a[i].dir, at_b[j].dir), e)) {
                if (match[i] >= 0) throw std::invalid_argument("ambiguous connection along the blown-up edge");
                match[i] = j;
            }
    if (match[0] < 0 || match[1] < 0 || match[0] == match[1])
        throw std::invalid_argument("no connection along the blown-up edge");

    GkmGraph r;
    r.dim = g.dim;
    std::vector<int> remap(g.vertices.size(), -1);
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
        if (v != a && v != b) {
            remap[v] = static_cast<int>(r.vertices.size());
            r.vertices.push_back(g.vertices[v]);
        }
    int base = static_cast<int>(r.vertices.size());
    // new points: a + dir at a, for both half-edges; then the matching points at b
    for (int i = 0; i < 2; ++i) r.vertices.push_back(add(g.vertices[a], at_a[i].dir));
    for (int i = 0; i < 2; ++i) r.vertices.push_back(add(g.vertices[b], at_b[match[i]].dir));
    std::set<int> touched{eid};
    for (const auto& ed : g.edges) {
        int i = static_cast<int>(&ed - g.edges.data());
        if (ed.a == a || ed.a == b || ed.b == a || ed.b == b) touched.insert(i);
        else r.add_edge(remap[ed.a], remap[ed.b]);
    }
    auto reattach = [&](const Side& s, int newv) {
        if (s.to == a || s.to == b) throw std::invalid_argument("blow-up of an edge inside a triangle of spheres");
        if (g.edges[s.edge].length <= 1) throw std::invalid_argument("blow-up too large for a neighbouring sphere");
        r.add_edge(newv, remap[s.to]);
    };
    for (int i = 0; i < 2; ++i) {
        reattach(at_a[i], base + i);
        reattach(at_b[match[i]], base + 2 + i);
        r.add_edge(base + i, base + 2 + i);
    }
    r.add_edge(base, base + 1);
    r.add_edge(base + 2, base + 3);
    return r;
}

std::string fixed_signature(const std::vector<FixedComponentRecord>& comps, Int c1_cubed, Int b2) {
    std::vector<std::string> parts;
    for (const auto& c : comps) {
        std::ostringstream os;
        os << "L" << c.level << ":d" << c.dim;
        if (c.dim == 2) {
            os << ":v" << c.volume << ":g" << c.genus;
            bool extremal = c.level == -2 || c.level == 2;
            if (extremal) os << ":b" << c.b;
            else os << ":n" << c.b_neg << "," << c.b_pos;
        } else if (c.dim == 4) {
            os << ":v" << c.volume << ":" << c.type;
        }
        parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const auto& p : parts) s += p + " ";
    return s + "c3=" + std::to_string(c1_cubed) + " b2=" + std::to_string(b2);
}

std::string fixed_signature(const TFD& t) {
    return fixed_signature(t.components, t.derived.c1_cubed, t.derived.b2);
}

std::vector<FixedComponentRecord> reversed(std::vector<FixedComponentRecord> comps) {
    for (auto& c : comps) {
        c.level = -c.level;
        for (auto& w : c.weights) w = -w;
        std::sort(c.weights.begin(), c.weights.end());
        std::swap(c.b_neg, c.b_pos);
    }
    return comps;
}

MatchResult match_tfd(const std::vector<FixedComponentRecord>& comps, Int c1_cubed, Int b2,
                      const std::vector<TFD>& tables) {
    MatchResult m;
    std::string sig = fixed_signature(comps, c1_cubed, b2);
    std::string rev = fixed_signature(reversed(comps), c1_cubed, b2);
    for (const auto& t : tables) {
        std::string ts = fixed_signature(t);
        if (ts == sig || ts == rev) m.candidates.push_back(t.label.empty() ? "(unlisted)" : t.label);
    }
    std::sort(m.candidates.begin(), m.candidates.end());
    m.candidates.erase(std::unique(m.candidates.begin(), m.candidates.end()), m.candidates.end());
    if (m.candidates.size() == 1) m.label = m.candidates[0];
    return m;
}

const MomentGraph& MomentExample::graph() const {
    if (polytope) return *polytope;
    return *gkm;
}

MomentExample load_moment_example(const std::string& path) {
    using nlohmann::json;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    MomentExample ex;
    ex.path = path;
    try {
        json j = json::parse(in);
        ex.name = j.at("name").get<std::string>();
        ex.kind = j.at("kind").get<std::string>();
        ex.xi = j.at("xi").get<Vec>();
        ex.expected_label = j.at("expected_label").get<std::string>();
        ex.paper_figure = j.at("paper_figure").get<std::string>();
        const auto& d = j.at("data");
        auto verts = d.at("vertices").get<std::vector<Vec>>();
        std::vector<std::pair<int, int>> blow;
        if (d.contains("blow_up"))
            for (const auto& e : d["blow_up"]) blow.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        if (ex.kind == "polytope") {
            int dim = d.at("dim").get<int>();
            auto p = DelzantPolytope::from_vertices(dim, verts);
            for (auto [a, b] : blow) p = blow_up_edge(p, a, b);
            ex.polytope = std::move(p);
        } else if (ex.kind == "gkm") {
            std::vector<std::pair<int, int>> es;
            for (const auto& e : d.at("edges")) es.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
            auto g = GkmGraph::from_edges(verts, es);
            for (auto [a, b] : blow) g = blow_up_edge(g, a, b);
            ex.gkm = std::move(g);
        } else {
            throw std::runtime_error("kind must be \"polytope\" or \"gkm\"");
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return ex;
}

bool ExampleReport::ok() const {
    for (const auto& [n, v] : checks)
        if (!v) return false;
    return label && *label == expected_label;
}

ExampleReport verify_example(const MomentExample& ex, const std::vector<TFD>& tables) {
    ExampleReport r;
    r.file = ex.path;
    r.expected_label = ex.expected_label;
    const MomentGraph& g = ex.graph();
    if (ex.polytope) {
        r.checks.push_back({"delzant", check_delzant(*ex.polytope)});
        r.checks.push_back({"reflexive", check_reflexive(*ex.polytope)});
    } else {
        r.checks.push_back({"gkm", check_gkm(*ex.gkm)});
    }
    bool semifree = check_semifree(g, ex.xi);
    r.checks.push_back({"semifree", semifree});
    if (!semifree) return r;
    try {
        r.components = fixed_components(g, ex.xi);
        r.checks.push_back({"balanced", true});
    } catch (const std::invalid_argument& e) {
        r.checks.push_back({std::string("balanced: ") + e.what(), false});
        return r;
    }
    bool levels = true;
    for (const auto& c : r.components) {
        if (c.dim == 0) levels = levels && (c.level == -3 || c.level == -1 || c.level == 1 || c.level == 3);
        if (c.dim == 2) levels = levels && (c.level == -2 || c.level == 0 || c.level == 2);
        if (c.dim == 4) levels = levels && (c.level == -1 || c.level == 1);
    }
    r.checks.push_back({"levels", levels});
    Rational c3 = chern_number_cubed_localized(g);
    bool integral = is_integer(c3);
    r.checks.push_back({"c1^3 integral", integral});
    if (!integral) return r;
    r.c1_cubed = static_cast<Int>(boost::multiprecision::numerator(c3));
    if (ex.polytope) r.checks.push_back({"c1^3 volume", chern_number_cubed(*ex.polytope) == r.c1_cubed});
    r.b2 = betti2(r.components);
    auto m = match_tfd(r.components, r.c1_cubed, r.b2, tables);
    r.label = m.label;
    r.candidates = m.candidates;
    return r;
}

} // namespace semifree
