#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semifree/classifier.hpp"

namespace semifree {

using Vec = std::vector<Int>;

// <normal, x> + offset >= 0, normal primitive and inward
struct Facet {
    Vec normal;
    Int offset = 0;
    auto operator<=>(const Facet&) const = default;
};

struct GraphEdge {
    int a = 0, b = 0;
    Vec dir;        // primitive, from a to b
    Int length = 0; // lattice length
};

// Moment images shared by polytopes and GKM graphs: positions, edges and incidence.
struct MomentGraph {
    int dim = 0;
    std::vector<Vec> vertices;
    std::vector<GraphEdge> edges;

    // incident edges of v as (edge index, other vertex, primitive direction out of v)
    struct Half {
        int edge, to;
        Vec dir;
    };
    std::vector<Half> around(int v) const;
    void add_edge(int a, int b); // direction and length from positions
};

struct DelzantPolytope : MomentGraph {
    std::vector<Facet> facets;
    std::vector<std::vector<int>> vertex_facets;

    // throws std::invalid_argument on duplicate or non-extreme vertices
    static DelzantPolytope from_vertices(int dim, std::vector<Vec> vertices);
    static DelzantPolytope from_facets(int dim, std::vector<Facet> facets);
};

struct GkmGraph : MomentGraph {
    // edges as vertex index pairs; throws on bad indices or zero-length edges
    static GkmGraph from_edges(std::vector<Vec> vertices, const std::vector<std::pair<int, int>>& edges);
};

bool check_delzant(const DelzantPolytope& p);
// every vertex 3-valent with pairwise independent directions
bool check_gkm(const GkmGraph& g);
bool check_reflexive(const DelzantPolytope& p);
// throws std::invalid_argument for a zero or non-primitive xi
bool check_semifree(const MomentGraph& g, const Vec& xi);

Int balanced_shift(const MomentGraph& g, const Vec& xi);
std::vector<FixedComponentRecord> fixed_components(const MomentGraph& g, const Vec& xi);

// 6 * Euclidean volume
Int chern_number_cubed(const DelzantPolytope& p);
// equivariant localization over the vertices; works for polytopes and GKM graphs
Rational chern_number_cubed_localized(const MomentGraph& g);
Int betti2(const std::vector<FixedComponentRecord>& comps);

// blow-up along the invariant sphere joining vertices a and b
DelzantPolytope blow_up_edge(const DelzantPolytope& p, int a, int b);
GkmGraph blow_up_edge(const GkmGraph& g, int a, int b);

// comparable description of fixed data: levels, dims, volumes, normal degrees, c1^3, b2
std::string fixed_signature(const std::vector<FixedComponentRecord>& comps, Int c1_cubed, Int b2);
std::string fixed_signature(const TFD& t);

// the same fixed data for the inverse circle action
std::vector<FixedComponentRecord> reversed(std::vector<FixedComponentRecord> comps);

struct MatchResult {
    std::optional<std::string> label;
    std::vector<std::string> candidates; // several when ambiguous; "(unlisted)" for rows missing from the tables
};

MatchResult match_tfd(const std::vector<FixedComponentRecord>& comps, Int c1_cubed, Int b2,
                      const std::vector<TFD>& tables);

struct MomentExample {
    std::string path;
    std::string name;
    std::string kind; // "polytope" | "gkm"
    std::optional<DelzantPolytope> polytope;
    std::optional<GkmGraph> gkm;
    Vec xi;
    std::string expected_label;
    std::string paper_figure;

    const MomentGraph& graph() const;
};

// throws std::runtime_error with a diagnostic on malformed files
MomentExample load_moment_example(const std::string& path);

struct ExampleReport {
    std::string file;
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<FixedComponentRecord> components;
    Int c1_cubed = 0;
    Int b2 = 0;
    std::optional<std::string> label;
    std::vector<std::string> candidates;
    std::string expected_label;
    bool ok() const;
};

ExampleReport verify_example(const MomentExample& ex, const std::vector<TFD>& tables);

} // namespace semifree
