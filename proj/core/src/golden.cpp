#include "semifree/golden.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace semifree {

using nlohmann::json;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string describe(const TFD& t) {
    std::string s = t.params.spec.str() + " M0=" + t.lattice0.name() + " e=" + t.params.seed_euler.str() +
                    " pts(-1)=" + std::to_string(t.params.m_minus) + " Z0={";
    for (std::size_t i = 0; i < t.params.z0.size(); ++i) s += (i ? ", " : "") + t.params.z0[i].str();
    return s + "} b2=" + std::to_string(t.derived.b2) + " c1^3=" + std::to_string(t.derived.c1_cubed);
}

// same surface up to the S2xS2#k / E_S2#k / X_{k+1} identifications
bool same_surface(const SurfaceLattice& a, const SurfaceLattice& b) {
    return a.rank() == b.rank() && a.is_even() == b.is_even();
}

} // namespace

std::vector<PaperRow> load_paper_rows(const std::string& path) {
    json doc = read_json(path);
    std::vector<PaperRow> out;
    try {
        for (const auto& r : doc.at("rows")) {
            PaperRow p;
            p.label = r.at("label").get<std::string>();
            p.printed_label = r.value("printed_label", "");
            p.table = r.at("table").get<std::string>();
            p.case_spec = r.at("case").get<std::string>();
            p.m0_printed = r.at("m0_printed").get<std::string>();
            p.seed = r.at("seed").get<std::string>();
            p.seed_euler = r.at("seed_euler").get<std::string>();
            p.points_minus = r.at("points_minus").get<int>();
            p.z0 = r.at("z0").get<std::vector<std::string>>();
            p.z0_genus = r.at("z0_genus").get<std::vector<Int>>();
            p.b2 = r.at("b2").get<Int>();
            p.c1_cubed = r.at("c1_cubed").get<Int>();
            if (r.contains("vol_min")) p.vol_min = r["vol_min"].get<Int>();
            if (r.contains("vol_max")) p.vol_max = r["vol_max"].get<Int>();
            p.note = r.value("note", "");
            out.push_back(std::move(p));
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return out;
}

std::vector<PaperRow4> load_paper_rows_4dim(const std::string& path) {
    json doc = read_json(path);
    std::vector<PaperRow4> out;
    try {
        for (const auto& r : doc.at("rows")) {
            PaperRow4 p;
            p.label = r.at("label").get<std::string>();
            p.case_spec = r.at("case").get<std::string>();
            p.k = r.at("points").get<int>();
            p.b = r.at("b").get<Int>();
            p.manifold = r.at("manifold").get<std::string>();
            p.euler = r.at("euler").get<std::string>();
            out.push_back(std::move(p));
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return out;
}

TfdParams params_of(const PaperRow& row) {
    TfdParams p;
    p.spec = CaseSpec::parse(row.case_spec);
    p.seed = SurfaceLattice::parse(row.seed);
    p.seed_euler = CohClass::parse(p.seed, row.seed_euler);
    p.m_minus = row.points_minus;
    SurfaceLattice L = p.seed.blown_up(p.m_minus);
    for (const auto& z : row.z0) p.z0.push_back(CohClass::parse(L, z));
    return p;
}

LabeledTable label_rows(const std::vector<TFD>& enumerated, const std::vector<PaperRow>& rows) {
    LabeledTable out;
    std::map<std::string, const TFD*> by_key;
    for (const auto& t : enumerated) by_key[t.key] = &t;
    std::map<std::string, std::string> seen;
    std::map<std::string, bool> used;

    for (const auto& row : rows) {
        std::string why;
        std::optional<TFD> t;
        try {
            t = build_tfd(params_of(row), &why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (!t) {
            out.findings.push_back(row.label + ": transcribed data fails validation: " + why);
            out.missing.push_back(row.label);
            continue;
        }
        if (!row.printed_label.empty())
            out.findings.push_back(row.label + ": printed in the table as " + row.printed_label);
        try {
            if (!same_surface(SurfaceLattice::parse(row.m0_printed), t->lattice0))
                out.findings.push_back(row.label + ": printed M0 " + row.m0_printed + " but the fixed point data give " +
                                       t->lattice0.name());
        } catch (const std::exception&) {
            out.findings.push_back(row.label + ": unreadable printed M0 " + row.m0_printed);
        }
        if (t->derived.c1_cubed != row.c1_cubed)
            out.findings.push_back(row.label + ": tabled c1^3 " + std::to_string(row.c1_cubed) + ", computed " +
                                   std::to_string(t->derived.c1_cubed));
        if (t->derived.b2 != row.b2)
            out.findings.push_back(row.label + ": tabled b2 " + std::to_string(row.b2) + ", computed " +
                                   std::to_string(t->derived.b2));
        for (std::size_t i = 0; i < row.z0.size() && i < row.z0_genus.size(); ++i) {
            auto g = adjunction_genus(t->params.z0[i]);
            if (!g || *g != row.z0_genus[i])
                out.findings.push_back(row.label + ": genus of " + row.z0[i] + " differs from the table");
        }
        if ((row.vol_min && *row.vol_min != t->vol_min) || (row.vol_max && *row.vol_max != t->vol_max))
            out.findings.push_back(row.label + ": extremal volumes differ from the table");

        TFD c = canonical(*t);
        if (auto it = seen.find(c.key); it != seen.end()) {
            out.findings.push_back(row.label + ": same fixed point data as " + it->second);
            continue;
        }
        seen[c.key] = row.label;
        auto hit = by_key.find(c.key);
        if (hit == by_key.end()) {
            out.findings.push_back(row.label + ": not produced by the enumeration");
            out.missing.push_back(row.label);
            continue;
        }
        used[c.key] = true;
        TFD r = *hit->second;
        r.label = row.label;
        if (!row.note.empty()) r.flags.push_back(row.note);
        out.rows.push_back(std::move(r));
    }
    for (const auto& t : enumerated) {
        if (used.count(t.key)) continue;
        TFD r = t;
        r.flags.push_back("not listed in the published table");
        out.findings.push_back("unlisted: " + describe(t));
        out.rows.push_back(std::move(r));
    }
    return out;
}

LabeledTable classify_all(const std::string& paper_tables_path) {
    Tables t = all_tables();
    std::vector<TFD> all = t.a;
    all.insert(all.end(), t.b.begin(), t.b.end());
    all.insert(all.end(), t.c.begin(), t.c.end());
    return label_rows(all, load_paper_rows(paper_tables_path));
}

void label_rows_4dim(std::vector<TFD4>& rows, const std::vector<PaperRow4>& paper,
                     std::vector<std::string>* findings) {
    std::vector<bool> hit(paper.size(), false);
    for (auto& r : rows) {
        for (std::size_t i = 0; i < paper.size(); ++i) {
            const auto& p = paper[i];
            if (CaseSpec::parse(p.case_spec) != r.spec || p.k != r.k || p.b != r.b) continue;
            r.label = p.label;
            hit[i] = true;
            if (findings && (p.manifold != r.manifold || p.euler != r.euler_str()))
                findings->push_back(p.label + ": manifold or Euler class differs from the table");
        }
        if (r.label.empty() && findings) findings->push_back("unlisted 4-dimensional row " + r.spec.str());
    }
    for (std::size_t i = 0; i < paper.size(); ++i)
        if (!hit[i] && findings) findings->push_back(paper[i].label + ": not produced by the enumeration");
}

} // namespace semifree
