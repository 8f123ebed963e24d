#include "semifree/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace semifree {

using nlohmann::json;

namespace {

// shared class format: {"lattice": "X_2", "coeffs": [3, -1, -1]}
json class_json(const CohClass& c) { return {{"lattice", c.lattice().name()}, {"coeffs", c.coeffs()}}; }

// accepts the object form or a string such as "2u - E1"
CohClass class_from(const json& j, const SurfaceLattice& lat) {
    if (j.is_string()) return CohClass::parse(lat, j.get<std::string>());
    SurfaceLattice given = SurfaceLattice::parse(j.at("lattice").get<std::string>());
    CohClass c(given, j.at("coeffs").get<std::vector<Int>>());
    if (given == lat) return c;
    if (!convertible(given, lat)) throw std::invalid_argument("class lattice " + given.name() + " is not " + lat.name());
    return convert_basis(c, lat);
}

bool present(const CohClass& c) { return c.rank() > 0; }

json component_json(const FixedComponentRecord& c) {
    json j{{"level", c.level}, {"dim", c.dim}, {"type", c.type}};
    if (c.dim == 0) j["weights"] = c.weights;
    if (c.dim == 2) {
        j["genus"] = c.genus;
        j["volume"] = c.volume;
        if (c.cls) j["class"] = class_json(*c.cls);
        if (c.level == 0) {
            j["b_neg"] = c.b_neg;
            j["b_pos"] = c.b_pos;
        } else {
            j["b"] = c.b;
        }
    }
    if (c.dim == 4) {
        j["volume"] = c.volume;
        if (c.euler) j["euler"] = class_json(*c.euler);
    }
    return j;
}

json tfd_json(const TFD& t) {
    json j;
    j["label"] = t.label;
    j["case"] = t.params.spec.str();
    j["seed"] = t.params.seed.name();
    j["seed_euler"] = class_json(t.params.seed_euler);
    j["m_minus"] = t.params.m_minus;
    json z = json::array();
    for (const auto& c : t.params.z0) z.push_back(class_json(c));
    j["z0"] = z;
    j["M0"] = t.lattice0.name();
    for (auto [name, c] : {std::pair{"omega0", &t.omega0}, {"omega_m1", &t.omega_m1}, {"omega_p1", &t.omega_p1},
                           {"euler_min_plus", &t.euler_min_plus}, {"euler_minus", &t.euler_minus},
                           {"euler_plus", &t.euler_plus}, {"euler_top", &t.euler_top}})
        if (present(*c)) j[name] = class_json(*c);
    json bd = json::array();
    for (const auto& c : t.blowdowns) bd.push_back(class_json(c));
    j["blowdowns"] = bd;
    j["b_min"] = t.b_min;
    j["b_max"] = t.b_max;
    j["vol_min"] = t.vol_min;
    j["vol_max"] = t.vol_max;
    json comps = json::array();
    for (const auto& c : t.components) comps.push_back(component_json(c));
    j["components"] = comps;
    j["b2"] = t.derived.b2;
    j["c1_cubed"] = t.derived.c1_cubed;
    j["poincare"] = t.derived.poincare;
    j["flags"] = t.flags;
    j["key"] = t.key;
    return j;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string z0_str(const TFD& t) {
    std::vector<std::string> v;
    for (const auto& c : t.params.z0) v.push_back(c.str());
    return v.empty() ? "-" : join(v, ", ");
}

// simple aligned text table
std::string text_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            os << r[i];
            if (i + 1 < r.size()) os << std::string(w[i] - r[i].size() + 2, ' ');
        }
        os << "\n";
    };
    line(head);
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string md_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    os << "| " << join(head, " | ") << " |\n|";
    for (std::size_t i = 0; i < head.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& r : rows) os << "| " << join(r, " | ") << " |\n";
    return os.str();
}

std::string table(Format f, const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    return f == Format::Markdown ? md_table(head, rows) : text_table(head, rows);
}

std::string opt(const std::optional<Int>& v) { return v ? std::to_string(*v) : "-"; }

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "markdown" || name == "md") return Format::Markdown;
    if (name == "text") return Format::Text;
    throw std::invalid_argument("unknown format " + name);
}

std::string render_tfds(const std::vector<TFD>& rows, Format f) {
    if (f == Format::Json) {
        json doc{{"format", "semifree-tfd/1"}, {"rows", json::array()}};
        for (const auto& t : rows) doc["rows"].push_back(tfd_json(t));
        return doc.dump(1) + "\n";
    }
    std::vector<std::vector<std::string>> body;
    for (const auto& t : rows) {
        std::string flags = join(t.flags, "; ");
        body.push_back({t.label.empty() ? "?" : t.label, t.params.spec.str(), t.lattice0.name(),
                        t.params.seed_euler.str(), std::to_string(t.params.m_minus), z0_str(t),
                        std::to_string(t.count_points(1)), std::to_string(t.derived.b2),
                        std::to_string(t.derived.c1_cubed), flags.empty() ? "-" : flags});
    }
    return table(f, {"label", "case", "M0", "e", "pts(-1)", "Z0", "pts(1)", "b2", "c1^3", "flags"}, body);
}

std::string render_tfd4(const std::vector<TFD4>& rows, Format f) {
    if (f == Format::Json) {
        json doc{{"format", "semifree-tfd4/1"}, {"rows", json::array()}};
        for (const auto& r : rows)
            doc["rows"].push_back({{"label", r.label}, {"case", r.spec.str()}, {"points", r.k}, {"a", r.a},
                                   {"b", r.b}, {"area_max", r.area_max}, {"manifold", r.manifold},
                                   {"euler", r.euler_str()}, {"b2", r.b2}});
        return doc.dump(1) + "\n";
    }
    std::vector<std::vector<std::string>> body;
    for (const auto& r : rows)
        body.push_back({r.label.empty() ? "?" : r.label, r.spec.str(), std::to_string(r.k), r.euler_str(),
                        r.manifold, std::to_string(r.b2)});
    return table(f, {"label", "case", "points", "e(P_min^+)", "M", "b2"}, body);
}

std::string render_capacities(const std::vector<CapacityRow>& rows, Format f) {
    if (f == Format::Json) {
        json doc{{"format", "semifree-capacities/1"}, {"rows", json::array()}};
        for (const auto& r : rows) {
            json j{{"label", r.label}, {"h_min", r.h_min}, {"h_smin", r.h_smin}, {"h_max", r.h_max},
                   {"status", r.status}};
            j["gromov_width"] = r.gromov_width ? json(*r.gromov_width) : json(nullptr);
            j["hofer_zehnder"] = r.hofer_zehnder ? json(*r.hofer_zehnder) : json(nullptr);
            doc["rows"].push_back(j);
        }
        return doc.dump(1) + "\n";
    }
    std::vector<std::vector<std::string>> body;
    for (const auto& r : rows)
        body.push_back({r.label, std::to_string(r.h_max), std::to_string(r.h_smin), std::to_string(r.h_min),
                        opt(r.gromov_width), opt(r.hofer_zehnder), r.status});
    return table(f, {"label", "H_max", "H_smin", "H_min", "w_G", "c_HZ", "status"}, body);
}

std::string render_reports(const std::vector<ExampleReport>& reports, Format f) {
    if (f == Format::Json) {
        json doc{{"format", "semifree-verify/1"}, {"reports", json::array()}};
        for (const auto& r : reports) {
            json checks = json::object();
            for (const auto& [n, v] : r.checks) checks[n] = v;
            doc["reports"].push_back({{"file", r.file},
                                      {"checks", checks},
                                      {"c1_cubed", r.c1_cubed},
                                      {"b2", r.b2},
                                      {"label", r.label ? json(*r.label) : json(nullptr)},
                                      {"candidates", r.candidates},
                                      {"expected_label", r.expected_label},
                                      {"ok", r.ok()}});
        }
        return doc.dump(1) + "\n";
    }
    std::vector<std::vector<std::string>> body;
    for (const auto& r : reports) {
        std::vector<std::string> failed;
        for (const auto& [n, v] : r.checks)
            if (!v) failed.push_back(n);
        std::string label = r.label ? *r.label : (r.candidates.empty() ? "none" : join(r.candidates, " or "));
        body.push_back({r.file, failed.empty() ? "all" : "FAILED: " + join(failed, ", "), std::to_string(r.c1_cubed),
                        label, r.expected_label, r.ok() ? "ok" : "MISMATCH"});
    }
    return table(f, {"file", "checks", "c1^3", "label", "expected", "status"}, body);
}

TFD parse_tfd(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(e.what());
    }
    // a one-row table document is accepted as well
    if (j.is_object() && j.contains("rows")) {
        if (j["rows"].size() != 1) throw std::runtime_error("expected a single TFD row");
        j = j["rows"][0];
    }
    try {
        TfdParams p;
        p.spec = CaseSpec::parse(j.at("case").get<std::string>());
        p.seed = SurfaceLattice::parse(j.at("seed").get<std::string>());
        p.seed_euler = class_from(j.at("seed_euler"), p.seed);
        p.m_minus = j.at("m_minus").get<int>();
        SurfaceLattice L = p.seed.blown_up(p.m_minus);
        for (const auto& z : j.at("z0")) p.z0.push_back(class_from(z, L));
        std::string why;
        auto t = build_tfd(p, &why);
        if (!t) throw std::runtime_error("fixed point data rejected: " + why);
        t->label = j.value("label", "");
        // keep the orientation as given, key it like the classifier does
        t->key = canonical(*t).key;
        return *t;
    } catch (const json::exception& e) {
        throw std::runtime_error(e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

TFD load_tfd(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_tfd(ss.str());
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::vector<std::string> golden_diff(const std::string& emitted, const std::string& golden_path,
                                     const std::vector<std::string>& cases) {
    json got = json::parse(emitted);
    json want = read_file(golden_path);
    if (got.at("format") != want.at("format")) return {"format differs from " + golden_path};
    std::set<std::string> case_set(cases.begin(), cases.end());
    auto wanted = [&](const json& r) { return case_set.empty() || case_set.count(r.at("case").get<std::string>()); };
    // rows are compared in order; a label or key names each row in the diff
    auto name = [](const json& r) {
        std::string l = r.value("label", "");
        return l.empty() ? r.at("case").get<std::string>() + " " + r.value("key", "") : l;
    };
    std::vector<json> a, b;
    for (const auto& r : got.at("rows")) a.push_back(r);
    for (const auto& r : want.at("rows"))
        if (wanted(r)) b.push_back(r);
    std::vector<std::string> diff;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= a.size()) {
            diff.push_back("- " + name(b[i]) + " (missing from output)");
            continue;
        }
        if (i >= b.size()) {
            diff.push_back("+ " + name(a[i]) + " (not in golden)");
            continue;
        }
        if (a[i] == b[i]) continue;
        for (auto it = b[i].begin(); it != b[i].end(); ++it)
            if (!a[i].contains(it.key()) || a[i][it.key()] != it.value())
                diff.push_back("~ " + name(b[i]) + " " + it.key() + ": golden " + it.value().dump() + ", got " +
                               (a[i].contains(it.key()) ? a[i][it.key()].dump() : "nothing"));
        for (auto it = a[i].begin(); it != a[i].end(); ++it)
            if (!b[i].contains(it.key())) diff.push_back("~ " + name(a[i]) + " " + it.key() + ": not in golden");
    }
    return diff;
}

std::vector<CapacityRow> load_paper_capacities(const std::string& path) {
    json doc = read_file(path);
    std::vector<CapacityRow> out;
    try {
        for (const auto& r : doc.at("rows")) {
            CapacityRow c;
            c.label = r.at("label").get<std::string>();
            c.h_max = r.at("h_max").get<Int>();
            c.h_smin = r.at("h_smin").get<Int>();
            c.h_min = r.at("h_min").get<Int>();
            c.gromov_width = r.at("gromov_width").get<Int>();
            c.hofer_zehnder = r.at("hofer_zehnder").get<Int>();
            c.status = "ok";
            out.push_back(c);
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return out;
}

} // namespace semifree
