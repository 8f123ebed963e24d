// semifree: classification tables, moment-data verification, localization and capacities.
// Exit codes: 0 success, 1 mismatch against golden data or a failed check, 2 malformed input.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semifree/capacity.hpp"
#include "semifree/golden.hpp"
#include "semifree/io.hpp"
#include "semifree/momentdata.hpp"

namespace fs = std::filesystem;
using namespace semifree;

namespace {

struct Options {
    std::vector<std::string> cases;
    int dim = 6;
    std::string format = "text";
    bool no_golden = false;
    std::string golden_dir = SEMIFREE_GOLDEN_DIR;
    std::string data_dir = SEMIFREE_MOMENT_DATA_DIR;
    std::vector<std::string> paths;
    bool all = false;
    std::string tfd_file;
    int power = 3;
    std::string label;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CaseSpec read_case(std::string text) {
    if (!text.empty() && text.front() != '(') text = "(" + text + ")";
    try {
        return CaseSpec::parse(text);
    } catch (const std::exception& e) {
        throw InputError("bad --case " + text + ": " + e.what());
    }
}

void print_findings(const std::vector<std::string>& findings) {
    for (const auto& f : findings) std::cerr << "finding: " << f << "\n";
}

int report_diff(const std::vector<std::string>& diff, const std::string& golden) {
    if (diff.empty()) {
        std::cerr << "golden: output matches " << golden << "\n";
        return 0;
    }
    std::cerr << "golden: " << diff.size() << " difference(s) against " << golden << "\n";
    for (const auto& d : diff) std::cerr << "  " << d << "\n";
    return 1;
}

int cmd_classify(const Options& o) {
    Format f = parse_format(o.format);
    std::vector<std::string> case_strs;
    for (const auto& c : o.cases) case_strs.push_back(read_case(c).str());
    std::set<std::string> wanted(case_strs.begin(), case_strs.end());

    if (o.dim == 4) {
        auto rows = table4dim();
        std::vector<std::string> findings;
        label_rows_4dim(rows, load_paper_rows_4dim(o.golden_dir + "/table4dim.json"), &findings);
        std::erase_if(rows, [&](const TFD4& r) { return !wanted.empty() && !wanted.count(r.spec.str()); });
        std::cout << render_tfd4(rows, f);
        print_findings(findings);
        if (o.no_golden) return 0;
        std::string golden = o.golden_dir + "/tfd4_frozen.json";
        return report_diff(golden_diff(render_tfd4(rows, Format::Json), golden, case_strs), golden);
    }
    if (o.dim != 6) throw InputError("--dim must be 4 or 6");

    auto labeled = classify_all(o.golden_dir + "/paper_tables.json");
    std::vector<TFD> rows;
    for (const auto& t : labeled.rows)
        if (wanted.empty() || wanted.count(t.params.spec.str())) rows.push_back(t);
    std::cout << render_tfds(rows, f);
    print_findings(labeled.findings);
    if (o.no_golden) return 0;
    std::string golden = o.golden_dir + "/tfd_frozen.json";
    return report_diff(golden_diff(render_tfds(rows, Format::Json), golden, case_strs), golden);
}

int cmd_verify(const Options& o) {
    Format f = parse_format(o.format);
    std::vector<std::string> files = o.paths;
    if (o.all) {
        for (const auto& e : fs::directory_iterator(o.data_dir))
            if (e.path().extension() == ".json") files.push_back(e.path().string());
        std::sort(files.begin(), files.end());
    }
    if (files.empty()) throw InputError("no moment-data files given (pass paths or --all)");
    std::vector<MomentExample> examples;
    for (const auto& p : files) {
        try {
            examples.push_back(load_moment_example(p));
        } catch (const std::runtime_error& e) {
            throw InputError(e.what());
        }
    }
    auto labeled = classify_all(o.golden_dir + "/paper_tables.json");
    std::vector<ExampleReport> reports;
    bool ok = true;
    for (const auto& ex : examples) {
        reports.push_back(verify_example(ex, labeled.rows));
        ok = ok && reports.back().ok();
    }
    std::cout << render_reports(reports, f);
    return ok ? 0 : 1;
}

int cmd_localize(const Options& o) {
    TFD t;
    try {
        t = load_tfd(o.tfd_file);
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
    std::cout << integrate(t.local_data(), o.power).str() << "\n";
    return 0;
}

int cmd_capacities(const Options& o) {
    Format f = parse_format(o.format);
    auto labeled = classify_all(o.golden_dir + "/paper_tables.json");
    if (!o.label.empty()) {
        auto it = std::find_if(labeled.rows.begin(), labeled.rows.end(),
                               [&](const TFD& t) { return t.label == o.label; });
        if (it == labeled.rows.end()) throw InputError("unknown label " + o.label);
        std::cout << render_capacities({capacities(*it)}, f);
        return 0;
    }
    std::vector<TFD> listed;
    for (const auto& t : labeled.rows)
        if (!t.label.empty()) listed.push_back(t);
    auto rows = capacity_table(listed);
    std::cout << render_capacities(rows, f);
    if (o.no_golden) return 0;
    auto paper = load_paper_capacities(o.golden_dir + "/capacities_table.json");
    int bad = 0;
    for (const auto& p : paper) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const CapacityRow& r) { return r.label == p.label; });
        if (it == rows.end()) {
            std::cerr << "golden: " << p.label << " missing from output\n";
            ++bad;
        } else if (it->gromov_width != p.gromov_width || it->hofer_zehnder != p.hofer_zehnder ||
                   it->h_smin != p.h_smin || it->h_min != p.h_min || it->h_max != p.h_max) {
            std::cerr << "golden: " << p.label << " published (w_G, c_HZ) = (" << *p.gromov_width << ", "
                      << *p.hofer_zehnder << "), H_smin " << p.h_smin << "; computed (" << *it->gromov_width << ", "
                      << *it->hofer_zehnder << "), H_smin " << it->h_smin << "\n";
            ++bad;
        }
    }
    if (rows.size() != paper.size()) {
        std::cerr << "golden: " << rows.size() << " rows computed, " << paper.size() << " published\n";
        ++bad;
    }
    if (bad == 0) std::cerr << "golden: capacity table matches the published table\n";
    return bad ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semifree circle actions on monotone symplectic 6-manifolds"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json, markdown or text")
            ->check(CLI::IsMember({"json", "markdown", "md", "text"}));
        c->add_option("--golden-dir", o.golden_dir, "directory with golden and transcribed tables");
    };

    auto* classify = app.add_subcommand("classify", "enumerate fixed point data and compare with golden tables");
    classify->add_option("--case", o.cases, "restrict to a case, e.g. \"0,0,{-3,0,3}\"");
    classify->add_option("--dim", o.dim, "6 (default) or 4 for the 4-dimensional table")
        ->check(CLI::IsMember({4, 6}));
    classify->add_flag("--no-golden", o.no_golden, "skip the golden comparison");
    add_common(classify);

    auto* verify = app.add_subcommand("verify-moment-data", "check polytopes and GKM graphs against the tables");
    verify->add_option("paths", o.paths, "example files");
    verify->add_flag("--all", o.all, "every file in the moment-data directory");
    verify->add_option("--data-dir", o.data_dir, "moment-data directory for --all");
    add_common(verify);

    auto* localize = app.add_subcommand("localize", "integrate c1^p over a TFD file by localization");
    localize->add_option("file", o.tfd_file, "TFD JSON (a row of classify --format json)")->required();
    localize->add_option("--power", o.power, "0, 1 or 3")->check(CLI::IsMember({0, 1, 3}));
    add_common(localize);

    auto* caps = app.add_subcommand("capacities", "Gromov width and Hofer-Zehnder capacity");
    caps->add_option("--label", o.label, "a single row, e.g. \"(I-2)\"");
    caps->add_flag("--no-golden", o.no_golden, "skip the comparison with the published table");
    add_common(caps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (*classify) return cmd_classify(o);
        if (*verify) return cmd_verify(o);
        if (*localize) return cmd_localize(o);
        if (*caps) return cmd_capacities(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
