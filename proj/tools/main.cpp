#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lrc/locality.hpp"
#include "lrc/lowweight.hpp"
#include "lrc/oval.hpp"
#include "tables.hpp"

using namespace lrc;
using namespace lrc::cli;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kCapped = 2;

struct Shared {
    std::string caps_text;
    Caps caps() const { return caps_text.empty() ? default_caps() : parse_caps(caps_text); }
};

int run_construct(const Shared& g, const std::vector<std::string>& words, const std::vector<std::string>& transforms,
                  const std::string& out_path) {
    const BuiltCode b = build_code(parse_code_spec(words, transforms));
    const LinearCode& C = b.code;
    for (const auto& w : b.warnings) std::cerr << "warning: " << w << "\n";
    std::string d = "?";
    int status = kOk;
    if (C.dimension() > 0) {
        try {
            d = std::to_string(minimum_distance(C, g.caps()));
        } catch (const Error& e) {
            if (!e.is_cap()) throw;
            d = "skipped: cap";
            status = kCapped;
        }
    }
    const std::string params = "[" + std::to_string(C.length()) + "," + std::to_string(C.dimension()) + "," + d + "]";
    if (out_path == "-") {
        write_matrix(std::cout, C);
        std::cerr << params << "\n";
    } else {
        write_matrix_file(out_path, C);
        std::cout << params << "\n";
    }
    return status;
}

int run_analyze(const Shared& g, const std::vector<std::string>& words, const std::vector<std::string>& transforms,
                const std::vector<std::string>& designs, const std::vector<std::size_t>& extra_r, bool bound_terms,
                bool json) {
    AnalyzeOptions opts;
    opts.caps = g.caps();
    opts.bound_terms = bound_terms;
    opts.extra_r = extra_r;
    for (const auto& d : designs) opts.designs.push_back(parse_design_request(d));
    const Analysis a = analyze(build_code(parse_code_spec(words, transforms)), opts);
    if (json)
        std::cout << a.json.dump(2) << "\n";
    else
        std::cout << render_analysis(a.json, bound_terms);
    return a.capped ? kCapped : kOk;
}

int run_table_cmd(const Shared& g, int which, const std::string& filter, bool json) {
    const TableResult t = run_table(which, g.caps(), filter);
    if (json)
        std::cout << t.json.dump(2) << "\n";
    else
        std::cout << t.text;
    if (t.failures) return kError;
    return t.skipped ? kCapped : kOk;
}

int run_validate_oval(std::uint64_t q, const std::string& f, bool catalog, bool json) {
    Json out = Json::array();
    bool all_ok = true;
    auto report = [&](const std::string& spec, const OvalPolynomial& p) {
        const bool ok = is_oval_polynomial(*p.field, p.poly);
        all_ok = all_ok && ok;
        Json e = oval_json(p);
        e["spec"] = spec;
        e["is_oval_polynomial"] = ok;
        out.push_back(e);
        if (!json) std::cout << spec << "  " << p.poly.to_string() << "  " << (ok ? "oval polynomial" : "NOT an oval polynomial") << "\n";
    };
    if (catalog) {
        for (const auto& p : oval_catalog(q)) report(p.tag(), p);
    }
    if (!f.empty()) report(f, parse_oval_spec(f, q));
    require(catalog || !f.empty(), Errc::BadParams, "give f=<family[:h]|poly:c0,c1,...> or --catalog");
    if (json) std::cout << out.dump(2) << "\n";
    return all_ok ? kOk : kError;
}

int run_repair_sets(const Shared& g, const std::vector<std::string>& words, const std::vector<std::string>& transforms,
                    std::optional<std::size_t> coord, bool all, bool json) {
    const BuiltCode b = build_code(parse_code_spec(words, transforms));
    const LinearCode& C = b.code;
    const LocalityReport rep = minimum_linear_locality(C, g.caps());
    Json out = Json::array();
    if (!json) std::cout << "minimum linear locality r = " << rep.r_min << " over GF(" << C.field()->order() << ")\n";
    for (std::size_t i = 0; i < C.length(); ++i) {
        if (coord && *coord != i) continue;
        const Support set = rep.default_repair_set(i);
        const auto coeffs = repair_coefficients(C, i, set);
        Json e{{"coordinate", i}, {"repair_set", set}, {"options", rep.repair_options[i].size()}};
        Json cj = Json::object();
        for (const auto& [j, u] : coeffs) cj[std::to_string(j)] = u;
        e["coefficients"] = cj;
        if (all) e["all_supports"] = rep.repair_options[i];
        out.push_back(e);
        if (!json) {
            std::cout << "c_" << i << " =";
            bool first = true;
            for (const auto& [j, u] : coeffs) {
                std::cout << (first ? " " : " + ") << u << "*c_" << j;
                first = false;
            }
            std::cout << "   (" << rep.repair_options[i].size() << " minimal repair support(s))\n";
            if (all)
                for (const auto& s : rep.repair_options[i]) {
                    std::cout << "    {";
                    for (std::size_t t = 0; t < s.size(); ++t) std::cout << (t ? "," : "") << s[t];
                    std::cout << "}\n";
                }
        }
    }
    require(!coord || *coord < C.length(), Errc::BadCoordinate, "coordinate " + std::to_string(*coord) + " out of range");
    if (json) std::cout << out.dump(2) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locality analysis of linear codes: constructions, minimum linear locality, bounds and designs"};
    app.require_subcommand(1);
    Shared g;
    app.add_option("--caps", g.caps_text, "work caps, e.g. enum:2^26,search:2^24 (default: $LOCALITY_LAB_CAPS)");

    std::vector<std::string> words, transforms, designs;
    std::vector<std::size_t> extra_r;
    std::string out_path = "-", filter, oval_spec;
    bool json = false, bound_terms = false, catalog = false, all = false;
    int which = 0;
    std::uint64_t q = 0;
    std::optional<std::size_t> coord;

    const std::string families = [] {
        std::string s;
        for (const auto& f : family_names()) s += (s.empty() ? "" : ", ") + f;
        return s;
    }();
    auto add_code_args = [&](CLI::App* sub) {
        sub->add_option("code", words, "family followed by key=value parameters (" + families + ")")->required();
        sub->add_option("--transform,-t", transforms, "derived-code step, applied in order: dual, extend, augment, "
                                                      "shorten:i,j, puncture:i,j");
    };

    auto* construct = app.add_subcommand("construct", "build a code and write its generator matrix");
    add_code_args(construct);
    construct->add_option("--out,-o", out_path, "matrix file to write ('-' for stdout)");

    auto* analyze_cmd = app.add_subcommand("analyze", "weight distribution, locality, bounds and designs of a code");
    add_code_args(analyze_cmd);
    analyze_cmd->add_option("--designs", designs, "support designs to check, as t:w");
    analyze_cmd->add_option("--r", extra_r, "also evaluate the bounds at this locality");
    analyze_cmd->add_flag("--bounds", bound_terms, "show the per-t terms of the CM bound");
    analyze_cmd->add_flag("--json", json, "emit JSON");

    auto* table = app.add_subcommand("table", "reproduce the rows of table 1 or 2 at small parameters");
    table->add_option("which", which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    table->add_option("--row", filter, "only rows whose name contains this text");
    table->add_flag("--json", json, "emit JSON");

    auto* oval = app.add_subcommand("validate-oval", "check oval polynomials exhaustively");
    std::vector<std::string> oval_words;
    oval->add_option("params", oval_words, "q=<q> and optionally f=<family[:h]|poly:c0,c1,...>")->required();
    oval->add_flag("--catalog", catalog, "check every catalog polynomial available at q");
    oval->add_flag("--json", json, "emit JSON");

    auto* repair = app.add_subcommand("repair-sets", "minimal repair sets and recovery coefficients");
    add_code_args(repair);
    repair->add_option("--coord", coord, "only this coordinate");
    repair->add_flag("--all", all, "list every minimal repair support");
    repair->add_flag("--json", json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) return run_construct(g, words, transforms, out_path);
        if (*analyze_cmd) return run_analyze(g, words, transforms, designs, extra_r, bound_terms, json);
        if (*table) return run_table_cmd(g, which, filter, json);
        if (*repair) return run_repair_sets(g, words, transforms, coord, all, json);
        if (*oval) {
            for (const auto& w : oval_words) {
                const auto eq = w.find('=');
                require(eq != std::string::npos, Errc::BadParams, "expected key=value, got '" + w + "'");
                const std::string key = w.substr(0, eq), val = w.substr(eq + 1);
                if (key == "q")
                    q = std::stoull(val);
                else if (key == "f")
                    oval_spec = val;
                else
                    fail(Errc::BadParams, "validate-oval does not take " + key + "=");
            }
            require(q > 0, Errc::BadParams, "validate-oval needs q=<q>");
            return run_validate_oval(q, oval_spec, catalog, json);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_cap() ? kCapped : kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
