#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

#include "lrc/bounds.hpp"
#include "lrc/constructions.hpp"
#include "lrc/designs.hpp"
#include "lrc/enumerate.hpp"
#include "lrc/geometry.hpp"
#include "lrc/locality.hpp"
#include "lrc/lowweight.hpp"
#include "lrc/oval.hpp"

namespace lrc::cli {

namespace {

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    require(ec == std::errc() && ptr == end && !text.empty(), Errc::BadParams,
            what + " must be a non-negative integer, got '" + text + "'");
    return v;
}

std::vector<std::uint64_t> parse_list(const std::string& text, const std::string& what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_uint(item, what));
    require(!out.empty(), Errc::BadParams, what + " must be a comma-separated list of integers");
    return out;
}

// Tracks which parameters a family consumed so leftovers can be reported.
class Params {
public:
    explicit Params(const CodeSpec& spec) : spec_(spec) {}

    const std::string& text(const std::string& key) {
        auto it = spec_.params.find(key);
        require(it != spec_.params.end(), Errc::BadParams, spec_.family + " needs " + key + "=...");
        used_.insert(key);
        return it->second;
    }
    std::uint64_t num(const std::string& key) { return parse_uint(text(key), key); }
    std::uint32_t small(const std::string& key) {
        const std::uint64_t v = num(key);
        require(v <= 64, Errc::BadParams, key + " = " + std::to_string(v) + " is out of range");
        return static_cast<std::uint32_t>(v);
    }
    void finish() const {
        for (const auto& [k, v] : spec_.params)
            require(used_.count(k), Errc::BadParams, spec_.family + " does not take " + k + "=" + v);
    }

private:
    const CodeSpec& spec_;
    std::set<std::string> used_;
};

using Builder = std::function<BuiltCode(Params&)>;

BuiltCode plain(LinearCode C) { return {std::move(C), "", {}}; }

const std::vector<std::pair<std::string, Builder>>& registry() {
    static const std::vector<std::pair<std::string, Builder>> families = {
        {"hamming", [](Params& p) { return plain(hamming(p.num("q"), p.small("m"))); }},
        {"simplex", [](Params& p) { return plain(simplex(p.num("q"), p.small("m"))); }},
        {"cyclic",
         [](Params& p) {
             const std::uint64_t q = p.num("q"), n = p.num("n");
             FieldPtr F = field_of_order(q);
             std::vector<Elem> g;
             for (auto c : parse_list(p.text("g"), "g")) {
                 require(c < q, Errc::BadParams, "coefficient " + std::to_string(c) + " is not in GF(" + std::to_string(q) + ")");
                 g.push_back(static_cast<Elem>(c));
             }
             return plain(cyclic_code(Poly(F, g), n));
         }},
        {"bch", [](Params& p) { return plain(bch(p.num("q"), p.num("n"), p.num("delta"), p.num("h"))); }},
        {"grm",
         [](Params& p) {
             const std::uint64_t q = p.num("q"), l = p.num("l");
             const std::uint32_t m = p.small("m");
             BuiltCode b = plain(grm(q, l, m));
             if (!grm_formulas_apply(q, l, m))
                 b.warnings.push_back("l >= q(m-1): the closed-form dimension and distance were not asserted");
             return b;
         }},
        {"grm-punctured",
         [](Params& p) {
             const std::uint64_t q = p.num("q"), l = p.num("l");
             const std::uint32_t m = p.small("m");
             BuiltCode b = plain(grm_punctured(q, l, m));
             if (!grm_formulas_apply(q, l, m))
                 b.warnings.push_back("l >= q(m-1): the closed-form dimension and distance were not asserted");
             return b;
         }},
        {"ovoid-elliptic", [](Params& p) { return plain(ovoid_code(elliptic_quadric(p.num("q")))); }},
        {"ovoid-tits", [](Params& p) { return plain(ovoid_code(tits_ovoid(p.num("q")))); }},
        {"arc-denniston", [](Params& p) { return plain(arc_code(denniston_arc(p.num("q"), p.num("h")))); }},
        {"oval-code-bfbar", [](Params& p) { return plain(code_Bf_bar(parse_oval_spec(p.text("f"), p.num("q")))); }},
        {"oval-code-gf", [](Params& p) { return plain(code_Gf(parse_oval_spec(p.text("f"), p.num("q")))); }},
        {"oval-code-gfbar", [](Params& p) { return plain(code_Gf_bar(parse_oval_spec(p.text("f"), p.num("q")))); }},
        {"ternary-golay", [](Params&) { return plain(ternary_golay()); }},
        {"from-file",
         [](Params& p) {
             const std::string path = p.text("path");
             return plain(read_matrix_file(path).with_label("file:" + path));
         }},
    };
    return families;
}

std::vector<std::size_t> parse_coords(const std::string& s) {
    std::vector<std::size_t> out;
    for (auto v : parse_list(s, "coordinate list")) out.push_back(static_cast<std::size_t>(v));
    return out;
}

}  // namespace

OvalPolynomial parse_oval_spec(const std::string& text, std::uint64_t q) {
    const auto colon = text.find(':');
    const std::string fam = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (fam == "poly") {
        FieldPtr F = field_of_order(q);
        std::vector<Elem> coeffs;
        for (auto c : parse_list(arg, "poly coefficients")) {
            require(c < q, Errc::BadParams, "coefficient " + std::to_string(c) + " is not in GF(" + std::to_string(q) + ")");
            coeffs.push_back(static_cast<Elem>(c));
        }
        return user_oval_polynomial(Poly(F, coeffs));
    }
    const OvalFamily family = parse_oval_family(fam);
    if (family == OvalFamily::Translation) {
        require(!arg.empty(), Errc::BadParams, "translation needs its exponent parameter, e.g. translation:1");
        return oval_poly(family, q, static_cast<std::uint32_t>(parse_uint(arg, "translation parameter")));
    }
    require(arg.empty(), Errc::BadParams, fam + " takes no parameter");
    return oval_poly(family, q);
}

CodeSpec parse_code_spec(const std::vector<std::string>& words, const std::vector<std::string>& transforms) {
    require(!words.empty(), Errc::BadParams, "missing family name");
    CodeSpec spec;
    spec.family = words.front();
    for (std::size_t i = 1; i < words.size(); ++i) {
        const auto eq = words[i].find('=');
        require(eq != std::string::npos && eq > 0, Errc::BadParams, "expected key=value, got '" + words[i] + "'");
        const std::string key = words[i].substr(0, eq);
        require(!spec.params.count(key), Errc::BadParams, "parameter " + key + " given twice");
        spec.params[key] = words[i].substr(eq + 1);
    }
    spec.transforms = transforms;
    return spec;
}

std::vector<std::string> family_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
}

LinearCode apply_transform(const LinearCode& C, const std::string& step) {
    const auto colon = step.find(':');
    const std::string op = step.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : step.substr(colon + 1);
    const std::string label = C.label().empty() ? "C" : C.label();
    if (op == "dual" && arg.empty()) return dual(C).with_label("dual(" + label + ")");
    if (op == "extend" && arg.empty()) return extend(C).with_label("extend(" + label + ")");
    if (op == "augment" && arg.empty()) return augment(C).with_label("augment(" + label + ")");
    if (op == "shorten" && !arg.empty()) return shorten(C, parse_coords(arg)).with_label("shorten(" + label + ";" + arg + ")");
    if (op == "puncture" && !arg.empty())
        return puncture(C, parse_coords(arg)).with_label("puncture(" + label + ";" + arg + ")");
    fail(Errc::BadParams, "unknown transform '" + step + "' (dual, extend, augment, shorten:i,..., puncture:i,...)");
}

BuiltCode build_code(const CodeSpec& spec) {
    const auto& fams = registry();
    auto it = std::find_if(fams.begin(), fams.end(), [&](const auto& f) { return f.first == spec.family; });
    if (it == fams.end()) {
        std::string known;
        for (const auto& f : fams) known += (known.empty() ? "" : ", ") + f.first;
        fail(Errc::UnknownFamily, "unknown family '" + spec.family + "' (known: " + known + ")");
    }
    Params p(spec);
    BuiltCode b = it->second(p);
    p.finish();
    std::string desc = spec.family;
    for (const auto& [k, v] : spec.params) desc += " " + k + "=" + v;
    for (const auto& t : spec.transforms) {
        b.code = apply_transform(b.code, t);
        desc += " | " + t;
    }
    b.description = desc;
    return b;
}

DesignRequest parse_design_request(const std::string& s) {
    const auto colon = s.find(':');
    require(colon != std::string::npos, Errc::BadParams, "design request must be t:w, got '" + s + "'");
    DesignRequest r{static_cast<std::size_t>(parse_uint(s.substr(0, colon), "t")),
                    static_cast<std::size_t>(parse_uint(s.substr(colon + 1), "w"))};
    require(r.t >= 1 && r.t <= r.w, Errc::BadParams, "design request needs 1 <= t <= w");
    return r;
}

namespace {

const char* kSkipped = "skipped: cap";

// Runs f; a cap error becomes a "skipped: cap" marker.
template <class F>
bool attempt(Analysis& a, Json& slot, F&& f) {
    try {
        f();
        return true;
    } catch (const Error& e) {
        if (!e.is_cap()) throw;
        slot = std::string(kSkipped) + " (" + e.what() + ")";
        a.capped = true;
        return false;
    }
}

}  // namespace

Analysis analyze(const BuiltCode& built, const AnalyzeOptions& opts) {
    const LinearCode& C = built.code;
    const Caps& caps = opts.caps;
    const std::size_t n = C.length(), k = C.dimension();
    const std::uint64_t q = C.field()->order();
    Analysis a;
    Json& j = a.json;

    Json code;
    code["description"] = built.description;
    code["label"] = C.label();
    code["field"] = field_json(*C.field());
    code["n"] = n;
    code["k"] = k;
    code["q"] = q;
    code["cyclic"] = C.is_cyclic();
    code["d"] = nullptr;
    j["code"] = code;
    j["warnings"] = built.warnings;

    // Weight distributions: enumerate the smaller side, transform for the other.
    std::optional<WeightDistribution> wd, wd_dual;
    j["weight_distribution"] = nullptr;
    attempt(a, j["weight_distribution"], [&] {
        const LinearCode D = dual(C);
        if (codeword_count(C) <= codeword_count(D)) {
            wd = weight_distribution(C, caps);
            wd_dual = macwilliams(*wd, n, k, q);
        } else {
            wd_dual = weight_distribution(D, caps);
            wd = macwilliams(*wd_dual, n, n - k, q);
        }
    });
    if (wd) {
        j["weight_distribution"] = weight_distribution_json(*wd);
        j["weight_enumerator"] = wd->to_string();
        j["dual_weight_distribution"] = weight_distribution_json(*wd_dual);
        j["dual_weight_enumerator"] = wd_dual->to_string();
    }

    std::optional<std::size_t> d;
    if (k == 0) {
        j["code"]["d"] = "undefined (zero code)";
    } else if (wd) {
        d = wd->min_nonzero_weight();
    } else {
        attempt(a, j["code"]["d"], [&] { d = minimum_distance(C, caps); });
    }
    if (d) j["code"]["d"] = *d;

    const bool nontrivial = is_nontrivial(C);
    j["nontrivial"] = nontrivial;
    std::optional<LocalityReport> loc;
    j["locality"] = nullptr;
    if (!nontrivial) {
        j["locality"] = "not defined: the code or its dual has minimum distance 1";
    } else {
        attempt(a, j["locality"], [&] { loc = minimum_linear_locality(C, caps); });
        if (loc) j["locality"] = locality_json(*loc);
    }

    if (d && loc) {
        const BoundsReport b = evaluate_bounds(n, k, *d, q, loc->r_min);
        // Both bounds must hold at the minimum linear locality, so a violation is a bug.
        if (static_cast<std::int64_t>(*d) > b.singleton_like_rhs || k > b.cm_rhs_ub)
            throw Error(Errc::Internal, "a locality bound is violated at r = " + std::to_string(loc->r_min));
        j["llrc_tuple"] = llrc_tuple(n, k, *d, q, loc->r_min);
        j["bounds"] = bounds_json(b);
    } else {
        // Carry the reason from whichever input is missing.
        const Json reason = !loc ? j["locality"] : j["code"]["d"];
        j["llrc_tuple"] = reason;
        j["bounds"] = reason;
    }

    Json extra = Json::array();
    for (std::size_t r : opts.extra_r) {
        if (!d) break;
        Json e = bounds_json(evaluate_bounds(n, k, *d, q, r));
        e["r"] = r;
        extra.push_back(e);
    }
    if (!extra.empty()) j["bounds_at_r"] = extra;

    // NMDS status is cheap once both distances are known.
    if (d && wd_dual && k < n) {
        const std::size_t dp = wd_dual->min_nonzero_weight();
        const bool nmds = *d + dp == n && n - k == *d && k == dp;
        Json nm;
        nm["is_nmds"] = nmds;
        if (nmds && loc) nm["locality_case"] = nmds_locality_name(nmds_locality_check(C, caps));
        j["nmds"] = nm;
    } else if (d && k < n) {
        Json nm = nullptr;
        attempt(a, nm, [&] {
            const bool nmds = is_nmds(C, caps);
            nm = Json{{"is_nmds", nmds}};
            if (nmds && loc) nm["locality_case"] = nmds_locality_name(nmds_locality_check(C, caps));
        });
        j["nmds"] = nm;
    }

    Json designs = Json::array();
    for (const auto& req : opts.designs) {
        Json entry{{"t", req.t}, {"w", req.w}};
        attempt(a, entry["result"], [&] {
            DesignReport rep = support_blocks(C, req.w, caps);
            profile_design(rep, req.t);
            const auto lambda = rep.t_lambda.count(req.t) ? std::optional(rep.t_lambda.at(req.t)) : std::nullopt;
            entry["is_t_design"] = lambda.has_value();
            entry["lambda"] = lambda ? Json(*lambda) : Json(nullptr);
            entry["result"] = design_json(rep);
        });
        designs.push_back(entry);
    }
    if (!designs.empty()) j["designs"] = designs;
    return a;
}

namespace {

std::string show(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

std::string yes_no(const Json& v) { return v.is_boolean() ? (v.get<bool>() ? "yes" : "no") : show(v); }

}  // namespace

std::string render_analysis(const Json& j, bool bound_terms) {
    std::ostringstream out;
    const Json& c = j["code"];
    out << "code         " << c["description"].get<std::string>() << "  [" << c["label"].get<std::string>() << "]\n";
    out << "parameters   [" << c["n"] << "," << c["k"] << "," << show(c["d"]) << "] over GF(" << c["q"] << ")"
        << (c["cyclic"].get<bool>() ? ", cyclic" : "") << "\n";
    for (const auto& w : j["warnings"]) out << "warning      " << w.get<std::string>() << "\n";
    if (j.contains("weight_enumerator")) {
        out << "enumerator   " << j["weight_enumerator"].get<std::string>() << "\n";
        out << "dual enum.   " << j["dual_weight_enumerator"].get<std::string>() << "\n";
    } else {
        out << "enumerator   " << show(j["weight_distribution"]) << "\n";
    }
    out << "llrc tuple   " << show(j["llrc_tuple"]) << "\n";
    const Json& L = j["locality"];
    if (L.is_object()) {
        out << "locality     r_min = " << L["r_min"] << ", d(dual) = " << L["d_perp"]
            << (L["is_dperp_minus_1"].get<bool>() ? " (r = d(dual) - 1)" : " (r > d(dual) - 1)")
            << ", dual words by " << L["method"].get<std::string>() << "\n";
        for (const auto& [w, coords] : L["coverage_by_weight"].items())
            out << "  weight " << w << " covers " << coords.size() << " coordinate(s)\n";
    } else {
        out << "locality     " << show(L) << "\n";
    }
    const Json& B = j["bounds"];
    if (B.is_object()) {
        out << "singleton    rhs = " << B["singleton_like_rhs"] << ", d_optimal = " << yes_no(B["d_optimal"])
            << ", almost_d_optimal = " << yes_no(B["almost_d_optimal"]) << "\n";
        out << "cm bound     rhs = " << B["cm_rhs_ub"] << ", k_optimal_certified = " << yes_no(B["k_optimal_certified"])
            << (B["k_optimal_certified"].get<bool>() ? "" : " (inconclusive)") << "\n";
        if (bound_terms)
            for (const auto& t : B["k_opt_components"])
                out << "  t = " << t["t"] << ": n' = " << t["n_prime"] << ", k_opt <= " << t["k_opt"] << " ("
                    << t["bound"].get<std::string>() << "), term = " << t["value"] << "\n";
    } else {
        out << "bounds       " << show(B) << "\n";
    }
    if (j.contains("bounds_at_r"))
        for (const auto& e : j["bounds_at_r"])
            out << "at r = " << e["r"] << "    singleton rhs = " << e["singleton_like_rhs"] << ", d_optimal = "
                << yes_no(e["d_optimal"]) << ", cm rhs = " << e["cm_rhs_ub"] << ", k_optimal_certified = "
                << yes_no(e["k_optimal_certified"]) << "\n";
    if (j.contains("nmds") && j["nmds"].is_object()) {
        out << "nmds         " << yes_no(j["nmds"]["is_nmds"]);
        if (j["nmds"].contains("locality_case")) out << ", locality case " << j["nmds"]["locality_case"].get<std::string>();
        out << "\n";
    }
    if (j.contains("designs"))
        for (const auto& dsg : j["designs"]) {
            out << "design       t = " << dsg["t"] << ", w = " << dsg["w"] << ": ";
            if (!dsg["result"].is_object()) {
                out << show(dsg["result"]) << "\n";
                continue;
            }
            const Json& r = dsg["result"];
            out << r["block_count"] << " blocks, ";
            if (dsg["is_t_design"].get<bool>())
                out << "lambda = " << dsg["lambda"] << (r["is_steiner"].get<bool>() ? ", Steiner system" : "");
            else
                out << "not a " << dsg["t"] << "-design";
            out << "\n";
        }
    return out.str();
}

}  // namespace lrc::cli
