#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrc/caps.hpp"
#include "lrc/code.hpp"
#include "lrc/io.hpp"
#include "lrc/oval.hpp"

namespace lrc::cli {

/// A family name, its key=value parameters and the derived-code steps applied after it.
struct CodeSpec {
    std::string family;
    std::map<std::string, std::string> params;
    /// Applied in order: "dual", "extend", "augment", "shorten:i,j", "puncture:i,j".
    std::vector<std::string> transforms;
};

/// First word is the family, the rest are key=value pairs. BadParams on malformed pairs.
CodeSpec parse_code_spec(const std::vector<std::string>& words, const std::vector<std::string>& transforms = {});

struct BuiltCode {
    LinearCode code;
    std::string description;
    std::vector<std::string> warnings;
};

/// UnknownFamily for an unrecognised family; BadParams for missing, malformed or unused
/// parameters.
BuiltCode build_code(const CodeSpec& spec);

/// One derived-code step; BadParams for an unknown step.
LinearCode apply_transform(const LinearCode& C, const std::string& step);

std::vector<std::string> family_names();

/// "translation:h", "segre", ... or "poly:c0,c1,..." (coefficients low to high) over GF(q).
OvalPolynomial parse_oval_spec(const std::string& text, std::uint64_t q);

/// "t:w" pairs for the support designs to check.
struct DesignRequest {
    std::size_t t = 0;
    std::size_t w = 0;
};
DesignRequest parse_design_request(const std::string& s);

struct AnalyzeOptions {
    std::vector<DesignRequest> designs;
    /// Extra localities at which to evaluate the bounds.
    std::vector<std::size_t> extra_r;
    bool bound_terms = false;
    Caps caps;
};

struct Analysis {
    Json json;
    /// Some computation was beyond the caps and is marked "skipped: cap".
    bool capped = false;
};

/// Everything the analyzer can say about a code; computations beyond the caps are
/// recorded as skipped instead of failing the whole report.
Analysis analyze(const BuiltCode& built, const AnalyzeOptions& opts);

/// Human-readable rendering of analyze()'s JSON.
std::string render_analysis(const Json& j, bool bound_terms);

}  // namespace lrc::cli
