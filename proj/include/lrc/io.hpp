#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "lrc/bounds.hpp"
#include "lrc/code.hpp"
#include "lrc/designs.hpp"
#include "lrc/geometry.hpp"
#include "lrc/locality.hpp"
#include "lrc/oval.hpp"
#include "lrc/weights.hpp"

namespace lrc {

using Json = nlohmann::ordered_json;

/// Exact integers: a JSON number when it fits in 64 bits, a decimal string otherwise.
Json big_json(const BigInt& x);

/// {"p", "m", "q", "modulus"} plus "tower_base" (the base's own spec) for tower fields.
Json field_json(const Field& F);
Json weight_distribution_json(const WeightDistribution& wd);
Json locality_json(const LocalityReport& rep);
Json bounds_json(const BoundsReport& b);
Json design_json(const DesignReport& d);
Json point_set_json(const PointSet& ps);
Json oval_json(const OvalPolynomial& f);

/// Matrix file: a "q n k" line, then k lines of n integer encodings. WrongFieldForm for
/// codes over a tower field.
void write_matrix(std::ostream& out, const LinearCode& C);
/// ParseError on malformed input, out-of-field entries or dependent rows.
LinearCode read_matrix(std::istream& in);
void write_matrix_file(const std::string& path, const LinearCode& C);
LinearCode read_matrix_file(const std::string& path);

}  // namespace lrc
