#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/poly.hpp"

namespace lrc {

enum class OvalFamily { Translation, Segre, Glynn1, Glynn2, Glynn3, Cherowitzo, Payne, User };

/// Stable tag: "translation", "segre", ..., "user".
std::string oval_family_name(OvalFamily f);
/// Inverse of oval_family_name; UnknownFamily for anything else.
OvalFamily parse_oval_family(std::string_view tag);

struct OvalPolynomial {
    FieldPtr field;
    Poly poly;
    OvalFamily family = OvalFamily::User;
    /// The h of a translation polynomial x^(2^h); 0 otherwise.
    std::uint32_t param = 0;

    /// "translation(h=1)", "segre", "user", ...
    std::string tag() const;
};

/**
 * The catalog polynomial of `family` over GF(q), q = 2^m, with exponents reduced into
 * [1, q-1]. `h` is used only by the translation family. The family's congruence
 * conditions on m are enforced and the result is checked exhaustively;
 * FamilyUnavailableForParameters if either fails.
 */
OvalPolynomial oval_poly(OvalFamily family, std::uint64_t q, std::uint32_t h = 1);

/// Every (family, h) the catalog offers at q, in catalog order; translation contributes
/// one entry per admissible h.
std::vector<OvalPolynomial> oval_catalog(std::uint64_t q);

/// f(0) = 0, f(1) = 1, f permutes the field, and x -> f(x) + ux is 2-to-1 for every
/// u != 0. False outright in odd characteristic.
bool is_oval_polynomial(const Field& F, const Poly& f);

/// Wraps a user polynomial; the code constructors validate it.
OvalPolynomial user_oval_polynomial(const Poly& f);

/// [q+3, 3, q] code from the three-row matrix with columns (f(0), 0, 1), (f(a^i), a^i, 1),
/// (1,0,0), (0,1,0), (1,1,0). Needs m >= 3 and an oval polynomial.
LinearCode code_Bf_bar(const OvalPolynomial& f);
/// [q+1, 3, q-2] code: columns (f(a^i), a^i, 1), (0,1,1), (1,0,1). Needs m odd, m >= 3 and
/// coefficients in GF(2).
LinearCode code_Gf(const OvalPolynomial& f);
/// [q+2, 3, q-1] code: code_Gf with the column (0, 0, 1) in front. Same hypotheses.
LinearCode code_Gf_bar(const OvalPolynomial& f);

}  // namespace lrc
