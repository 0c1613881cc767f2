#pragma once

#include <cstdint>
#include <vector>

#include "lrc/gf.hpp"
#include "lrc/poly.hpp"

namespace lrc {

/// {s q^i mod n}, sorted. GcdNotOne unless gcd(n, q) = 1.
std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t s, std::uint64_t n, std::uint64_t q);

/// All q-cyclotomic cosets mod n, ordered by their smallest element.
std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t n, std::uint64_t q);

/// Smallest field containing a primitive n-th root of unity: `base` itself when
/// n | |base|-1, otherwise the degree-ord_n(q) tower over `base`.
FieldPtr splitting_field(const FieldPtr& base, std::uint64_t n);

/// beta^((|E|-1)/n) for the cached generator of E = splitting_field(base, n).
Elem primitive_root_of_unity(const Field& ext, std::uint64_t n);

/// True when `sub` is `ext` or is reachable from it through base() links, so that its
/// elements are the encodings below |sub|.
bool is_embedded_subfield(const Field& ext, const Field& sub);

/// Rewrites a polynomial over an extension as one over an embedded subfield.
/// CoefficientNotInBase if a coefficient lies outside it.
Poly project_to_subfield(const Poly& f, const FieldPtr& sub);

/// M_{beta^s}(x) = prod_{i in C_s} (x - beta^i) over `base`, where beta is an element of
/// order n in an extension of `base`. NotRootOfUnity if beta does not have order n.
Poly minimal_polynomial(const FieldElement& beta, std::uint64_t s, std::uint64_t n,
                        const FieldPtr& base);

}  // namespace lrc
