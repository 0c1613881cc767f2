#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lrc/caps.hpp"
#include "lrc/code.hpp"
#include "lrc/poly.hpp"
#include "lrc/weights.hpp"

namespace lrc {

/// Longest code the constructors will build.
inline constexpr std::size_t kMaxLength = std::size_t{1} << 13;

/// Budget used when constructors re-derive their asserted minimum distance; checks that
/// do not fit are skipped rather than failed.
Caps verification_caps();

/// Fails with Internal unless C is an [n, k] code and, when computable within `budget`,
/// has minimum distance d.
void assert_parameters(const LinearCode& C, std::size_t n, std::size_t k, std::optional<std::size_t> d,
                       const std::string& what, const Caps& budget = verification_caps());

/// One normalized representative (first nonzero entry 1) per point of PG(m-1, q), as the
/// columns of an m x n matrix, in increasing order of sum v_i q^(m-1-i).
Matrix projective_points(const FieldPtr& F, std::uint32_t m);

/// [(q^m-1)/(q-1), n-m, 3] code with the projective points as parity-check columns.
LinearCode hamming(std::uint64_t q, std::uint32_t m);
/// dual(hamming(q, m)).
LinearCode simplex(std::uint64_t q, std::uint32_t m);
/// Closed-form weight distribution of hamming(q, m), evaluated exactly.
WeightDistribution hamming_weight_distribution_formula(std::uint64_t q, std::uint32_t m);

/// The code generated by the n - deg(g) shifts of g. NotADivisor unless g | x^n - 1;
/// GcdNotOne unless gcd(n, q) = 1. The result is flagged cyclic.
LinearCode cyclic_code(const Poly& g, std::size_t n);

/// lcm of the minimal polynomials of beta^h, ..., beta^(h+delta-2).
Poly bch_generator(std::uint64_t q, std::uint64_t n, std::uint64_t delta, std::uint64_t h);
LinearCode bch(std::uint64_t q, std::uint64_t n, std::uint64_t delta, std::uint64_t h);

/// Digit sum of j in base q (m digits).
std::uint64_t q_weight(std::uint64_t j, std::uint64_t q, std::uint32_t m);

/// Closed-form dimension and minimum distance of R_q(ell, m).
std::uint64_t grm_dimension(std::uint64_t q, std::uint64_t ell, std::uint32_t m);
std::uint64_t grm_distance(std::uint64_t q, std::uint64_t ell, std::uint32_t m);
/// True when 0 <= ell < q(m-1), the range in which the closed forms are asserted.
bool grm_formulas_apply(std::uint64_t q, std::uint64_t ell, std::uint32_t m);

/// Cyclic code of length q^m - 1 whose generator has the roots alpha^j, 1 <= j <= n-1,
/// with wt_q(j) < (q-1)m - ell. Requires 1 <= ell < (q-1)m.
LinearCode grm_punctured(std::uint64_t q, std::uint64_t ell, std::uint32_t m);
/// extend(grm_punctured(q, ell, m)).
LinearCode grm(std::uint64_t q, std::uint64_t ell, std::uint32_t m);

/// The [11, 6, 5] ternary Golay code as a cyclic code.
LinearCode ternary_golay();

}  // namespace lrc
