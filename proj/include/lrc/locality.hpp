#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lrc/caps.hpp"
#include "lrc/code.hpp"
#include "lrc/lowweight.hpp"

namespace lrc {

using Support = std::vector<std::size_t>;

struct LocalityReport {
    std::size_t n = 0;
    std::size_t k = 0;
    /// Minimum distance of the dual code.
    std::size_t d_perp = 0;
    /// Minimum linear locality r; w_star = r + 1 is the smallest dual weight at which the
    /// supports of dual codewords of weight <= w_star cover every coordinate.
    std::size_t r_min = 0;
    std::size_t w_star = 0;
    /// Weight -> coordinates whose lightest covering dual word has that weight.
    std::map<std::size_t, std::vector<std::size_t>> coverage_by_weight;
    /// Per coordinate i: every support (containing i) of a dual codeword of the lightest
    /// weight covering i, sorted. Repair sets are these supports minus i.
    std::vector<std::vector<Support>> repair_options;
    bool is_dperp_minus_1 = false;
    /// The code was flagged cyclic, so r = d_perp - 1 was expected and then confirmed.
    bool cyclic_fast_path = false;
    /// How the dual codewords were found.
    SearchMethod method = SearchMethod::Auto;

    /// Lexicographically smallest minimal repair set of coordinate i (i excluded).
    Support default_repair_set(std::size_t i) const;
};

/// d >= 2 and d(dual) >= 2: no coordinate is identically zero in the code or in its dual.
bool is_nontrivial(const LinearCode& C);

/// Minimum linear locality with per-coordinate repair options. TrivialCode unless
/// is_nontrivial(C); cap errors when the dual search does not fit.
LocalityReport minimum_linear_locality(const LinearCode& C, const Caps& caps = default_caps());

/// Coefficients u_j (j in `support`, i excluded) with c_i = sum u_j c_j on every codeword.
/// `support` may or may not list i. NotARepairSet unless some dual codeword is supported
/// inside support + {i} and is nonzero at i.
std::map<std::size_t, Elem> repair_coefficients(const LinearCode& C, std::size_t i, const Support& support);

/// Singleton defect n - k + 1 - d equal to 1 (computed d).
bool is_amds(const LinearCode& C, const Caps& caps = default_caps());
/// C and its dual are both AMDS, equivalently d + d_perp = n with both defects 1.
bool is_nmds(const LinearCode& C, const Caps& caps = default_caps());

enum class NmdsLocality { DperpMinus1, Dperp };
const char* nmds_locality_name(NmdsLocality v);

/// Minimum linear locality of an NMDS code, which must be d_perp - 1 or d_perp.
/// HypothesisViolated unless is_nmds(C); DichotomyViolated if the computed value is neither.
NmdsLocality nmds_locality_check(const LinearCode& C, const Caps& caps = default_caps());

struct NmdsPair {
    LowWeightWord word;       // minimum weight word of C (first nonzero entry 1)
    LowWeightWord dual_word;  // the minimum weight word of the dual on the complementary support
};

struct NmdsPairing {
    std::vector<NmdsPair> pairs;
    /// Numbers of minimum weight codewords, scalar multiples included.
    BigInt count;
    BigInt dual_count;
};

/// Matches every projective class of minimum weight words of an NMDS code with the
/// unique class of minimum weight dual words on the complementary support.
/// PairingFailed if that is not a bijection or the counts differ.
NmdsPairing nmds_support_pairing(const LinearCode& C, const Caps& caps = default_caps());

}  // namespace lrc
