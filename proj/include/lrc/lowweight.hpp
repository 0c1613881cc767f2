#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lrc/caps.hpp"
#include "lrc/code.hpp"
#include "lrc/weights.hpp"

namespace lrc {

struct LowWeightWord {
    std::vector<std::size_t> support;
    Word word;
    std::size_t weight() const { return support.size(); }
};

enum class SearchMethod { Auto, Enumerate, SubsetSearch };
std::string method_name(SearchMethod m);

struct LowWeightResult {
    std::size_t w_min = 1;
    std::size_t w_max = 0;
    /// One representative per projective class (first nonzero entry 1), sorted by
    /// weight, then support, then word.
    std::vector<LowWeightWord> words;
    /// counts[w] = number of codewords of weight w, scalar multiples included, for
    /// w_min <= w <= w_max. counts[0] = 1; weights below w_min are not examined.
    std::vector<BigInt> counts;
    SearchMethod method = SearchMethod::Auto;
};

/// Sum of C(n, w) over w_min <= w <= w_max, saturated at UINT64_MAX.
std::uint64_t subset_search_cost(std::size_t n, std::size_t w_min, std::size_t w_max);

/**
 * All codewords of weight in [w_min, w_max].
 *
 * Enumerate walks all q^k codewords. SubsetSearch visits every coordinate set S with
 * w_min <= |S| <= w_max, takes the vectors on S annihilated by the parity-check columns
 * H_S, and keeps those with full support on S. Auto picks the cheaper feasible method.
 * SearchTooLarge when no permitted method fits the caps.
 */
LowWeightResult low_weight_codewords(const LinearCode& C, std::size_t w_max,
                                     const Caps& caps = default_caps(),
                                     SearchMethod method = SearchMethod::Auto,
                                     std::size_t w_min = 1);

/// Smallest nonzero weight. ZeroCode for k = 0; cap errors when neither an exhaustive
/// walk nor an incremental subset search fits.
std::size_t minimum_distance(const LinearCode& C, const Caps& caps = default_caps());

/// Calls visit(S, v) for every coordinate set S of size w and every projective class of
/// codewords with support exactly S; v holds the entries on S, normalized so v[0] = 1.
/// The visitor returns false to stop early. Returns false if it was stopped.
bool for_each_word_of_weight(const LinearCode& C, const Matrix& parity_check, std::size_t w,
                             const std::function<bool(const std::vector<std::size_t>&, const Word&)>& visit);

}  // namespace lrc
