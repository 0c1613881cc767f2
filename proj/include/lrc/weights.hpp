#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrc/caps.hpp"
#include "lrc/code.hpp"

namespace lrc {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::int64_t n, std::int64_t k);  // 0 outside 0 <= k <= n
BigInt big_pow(std::uint64_t base, std::uint64_t e);

/// (A_0, ..., A_n).
struct WeightDistribution {
    std::vector<BigInt> counts;

    std::size_t length() const { return counts.empty() ? 0 : counts.size() - 1; }
    BigInt total() const;
    /// Smallest i > 0 with A_i > 0, or 0 when there is none.
    std::size_t min_nonzero_weight() const;
    /// "1 + 8z^3" style.
    std::string to_string() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Exhaustive count over all q^k codewords. EnumerationTooLarge beyond the cap.
WeightDistribution weight_distribution(const LinearCode& C, const Caps& caps = default_caps());

/// Weight distribution of the dual of an [n, k] code over GF(q) with distribution wd.
/// InconsistentInput if the counts do not sum to q^k; NonIntegerOutput if the transform
/// produces a fraction or a negative count.
WeightDistribution macwilliams(const WeightDistribution& wd, std::size_t n, std::size_t k,
                               std::uint64_t q);

}  // namespace lrc
