#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lrc/caps.hpp"
#include "lrc/code.hpp"

namespace lrc {

struct DesignReport {
    std::size_t n = 0;
    std::size_t block_size = 0;
    /// Distinct supports, each sorted, in lexicographic order.
    std::vector<std::vector<std::size_t>> blocks;
    /// t -> lambda for every t checked so far at which the blocks form a t-design.
    std::map<std::size_t, std::uint64_t> t_lambda;
    /// Some t >= 2 has lambda = 1.
    bool is_steiner = false;
};

/// Distinct supports of the weight-w codewords (scalar multiples collapse).
DesignReport support_blocks(const LinearCode& C, std::size_t w, const Caps& caps = default_caps());

/**
 * The number of blocks through each t-subset of points, when that number is constant.
 * Empty when it varies or there are no blocks. A positive answer is cross-checked
 * against every t' < t and against #blocks * C(w, t) = lambda * C(n, t); a failed check
 * is an Internal error.
 */
std::optional<std::uint64_t> verify_t_design(const DesignReport& report, std::size_t t);

/// Runs verify_t_design for t = 1..t_max, filling t_lambda and is_steiner.
void profile_design(DesignReport& report, std::size_t t_max);

/// Whether the minimum weight dual supports form a 1-design; if they do, also confirms
/// that the minimum linear locality is d(dual) - 1 (Internal error otherwise).
bool one_design_locality_link(const LinearCode& C, const Caps& caps = default_caps());

}  // namespace lrc
