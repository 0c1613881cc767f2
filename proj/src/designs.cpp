#include "lrc/designs.hpp"

#include <algorithm>
#include <set>

#include "lrc/locality.hpp"
#include "lrc/lowweight.hpp"

namespace lrc {

DesignReport support_blocks(const LinearCode& C, std::size_t w, const Caps& caps) {
    DesignReport rep;
    rep.n = C.length();
    rep.block_size = w;
    if (w == 0 || w > C.length() || C.dimension() == 0) return rep;
    const LowWeightResult res = low_weight_codewords(C, w, caps, SearchMethod::Auto, w);
    std::set<std::vector<std::size_t>> distinct;
    for (const auto& word : res.words) distinct.insert(word.support);
    rep.blocks.assign(distinct.begin(), distinct.end());
    return rep;
}

namespace {

// Rank of a sorted t-subset of {0..n-1} in colexicographic order.
std::uint64_t colex_rank(const std::vector<std::size_t>& s, const std::vector<std::vector<std::uint64_t>>& binom) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += binom[s[i]][i + 1];
    return r;
}

// Number of blocks through each t-subset; empty when there are no blocks.
std::vector<std::uint64_t> t_counts(const DesignReport& rep, std::size_t t) {
    const std::size_t n = rep.n;
    std::vector<std::vector<std::uint64_t>> binom(n + 1, std::vector<std::uint64_t>(t + 1, 0));
    for (std::size_t a = 0; a <= n; ++a) {
        binom[a][0] = 1;
        for (std::size_t b = 1; b <= std::min(a, t); ++b)
            binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0);
    }
    std::vector<std::uint64_t> counts(binom[n][t], 0);
    std::vector<std::size_t> pick(t), sub(t);
    for (const auto& block : rep.blocks) {
        for (std::size_t i = 0; i < t; ++i) pick[i] = i;
        while (true) {
            for (std::size_t i = 0; i < t; ++i) sub[i] = block[pick[i]];
            ++counts[colex_rank(sub, binom)];
            std::size_t i = t;
            while (i > 0 && pick[i - 1] == block.size() - t + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < t; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return counts;
}

std::optional<std::uint64_t> constant_count(const DesignReport& rep, std::size_t t) {
    if (rep.blocks.empty() || t == 0 || t > rep.block_size) return std::nullopt;
    const auto counts = t_counts(rep, t);
    if (std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) != counts.end()) return std::nullopt;
    return counts.front();
}

}  // namespace

std::optional<std::uint64_t> verify_t_design(const DesignReport& rep, std::size_t t) {
    const auto lambda = constant_count(rep, t);
    if (!lambda) return lambda;
    const auto n = static_cast<std::int64_t>(rep.n), w = static_cast<std::int64_t>(rep.block_size);
    const auto T = static_cast<std::int64_t>(t);
    if (BigInt(rep.blocks.size()) * binomial(w, T) != BigInt(*lambda) * binomial(n, T))
        fail(Errc::Internal, "block count identity fails for a " + std::to_string(t) + "-design");
    for (std::int64_t s = 1; s < T; ++s) {
        const BigInt num = BigInt(*lambda) * binomial(n - s, T - s);
        const BigInt den = binomial(w - s, T - s);
        const auto lower = constant_count(rep, static_cast<std::size_t>(s));
        if (num % den != 0 || !lower || BigInt(*lower) != num / den)
            fail(Errc::Internal, "a " + std::to_string(t) + "-design is not a consistent " + std::to_string(s) + "-design");
    }
    return lambda;
}

void profile_design(DesignReport& rep, std::size_t t_max) {
    rep.t_lambda.clear();
    rep.is_steiner = false;
    for (std::size_t t = 1; t <= std::min(t_max, rep.block_size); ++t) {
        const auto lambda = verify_t_design(rep, t);
        if (!lambda) break;  // a t-design is a t'-design for every t' < t
        rep.t_lambda[t] = *lambda;
        if (t >= 2 && *lambda == 1) rep.is_steiner = true;
    }
}

bool one_design_locality_link(const LinearCode& C, const Caps& caps) {
    const LinearCode D = dual(C);
    const std::size_t dp = minimum_distance(D, caps);
    const DesignReport blocks = support_blocks(D, dp, caps);
    if (!verify_t_design(blocks, 1)) return false;
    const LocalityReport rep = minimum_linear_locality(C, caps);
    if (rep.r_min + 1 != dp)
        fail(Errc::Internal, "minimum weight dual supports form a 1-design but the locality is not d(dual) - 1");
    return true;
}

}  // namespace lrc
