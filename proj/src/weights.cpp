#include "lrc/weights.hpp"

#include <limits>

#include "lrc/enumerate.hpp"

namespace lrc {

std::uint64_t codeword_count(const LinearCode& C) {
    const std::uint64_t q = C.field()->order();
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < C.dimension(); ++i) {
        if (v > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        v *= q;
    }
    return v;
}

bool enumeration_feasible(const LinearCode& C, const Caps& caps) {
    return codeword_count(C) <= caps.enumeration;
}

CodewordWalker::CodewordWalker(const LinearCode& C, const Caps& caps)
    : field_(C.field()), n_(C.length()), p_(C.field()->characteristic()) {
    total_ = codeword_count(C);
    require(total_ <= caps.enumeration, Errc::EnumerationTooLarge,
            "q^k = " + std::to_string(C.field()->order()) + "^" + std::to_string(C.dimension()) +
                " codewords exceed the enumeration cap " + std::to_string(caps.enumeration));
    const Field& F = *field_;
    Elem scalar = 1;
    for (std::uint32_t b = 0; b < F.prime_degree(); ++b, scalar *= p_) {
        for (std::size_t i = 0; i < C.dimension(); ++i) {
            Word row(n_);
            std::vector<std::uint32_t> nz;
            for (std::size_t j = 0; j < n_; ++j) {
                row[j] = F.mul(scalar, C.generator().at(i, j));
                if (row[j]) nz.push_back(static_cast<std::uint32_t>(j));
            }
            rows_.push_back(std::move(row));
            nonzero_.push_back(std::move(nz));
        }
    }
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt big_pow(std::uint64_t base, std::uint64_t e) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= base;
    return r;
}

BigInt WeightDistribution::total() const {
    BigInt s = 0;
    for (const auto& c : counts) s += c;
    return s;
}

std::size_t WeightDistribution::min_nonzero_weight() const {
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] != 0) return i;
    return 0;
}

std::string WeightDistribution::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += counts[i].str();
        else
            s += (counts[i] == 1 ? std::string() : counts[i].str()) + "z^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

WeightDistribution weight_distribution(const LinearCode& C, const Caps& caps) {
    CodewordWalker walker(C, caps);
    std::vector<std::uint64_t> counts(C.length() + 1, 0);
    walker.run([&](const Word&, std::size_t w) { ++counts[w]; });
    WeightDistribution wd;
    wd.counts.reserve(counts.size());
    for (auto c : counts) wd.counts.emplace_back(c);
    return wd;
}

WeightDistribution macwilliams(const WeightDistribution& wd, std::size_t n, std::size_t k,
                               std::uint64_t q) {
    require(wd.counts.size() == n + 1, Errc::InconsistentInput,
            "distribution has " + std::to_string(wd.counts.size()) + " entries for length " + std::to_string(n));
    const BigInt size = big_pow(q, k);
    require(wd.total() == size, Errc::InconsistentInput, "counts do not sum to q^k");
    require(wd.counts[0] == 1, Errc::InconsistentInput, "A_0 must be 1");
    const auto N = static_cast<std::int64_t>(n);

    // (q-1)^e for e <= n
    std::vector<BigInt> qm1(n + 1, 1);
    for (std::size_t e = 1; e <= n; ++e) qm1[e] = qm1[e - 1] * (q - 1);

    WeightDistribution out;
    out.counts.resize(n + 1);
    for (std::int64_t j = 0; j <= N; ++j) {
        BigInt acc = 0;
        for (std::int64_t i = 0; i <= N; ++i) {
            if (wd.counts[i] == 0) continue;
            // Krawtchouk polynomial K_j(i)
            BigInt kj = 0;
            for (std::int64_t s = 0; s <= j; ++s) {
                BigInt term = binomial(i, s) * binomial(N - i, j - s) * qm1[j - s];
                if (s % 2) kj -= term;
                else kj += term;
            }
            acc += wd.counts[i] * kj;
        }
        require(acc >= 0 && acc % size == 0, Errc::NonIntegerOutput,
                "MacWilliams transform gave a non-integral count at weight " + std::to_string(j));
        out.counts[j] = acc / size;
    }
    return out;
}

}  // namespace lrc
