#pragma once

#include <bit>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "lrc/caps.hpp"
#include "lrc/code.hpp"

namespace lrc {

/// q^k, saturated at UINT64_MAX.
std::uint64_t codeword_count(const LinearCode& C);
bool enumeration_feasible(const LinearCode& C, const Caps& caps = default_caps());

/**
 * Visits every codeword exactly once, in an order where consecutive words differ by one
 * GF(p)-basis row: a modular p-ary Gray code over the k*m rows p^b * g_i. The Hamming
 * weight is maintained incrementally from each row's nonzero positions.
 *
 * The visitor is called as visit(word, weight); returning false stops the walk.
 */
class CodewordWalker {
public:
    explicit CodewordWalker(const LinearCode& C, const Caps& caps = default_caps());

    std::uint64_t size() const { return total_; }

    template <class Visit>
    void run(Visit&& visit) const {
        const Field& F = *field_;
        Word word(n_, 0);
        std::size_t weight = 0;
        if (!call(visit, word, weight)) return;
        for (std::uint64_t s = 1; s < total_; ++s) {
            std::size_t t = 0;
            if (p_ == 2) {
                t = static_cast<std::size_t>(std::countr_zero(s));
            } else {
                for (std::uint64_t v = s; v % p_ == 0; v /= p_) ++t;
            }
            const Word& row = rows_[t];
            for (auto j : nonzero_[t]) {
                const Elem old = word[j];
                const Elem now = F.add(old, row[j]);
                word[j] = now;
                weight += (now != 0);
                weight -= (old != 0);
            }
            if (!call(visit, word, weight)) return;
        }
    }

private:
    template <class Visit>
    static bool call(Visit& visit, const Word& word, std::size_t weight) {
        if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const Word&, std::size_t>, bool>)
            return visit(word, weight);
        else {
            visit(word, weight);
            return true;
        }
    }

    FieldPtr field_;
    std::size_t n_ = 0;
    std::uint32_t p_ = 2;
    std::uint64_t total_ = 1;
    std::vector<Word> rows_;
    std::vector<std::vector<std::uint32_t>> nonzero_;
};

}  // namespace lrc
