#include "lrc/lowweight.hpp"

#include <algorithm>
#include <limits>

#include "lrc/enumerate.hpp"

namespace lrc {

std::string method_name(SearchMethod m) {
    switch (m) {
        case SearchMethod::Auto: return "auto";
        case SearchMethod::Enumerate: return "enumerate";
        case SearchMethod::SubsetSearch: return "subset-search";
    }
    return "unknown";
}

std::uint64_t subset_search_cost(std::size_t n, std::size_t w_min, std::size_t w_max) {
    const BigInt limit = std::numeric_limits<std::uint64_t>::max();
    BigInt total = 0;
    for (std::size_t w = std::max<std::size_t>(w_min, 1); w <= std::min(w_max, n); ++w) {
        total += binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(w));
        if (total >= limit) return std::numeric_limits<std::uint64_t>::max();
    }
    return total.convert_to<std::uint64_t>();
}

namespace {

// Advances a sorted combination of {0..n-1}; false after the last one.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t w = c.size();
    std::size_t i = w;
    while (i > 0 && c[i - 1] == n - w + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < w; ++j) c[j] = c[j - 1] + 1;
    return true;
}

}  // namespace

bool for_each_word_of_weight(const LinearCode& C, const Matrix& H, std::size_t w,
                             const std::function<bool(const std::vector<std::size_t>&, const Word&)>& visit) {
    const Field& F = *C.field();
    const std::size_t n = C.length();
    if (w == 0 || w > n) return true;
    const Elem q = F.order();
    std::vector<std::size_t> S(w);
    for (std::size_t i = 0; i < w; ++i) S[i] = i;
    do {
        Matrix basis = null_space(F, H.columns(S));
        const std::size_t t = basis.rows;
        if (t == 0) continue;
        // Projective combinations: leading coefficient 1 at index lead, free digits after it.
        for (std::size_t lead = 0; lead < t; ++lead) {
            const std::size_t free = t - 1 - lead;
            std::vector<Elem> digits(free, 0);
            while (true) {
                Word v(basis.row(lead));
                for (std::size_t f = 0; f < free; ++f) {
                    if (!digits[f]) continue;
                    for (std::size_t j = 0; j < w; ++j)
                        v[j] = F.add(v[j], F.mul(digits[f], basis.at(lead + 1 + f, j)));
                }
                if (std::none_of(v.begin(), v.end(), [](Elem x) { return x == 0; })) {
                    const Elem s = F.inv(v[0]);
                    for (auto& x : v) x = F.mul(x, s);
                    if (!visit(S, v)) return false;
                }
                std::size_t f = 0;
                while (f < free && ++digits[f] == q) digits[f++] = 0;
                if (f == free) break;
            }
        }
    } while (next_combination(S, n));
    return true;
}

LowWeightResult low_weight_codewords(const LinearCode& C, std::size_t w_max, const Caps& caps,
                                     SearchMethod method, std::size_t w_min) {
    const std::size_t n = C.length();
    w_max = std::min(w_max, n);
    w_min = std::max<std::size_t>(w_min, 1);
    LowWeightResult res;
    res.w_min = w_min;
    res.w_max = w_max;
    res.counts.assign(w_max + 1, 0);
    res.counts[0] = 1;
    if (w_min > w_max) {
        res.method = method == SearchMethod::Auto ? SearchMethod::SubsetSearch : method;
        return res;
    }

    const std::uint64_t enum_cost = codeword_count(C);
    const std::uint64_t search_cost = subset_search_cost(n, w_min, w_max);
    const bool enum_ok = enum_cost <= caps.enumeration;
    const bool search_ok = search_cost <= caps.search;
    if (method == SearchMethod::Auto) {
        require(enum_ok || search_ok, Errc::SearchTooLarge,
                "weights up to " + std::to_string(w_max) + " need " + std::to_string(search_cost) +
                    " coordinate subsets (cap " + std::to_string(caps.search) + ") and q^k exceeds the enumeration cap");
        // A subset costs roughly one small elimination; weigh it against one walk step per word.
        const long double search_work = static_cast<long double>(search_cost) * static_cast<long double>(w_max);
        method = (enum_ok && (!search_ok || static_cast<long double>(enum_cost) <= search_work))
                     ? SearchMethod::Enumerate
                     : SearchMethod::SubsetSearch;
    }
    res.method = method;
    const Field& F = *C.field();
    const Elem qm1 = F.order() - 1;

    if (method == SearchMethod::Enumerate) {
        CodewordWalker walker(C, caps);
        std::vector<std::uint64_t> counts(w_max + 1, 0);
        walker.run([&](const Word& word, std::size_t wt) {
            if (wt < w_min || wt > w_max) return;
            ++counts[wt];
            auto first = std::find_if(word.begin(), word.end(), [](Elem x) { return x != 0; });
            if (*first == 1) res.words.push_back({support_of(word), word});
        });
        for (std::size_t w = w_min; w <= w_max; ++w) res.counts[w] = counts[w];
    } else {
        require(search_ok, Errc::SearchTooLarge,
                std::to_string(search_cost) + " coordinate subsets exceed the search cap " + std::to_string(caps.search));
        const Matrix H = C.parity_check();
        for (std::size_t w = w_min; w <= w_max; ++w) {
            for_each_word_of_weight(C, H, w, [&](const std::vector<std::size_t>& S, const Word& v) {
                Word word(n, 0);
                for (std::size_t j = 0; j < S.size(); ++j) word[S[j]] = v[j];
                res.words.push_back({S, std::move(word)});
                res.counts[w] += qm1;
                return true;
            });
        }
    }
    std::sort(res.words.begin(), res.words.end(), [](const LowWeightWord& a, const LowWeightWord& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        if (a.support != b.support) return a.support < b.support;
        return a.word < b.word;
    });
    return res;
}

std::size_t minimum_distance(const LinearCode& C, const Caps& caps) {
    require(C.dimension() >= 1, Errc::ZeroCode, "the zero code has no minimum distance");
    const std::size_t n = C.length();
    if (enumeration_feasible(C, caps)) {
        std::size_t best = n;
        CodewordWalker(C, caps).run([&](const Word&, std::size_t wt) {
            if (wt && wt < best) best = wt;
        });
        return best;
    }
    const Matrix H = C.parity_check();
    std::uint64_t spent = 0;
    for (std::size_t w = 1; w <= n; ++w) {
        const std::uint64_t step = subset_search_cost(n, w, w);
        require(step <= caps.search && spent + step <= caps.search, Errc::SearchTooLarge,
                "minimum-distance search past weight " + std::to_string(w - 1) + " exceeds the search cap " +
                    std::to_string(caps.search) + " and q^k exceeds the enumeration cap");
        spent += step;
        bool found = false;
        for_each_word_of_weight(C, H, w, [&](const std::vector<std::size_t>&, const Word&) {
            found = true;
            return false;
        });
        if (found) return w;
    }
    fail(Errc::Internal, "nonzero code without a nonzero codeword");
}

}  // namespace lrc
