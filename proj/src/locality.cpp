#include "lrc/locality.hpp"

#include <algorithm>
#include <set>

#include "lrc/enumerate.hpp"

namespace lrc {

Support LocalityReport::default_repair_set(std::size_t i) const {
    require(i < repair_options.size(), Errc::BadCoordinate, "coordinate " + std::to_string(i) + " out of range");
    Support s = repair_options[i].front();
    s.erase(std::find(s.begin(), s.end(), i));
    return s;
}

namespace {

bool has_zero_column(const Matrix& M, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < M.rows && zero; ++i) zero = M.at(i, j) == 0;
        if (zero) return true;
    }
    return false;
}

// Dual codewords found so far, organized by the lightest weight covering each coordinate.
struct Coverage {
    explicit Coverage(std::size_t n) : minw(n, 0), options(n), uncovered(n) {}

    // Records one dual support; only coordinates not covered by a lighter word take it.
    void add(const Support& S) {
        const std::size_t w = S.size();
        for (std::size_t i : S) {
            if (minw[i] == 0) {
                minw[i] = w;
                --uncovered;
            }
            if (minw[i] == w) options[i].insert(S);
        }
    }

    std::vector<std::size_t> minw;
    std::vector<std::set<Support>> options;
    std::size_t uncovered;
};

// Fallback order: an exhaustive walk of the dual if it is cheap, otherwise the
// incremental subset search, then the walk again if the search runs out of budget.
constexpr std::uint64_t kCheapWalk = std::uint64_t{1} << 20;

void cover_by_walk(const LinearCode& D, const Caps& caps, Coverage& cov, std::size_t& d_perp) {
    const std::size_t n = D.length();
    CodewordWalker walker(D, caps);
    d_perp = n;
    walker.run([&](const Word& w, std::size_t wt) {
        if (!wt) return;
        d_perp = std::min(d_perp, wt);
        for (std::size_t j = 0; j < n; ++j)
            if (w[j] && (cov.minw[j] == 0 || wt < cov.minw[j])) cov.minw[j] = wt;
    });
    // Second pass: keep the supports achieving each coordinate's minimum.
    cov.uncovered = static_cast<std::size_t>(std::count(cov.minw.begin(), cov.minw.end(), 0));
    const std::size_t heaviest = *std::max_element(cov.minw.begin(), cov.minw.end());
    walker.run([&](const Word& w, std::size_t wt) {
        if (!wt || wt > heaviest) return;
        auto first = std::find_if(w.begin(), w.end(), [](Elem x) { return x != 0; });
        if (*first != 1) return;
        Support S;
        for (std::size_t j = 0; j < n; ++j)
            if (w[j]) S.push_back(j);
        for (std::size_t i : S)
            if (cov.minw[i] == wt) cov.options[i].insert(S);
    });
}

void cover_by_search(const LinearCode& C, const LinearCode& D, const Caps& caps, Coverage& cov,
                     std::size_t& d_perp) {
    const std::size_t n = C.length();
    std::uint64_t spent = 0;
    d_perp = 0;
    for (std::size_t w = 1; w <= n && cov.uncovered > 0; ++w) {
        const std::uint64_t step = subset_search_cost(n, w, w);
        require(step <= caps.search && spent + step <= caps.search, Errc::SearchTooLarge,
                "dual words up to weight " + std::to_string(w) + " need more than " + std::to_string(caps.search) +
                    " coordinate subsets");
        spent += step;
        Support last;
        for_each_word_of_weight(D, C.generator(), w, [&](const Support& S, const Word&) {
            if (!d_perp) d_perp = w;
            if (S != last) {
                cov.add(S);
                last = S;
            }
            return true;
        });
    }
}

}  // namespace

bool is_nontrivial(const LinearCode& C) {
    const std::size_t n = C.length();
    if (n == 0 || C.dimension() == 0 || C.dimension() == n) return false;
    return !has_zero_column(C.generator(), n) && !has_zero_column(C.parity_check(), n);
}

LocalityReport minimum_linear_locality(const LinearCode& C, const Caps& caps) {
    require(is_nontrivial(C), Errc::TrivialCode,
            "locality needs d >= 2 and d(dual) >= 2" + (C.label().empty() ? std::string() : " (" + C.label() + ")"));
    const std::size_t n = C.length();
    const LinearCode D = dual(C);
    Coverage cov(n);
    LocalityReport rep;
    rep.n = n;
    rep.k = C.dimension();

    const std::uint64_t walk = codeword_count(D);
    if (walk <= std::min(caps.enumeration, kCheapWalk)) {
        cover_by_walk(D, caps, cov, rep.d_perp);
        rep.method = SearchMethod::Enumerate;
    } else {
        try {
            cover_by_search(C, D, caps, cov, rep.d_perp);
            rep.method = SearchMethod::SubsetSearch;
        } catch (const Error& e) {
            if (e.code() != Errc::SearchTooLarge || walk > caps.enumeration) throw;
            cov = Coverage(n);
            cover_by_walk(D, caps, cov, rep.d_perp);
            rep.method = SearchMethod::Enumerate;
        }
    }
    if (cov.uncovered) fail(Errc::Internal, "dual supports do not cover every coordinate of a nontrivial code");

    rep.w_star = *std::max_element(cov.minw.begin(), cov.minw.end());
    rep.r_min = rep.w_star - 1;
    rep.is_dperp_minus_1 = rep.r_min + 1 == rep.d_perp;
    rep.repair_options.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        rep.coverage_by_weight[cov.minw[i]].push_back(i);
        rep.repair_options[i].assign(cov.options[i].begin(), cov.options[i].end());
    }
    if (C.is_cyclic()) {
        rep.cyclic_fast_path = true;
        if (!rep.is_dperp_minus_1)
            fail(Errc::Internal, "cyclic code with locality " + std::to_string(rep.r_min) + " != d(dual) - 1");
    }
    return rep;
}

std::map<std::size_t, Elem> repair_coefficients(const LinearCode& C, std::size_t i, const Support& support) {
    const std::size_t n = C.length();
    const Field& F = *C.field();
    require(i < n, Errc::BadCoordinate, "coordinate " + std::to_string(i) + " out of range");
    std::set<std::size_t> T(support.begin(), support.end());
    for (std::size_t j : T) require(j < n, Errc::BadCoordinate, "coordinate " + std::to_string(j) + " out of range");
    T.insert(i);
    const Support cols(T.begin(), T.end());
    const std::size_t at_i = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), i) - cols.begin());

    // Dual codewords supported inside T are the kernel of the generator restricted to T.
    const Matrix K = null_space(F, C.generator().columns(cols));
    std::size_t pick = K.rows;
    for (std::size_t r = 0; r < K.rows && pick == K.rows; ++r)
        if (K.at(r, at_i)) pick = r;
    require(pick < K.rows, Errc::NotARepairSet,
            "no dual codeword inside the given set is nonzero at coordinate " + std::to_string(i));

    const Elem scale = F.neg(F.inv(K.at(pick, at_i)));
    std::map<std::size_t, Elem> u;
    for (std::size_t c = 0; c < cols.size(); ++c)
        if (c != at_i) u[cols[c]] = F.mul(scale, K.at(pick, c));

    for (std::size_t r = 0; r < C.dimension(); ++r) {
        Elem s = 0;
        for (const auto& [j, uj] : u) s = F.add(s, F.mul(uj, C.generator().at(r, j)));
        if (s != C.generator().at(r, i)) fail(Errc::NotARepairSet, "recovery rule fails on a generator row");
    }
    return u;
}

bool is_amds(const LinearCode& C, const Caps& caps) {
    const std::size_t n = C.length(), k = C.dimension();
    if (k == 0) return false;
    return n + 1 == k + minimum_distance(C, caps) + 1;
}

bool is_nmds(const LinearCode& C, const Caps& caps) {
    const std::size_t n = C.length(), k = C.dimension();
    if (k == 0 || k == n) return false;
    return is_amds(C, caps) && is_amds(dual(C), caps);
}

const char* nmds_locality_name(NmdsLocality v) {
    return v == NmdsLocality::DperpMinus1 ? "dperp_minus_1" : "dperp";
}

NmdsLocality nmds_locality_check(const LinearCode& C, const Caps& caps) {
    require(is_nmds(C, caps), Errc::HypothesisViolated, "the code is not NMDS");
    const LocalityReport rep = minimum_linear_locality(C, caps);
    if (rep.r_min + 1 == rep.d_perp) return NmdsLocality::DperpMinus1;
    if (rep.r_min == rep.d_perp) return NmdsLocality::Dperp;
    fail(Errc::DichotomyViolated, "NMDS code with locality " + std::to_string(rep.r_min) + " and d(dual) = " +
                                      std::to_string(rep.d_perp));
}

NmdsPairing nmds_support_pairing(const LinearCode& C, const Caps& caps) {
    require(is_nmds(C, caps), Errc::HypothesisViolated, "the code is not NMDS");
    const std::size_t n = C.length();
    const LinearCode D = dual(C);
    const std::size_t d = minimum_distance(C, caps), dp = minimum_distance(D, caps);
    const LowWeightResult mine = low_weight_codewords(C, d, caps, SearchMethod::Auto, d);
    const LowWeightResult theirs = low_weight_codewords(D, dp, caps, SearchMethod::Auto, dp);

    std::map<Support, std::vector<std::size_t>> by_support;
    for (std::size_t j = 0; j < theirs.words.size(); ++j) by_support[theirs.words[j].support].push_back(j);

    NmdsPairing out;
    out.count = mine.counts[d];
    out.dual_count = theirs.counts[dp];
    std::vector<bool> used(theirs.words.size(), false);
    for (const auto& w : mine.words) {
        Support rest;
        for (std::size_t j = 0, s = 0; j < n; ++j) {
            if (s < w.support.size() && w.support[s] == j) {
                ++s;
                continue;
            }
            rest.push_back(j);
        }
        auto it = by_support.find(rest);
        require(it != by_support.end() && it->second.size() == 1, Errc::PairingFailed,
                "a minimum weight word has no unique partner on the complementary support");
        const std::size_t j = it->second.front();
        require(!used[j], Errc::PairingFailed, "a dual word is paired twice");
        used[j] = true;
        out.pairs.push_back({w, theirs.words[j]});
    }
    require(out.pairs.size() == theirs.words.size(), Errc::PairingFailed, "some dual minimum weight words are unpaired");
    require(out.count == out.dual_count, Errc::PairingFailed, "minimum weight counts differ");
    return out;
}

}  // namespace lrc
