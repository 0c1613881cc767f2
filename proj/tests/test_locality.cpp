#include "doctest.h"

#include <set>

#include "lrc/constructions.hpp"
#include "lrc/error.hpp"
#include "lrc/locality.hpp"
#include "lrc/lowweight.hpp"
#include "lrc/oval.hpp"
#include "oracle.hpp"

using namespace lrc;

namespace {

// Nontrivial in the locality sense, decided from columns alone: no coordinate is
// identically zero and none is free of every relation.
bool nontrivial_by_columns(const LinearCode& C) {
    if (C.dimension() == 0 || C.dimension() == C.length()) return false;
    std::vector<std::size_t> all(C.length());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    for (std::size_t i = 0; i < C.length(); ++i) {
        if (oracle::column_rank(C, {i}) == 0) return false;
        auto rest = all;
        rest.erase(rest.begin() + static_cast<long>(i));
        if (oracle::column_rank(C, rest) < C.dimension()) return false;
    }
    return true;
}

void check_repair_rule(const LinearCode& C, std::size_t i, const std::map<std::size_t, Elem>& u) {
    const Field& F = *C.field();
    for (const auto& w : oracle::codewords(C)) {
        Elem s = 0;
        for (const auto& [j, c] : u) s = F.add(s, F.mul(c, w[j]));
        CHECK(s == w[i]);
    }
}

}  // namespace

TEST_CASE("nontriviality") {
    const auto F3 = field_of_order(3);
    CHECK_FALSE(is_nontrivial(LinearCode::full_space(F3, 4)));
    CHECK(is_nontrivial(hamming(3, 3)));
    CHECK(is_nontrivial(hamming(2, 3)));
    CHECK_FALSE(is_nontrivial(LinearCode::from_generator(F3, {{1, 1, 0}})));
    CHECK_FALSE(is_nontrivial(LinearCode::from_generator(F3, {{1, 1, 0}, {0, 0, 1}})));
    try {
        minimum_linear_locality(LinearCode::full_space(F3, 4));
        FAIL("expected TrivialCode");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TrivialCode);
    }
}

TEST_CASE("locality of named codes") {
    const auto S = minimum_linear_locality(simplex(3, 3));
    CHECK(S.r_min == 2);
    CHECK(S.d_perp == 3);
    CHECK(S.is_dperp_minus_1);

    const auto H = minimum_linear_locality(hamming(3, 3));
    CHECK(H.r_min == 8);
    CHECK(H.d_perp == 9);

    const auto f = oval_poly(OvalFamily::Translation, 8, 1);
    const auto G = minimum_linear_locality(code_Gf(f));
    CHECK(G.d_perp == 3);
    CHECK(G.r_min == 3);
    CHECK_FALSE(G.is_dperp_minus_1);
    // Exactly one coordinate needs a weight-4 dual word.
    CHECK(G.coverage_by_weight.at(4).size() == 1);

    const auto B = minimum_linear_locality(bch(9, 10, 3, 1));
    CHECK(B.r_min == 5);
    CHECK(B.cyclic_fast_path);
}

TEST_CASE("locality agrees with the column-span definition") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const auto F = field_of_order(q);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 5 + trial % 4, k = 1 + trial % (n - 1);
            const auto C = oracle::random_code(F, n, k, rng);
            CHECK(is_nontrivial(C) == nontrivial_by_columns(C));
            if (!is_nontrivial(C)) continue;
            const auto rep = minimum_linear_locality(C);
            CHECK(rep.r_min == oracle::min_locality(C));
            CHECK(rep.d_perp == oracle::min_distance(dual(C)));
            for (std::size_t i = 0; i < n; ++i) CHECK(oracle::locality_of(C, i) + 1 <= rep.w_star);
            ++checked;
        }
    }
    CHECK(checked > 80);
}

TEST_CASE("walk and subset search give the same report") {
    std::mt19937_64 rng(32);
    const auto F = field_of_order(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto C = oracle::random_code(F, 12, 4 + trial % 3, rng);
        if (!is_nontrivial(C)) continue;
        Caps walk_only;
        walk_only.search = 0;
        Caps search_only;
        search_only.enumeration = 1;
        const auto a = minimum_linear_locality(C, walk_only);
        const auto b = minimum_linear_locality(C, search_only);
        CHECK(a.method == SearchMethod::Enumerate);
        CHECK(b.method == SearchMethod::SubsetSearch);
        CHECK(a.r_min == b.r_min);
        CHECK(a.d_perp == b.d_perp);
        CHECK(a.coverage_by_weight == b.coverage_by_weight);
        CHECK(a.repair_options == b.repair_options);
    }
}

TEST_CASE("repair coefficients") {
    const auto F2 = field_of_order(2);
    const auto even = LinearCode::from_parity_check(F2, {{1, 1, 1}});
    const auto u = repair_coefficients(even, 0, {1, 2});
    CHECK(u == std::map<std::size_t, Elem>{{1, 1}, {2, 1}});

    const auto S = simplex(3, 3);
    const auto rep = minimum_linear_locality(S);
    for (std::size_t i = 0; i < S.length(); ++i) {
        const auto set = rep.default_repair_set(i);
        CHECK(set.size() == 2);
        CHECK(std::find(set.begin(), set.end(), i) == set.end());
        const auto c = repair_coefficients(S, i, set);
        CHECK(c.size() == 2);
        for (const auto& [j, x] : c) CHECK(x != 0);
        check_repair_rule(S, i, c);
    }

    // A support that does not determine the coordinate.
    try {
        repair_coefficients(S, 0, {1});
        FAIL("expected NotARepairSet");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotARepairSet);
    }

    // Every listed option is a valid repair set on random codes.
    std::mt19937_64 rng(33);
    const auto F4 = field_of_order(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto C = oracle::random_code(F4, 6, 3, rng);
        if (!is_nontrivial(C)) continue;
        const auto r = minimum_linear_locality(C);
        for (std::size_t i = 0; i < C.length(); ++i) {
            CHECK_FALSE(r.repair_options[i].empty());
            for (const auto& sup : r.repair_options[i]) {
                Support minus(sup);
                minus.erase(std::find(minus.begin(), minus.end(), i));
                check_repair_rule(C, i, repair_coefficients(C, i, minus));
            }
        }
    }
}

TEST_CASE("AMDS and NMDS") {
    CHECK(is_nmds(bch(9, 10, 3, 1)));
    CHECK(is_amds(bch(9, 10, 3, 1)));
    CHECK_FALSE(is_nmds(hamming(3, 2)));  // the tetracode is MDS
    const auto f = oval_poly(OvalFamily::Translation, 8, 1);
    CHECK(is_nmds(code_Gf(f)));
    CHECK(is_nmds(code_Gf_bar(f)));
    CHECK(is_nmds(ternary_golay()));
    CHECK_FALSE(is_nmds(hamming(3, 3)));
}

TEST_CASE("locality of NMDS codes") {
    const auto f = oval_poly(OvalFamily::Translation, 8, 1);
    CHECK(nmds_locality_check(bch(9, 10, 3, 1)) == NmdsLocality::DperpMinus1);
    CHECK(nmds_locality_check(code_Gf(f)) == NmdsLocality::Dperp);
    CHECK(nmds_locality_check(code_Gf_bar(f)) == NmdsLocality::Dperp);
    CHECK(nmds_locality_check(ternary_golay()) == NmdsLocality::DperpMinus1);
    CHECK(std::string(nmds_locality_name(NmdsLocality::Dperp)) == "dperp");
    try {
        nmds_locality_check(hamming(3, 3));
        FAIL("expected HypothesisViolated");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::HypothesisViolated);
    }
}

TEST_CASE("NMDS support pairing") {
    for (const auto& [C, count] : std::vector<std::pair<LinearCode, int>>{{ternary_golay(), 132}, {bch(9, 10, 3, 1), 240}}) {
        const auto p = nmds_support_pairing(C);
        CHECK(p.count == count);
        CHECK(p.dual_count == count);
        const std::size_t n = C.length();
        std::set<Support> seen;
        for (const auto& pair : p.pairs) {
            std::vector<bool> hit(n, false);
            for (auto j : pair.word.support) hit[j] = true;
            for (auto j : pair.dual_word.support) {
                CHECK_FALSE(hit[j]);
                hit[j] = true;
            }
            CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
            CHECK(C.contains(pair.word.word));
            CHECK(dual(C).contains(pair.dual_word.word));
            seen.insert(pair.dual_word.support);
        }
        // Supports correspond one to one.
        CHECK(seen.size() == p.pairs.size());
    }
}
