#include "doctest.h"

#include "lrc/constructions.hpp"
#include "lrc/error.hpp"
#include "lrc/lowweight.hpp"
#include "lrc/poly.hpp"
#include "lrc/weights.hpp"
#include "oracle.hpp"

using namespace lrc;

namespace {

// Number of monomials x1^e1...xm^em with every e_i <= q - 1 and total degree <= ell,
// counted directly. This is the dimension of the generalized Reed-Muller code.
std::uint64_t monomial_count(std::uint64_t q, std::uint64_t ell, std::uint32_t m) {
    std::uint64_t count = 0, total = 1;
    for (std::uint32_t i = 0; i < m; ++i) total *= q;
    for (std::uint64_t j = 0; j < total; ++j) {
        std::uint64_t s = 0;
        for (std::uint64_t v = j; v; v /= q) s += v % q;
        count += (s <= ell);
    }
    return count;
}

Error caught(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e;
    }
    FAIL("no error thrown");
    return Error(Errc::Internal, "unreachable");
}

}  // namespace

TEST_CASE("Hamming and simplex codes") {
    const auto H = hamming(3, 3);
    CHECK(H.length() == 13);
    CHECK(H.dimension() == 10);
    CHECK(oracle::min_distance(dual(dual(H))) == 3);

    const auto S = simplex(3, 3);
    CHECK(S.length() == 13);
    CHECK(S.dimension() == 3);
    const auto ws = oracle::weights(S);
    CHECK(ws == oracle::dist(13, {{0, 1}, {9, 26}}));
    CHECK(S == dual(H));

    const auto H2 = hamming(2, 3);
    CHECK(H2.length() == 7);
    CHECK(H2.dimension() == 4);
    CHECK(oracle::min_distance(H2) == 3);

    // Columns are pairwise independent and normalized.
    const auto P = projective_points(field_of_order(4), 3);
    CHECK(P.cols == 21);
    for (std::size_t j = 0; j < P.cols; ++j) {
        std::size_t first = 0;
        while (P.at(first, j) == 0) ++first;
        CHECK(P.at(first, j) == 1);
    }
    CHECK_THROWS_AS(hamming(6, 2), Error);
    CHECK_THROWS_AS(hamming(3, 1), Error);
}

TEST_CASE("Hamming weight distribution formula") {
    CHECK(oracle::as_u64(hamming_weight_distribution_formula(3, 2)) == oracle::dist(4, {{0, 1}, {3, 8}}));
    CHECK(oracle::as_u64(hamming_weight_distribution_formula(2, 3)) ==
          oracle::dist(7, {{0, 1}, {3, 7}, {4, 7}, {7, 1}}));
    for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
        const auto f = hamming_weight_distribution_formula(q, m);
        const auto H = hamming(q, m);
        CHECK(f.total() == big_pow(q, H.dimension()));
        if (H.dimension() <= 11) CHECK(oracle::as_u64(f) == oracle::weights(H));
    }
    CHECK(oracle::as_u64(hamming_weight_distribution_formula(2, 3)) == oracle::weights(hamming(2, 3)));
}

TEST_CASE("cyclic codes from generator polynomials") {
    const auto F3 = field_of_order(3);
    const auto whole = cyclic_code(Poly::constant(F3, 1), 5);
    CHECK(whole.dimension() == 5);
    CHECK(whole.is_cyclic());

    const auto parity = cyclic_code(Poly(F3, {2, 1}), 4);  // x - 1
    CHECK(parity.dimension() == 3);
    CHECK(oracle::min_distance(parity) == 2);
    for (const auto& w : oracle::codewords(parity)) {
        Elem s = 0;
        for (auto x : w) s = F3->add(s, x);
        CHECK(s == 0);
    }

    const auto golay = cyclic_code(Poly(F3, {2, 0, 1, 2, 1, 1}), 11);
    CHECK(golay.dimension() == 6);
    CHECK(minimum_distance(golay) == 5);

    CHECK(caught([&] { cyclic_code(Poly(F3, {1, 1}), 3); }).code() == Errc::GcdNotOne);
    CHECK(caught([&] { cyclic_code(Poly(F3, {1, 1, 1}), 4); }).code() == Errc::NotADivisor);
}

TEST_CASE("BCH codes") {
    const auto B9 = bch(9, 10, 3, 1);
    CHECK(B9.length() == 10);
    CHECK(B9.dimension() == 6);
    CHECK(minimum_distance(B9) == 4);
    CHECK(B9.is_cyclic());
    CHECK(B9.is_shift_invariant());
    CHECK(minimum_distance(dual(B9)) == 6);

    const auto B16 = bch(16, 17, 3, 1);
    CHECK(B16.length() == 17);
    CHECK(B16.dimension() == 13);
    CHECK(minimum_distance(B16) == 4);

    const auto B32 = bch(32, 33, 4, 1);
    CHECK(B32.length() == 33);
    CHECK(B32.dimension() == 27);
    CHECK(minimum_distance(B32) == 6);

    // Binary narrow-sense BCH of length 15 and designed distance 5 is [15,7,5].
    const auto b = bch(2, 15, 5, 1);
    CHECK(b.dimension() == 7);
    CHECK(oracle::min_distance(b) == 5);

    // The generator vanishes at the designed consecutive powers of beta.
    const auto g = bch_generator(9, 10, 3, 1);
    CHECK(g.degree() == 4);
    CHECK(caught([] { bch(6, 5, 3, 1); }).code() != Errc::Internal);
}

TEST_CASE("q-weights") {
    CHECK(q_weight(0, 3, 2) == 0);
    CHECK(q_weight(5, 3, 2) == 3);
    std::uint64_t best = 0;
    for (std::uint64_t j = 0; j < 27; ++j) best = std::max(best, q_weight(j, 3, 3));
    CHECK(best == 6);
}

TEST_CASE("generalized Reed-Muller dimension and distance") {
    CHECK(grm_dimension(3, 1, 2) == 3);
    CHECK(grm_distance(3, 1, 2) == 6);
    for (std::uint64_t q : {2, 3, 4, 5})
        for (std::uint32_t m : {1u, 2u, 3u}) {
            const std::uint64_t top = m * (q - 1);
            for (std::uint64_t ell = 0; ell < top; ++ell) {
                CHECK(grm_dimension(q, ell, m) == monomial_count(q, ell, m));
                std::uint64_t len = 1;
                for (std::uint32_t i = 0; i < m; ++i) len *= q;
                if (ell + 1 <= top) CHECK(grm_dimension(q, ell, m) + grm_dimension(q, top - 1 - ell, m) == len);
            }
        }
}

TEST_CASE("generalized Reed-Muller codes") {
    const auto R = grm(3, 1, 2);
    CHECK(R.length() == 9);
    CHECK(R.dimension() == 3);
    CHECK(oracle::min_distance(R) == 6);
    CHECK(grm(3, 2, 2) == dual(R));

    const auto RM = grm(2, 1, 3);
    CHECK(RM.length() == 8);
    CHECK(RM.dimension() == 4);
    CHECK(oracle::min_distance(RM) == 4);

    const auto P = grm_punctured(3, 1, 2);
    CHECK(P.length() == 8);
    CHECK(P.dimension() == 3);
    CHECK(P.is_cyclic());
    CHECK(oracle::min_distance(P) == 5);
    CHECK(extend(P) == R);

    // Every small instance where the formulas apply agrees with direct computation.
    for (std::uint64_t q : {2, 3, 4})
        for (std::uint32_t m : {2u, 3u}) {
            if (q == 4 && m == 3) continue;  // length 64 is beyond the default search cap
            for (std::uint64_t ell = 1; ell < q * (m - 1) && ell < m * (q - 1); ++ell) {
                const auto C = grm(q, ell, m);
                CHECK(C.dimension() == grm_dimension(q, ell, m));
                CHECK(minimum_distance(C) == grm_distance(q, ell, m));
            }
        }
}

TEST_CASE("ternary Golay code") {
    const auto G = ternary_golay();
    CHECK(G.length() == 11);
    CHECK(G.dimension() == 6);
    CHECK(G.is_cyclic());
    CHECK(oracle::min_distance(G) == 5);
    const auto D = dual(G);
    CHECK(D.dimension() == 5);
    CHECK(oracle::weights(D) == oracle::dist(11, {{0, 1}, {6, 132}, {9, 110}}));
}

TEST_CASE("parameter assertions") {
    const auto H = hamming(3, 3);
    CHECK_NOTHROW(assert_parameters(H, 13, 10, 3, "hamming"));
    CHECK(caught([&] { assert_parameters(H, 13, 10, 4, "hamming"); }).code() == Errc::Internal);
    CHECK(caught([&] { assert_parameters(H, 13, 9, std::nullopt, "hamming"); }).code() == Errc::Internal);
}
