#include "doctest.h"

#include <cmath>

#include "lrc/bounds.hpp"
#include "lrc/constructions.hpp"
#include "lrc/error.hpp"
#include "lrc/locality.hpp"
#include "lrc/lowweight.hpp"
#include "oracle.hpp"

using namespace lrc;

namespace {

// Each bound evaluated in long double with its own small helpers, then minimized.
std::uint64_t k_opt_reference(std::size_t n, std::size_t d, std::uint64_t q) {
    auto choose = [](std::size_t a, std::size_t b) {
        long double c = 1;
        for (std::size_t i = 0; i < b; ++i) c = c * static_cast<long double>(a - i) / static_cast<long double>(i + 1);
        return c;
    };
    auto largest_k = [&](long double codewords) {
        std::uint64_t k = 0;
        long double p = static_cast<long double>(q);
        while (p <= codewords * (1 + 1e-12L)) {
            p *= static_cast<long double>(q);
            ++k;
        }
        return k;
    };
    std::uint64_t best = n - d + 1;
    long double ball = 0;
    for (std::size_t i = 0; i <= (d - 1) / 2; ++i) ball += choose(n, i) * std::pow(static_cast<long double>(q - 1), i);
    best = std::min(best, largest_k(std::floor(std::pow(static_cast<long double>(q), n) / ball)));
    const long double qd = static_cast<long double>(q * d), slack = static_cast<long double>((q - 1) * n);
    if (qd > slack) best = std::min(best, largest_k(std::floor(qd / (qd - slack))));
    std::uint64_t k = 0;
    long double used = 0;
    while (true) {
        const long double next = used + std::ceil(static_cast<long double>(d) / std::pow(static_cast<long double>(q), k));
        if (next > n) break;
        used = next;
        ++k;
    }
    return std::min(best, k);
}

}  // namespace

TEST_CASE("Singleton-like bound") {
    CHECK(singleton_like(13, 10, 8) == 3);
    CHECK(classify_d_optimality(13, 10, 3, 8) == DOptimality::DOptimal);
    CHECK(singleton_like(17, 13, 11) == 4);
    CHECK(classify_d_optimality(17, 13, 4, 11) == DOptimality::DOptimal);
    CHECK(singleton_like(9, 3, 3) == 7);
    CHECK(classify_d_optimality(9, 3, 6, 3) == DOptimality::AlmostDOptimal);
    CHECK(classify_d_optimality(9, 3, 4, 3) == DOptimality::Neither);
    CHECK(std::string(d_optimality_name(DOptimality::AlmostDOptimal)) == "almost_d_optimal");
    CHECK_THROWS_AS(singleton_like(5, 2, 0), Error);
    // r = k recovers the classical Singleton bound.
    for (std::size_t n = 2; n < 20; ++n)
        for (std::size_t k = 1; k < n; ++k) CHECK(singleton_like(n, k, k) == static_cast<std::int64_t>(n - k + 1));
}

TEST_CASE("upper bounds on the optimal dimension") {
    const auto plotkin = k_opt_upper(10, 9, 3);
    CHECK(plotkin.value == 1);
    CHECK(plotkin.bound == "plotkin");
    for (std::uint64_t q : {2, 3, 4, 5, 8})
        for (std::size_t n = 1; n < 12; ++n) CHECK(k_opt_upper(n, n, q).value == 1);
    for (std::uint64_t q : {4, 5, 7, 8, 9, 16}) CHECK(k_opt_upper(q + 1, 4, q).value <= q - 2);
    CHECK(k_opt_upper(4, 3, 3).value == 2);
    // Perfect codes meet sphere packing.
    CHECK(k_opt_upper(7, 3, 2).value == 4);
    CHECK(k_opt_upper(23, 7, 2).value == 12);
    CHECK(k_opt_upper(11, 5, 3).value == 6);
    CHECK_THROWS_AS(k_opt_upper(5, 6, 2), Error);

    for (std::uint64_t q : {2, 3, 4, 5, 7})
        for (std::size_t n = 1; n <= 24; ++n)
            for (std::size_t d = 1; d <= n; ++d) CHECK(k_opt_upper(n, d, q).value == k_opt_reference(n, d, q));
}

TEST_CASE("CM bound") {
    SUBCASE("simplex") {
        const auto cm = cm_bound_upper(13, 9, 3, 2);
        CHECK(cm.rhs == 3);
        CHECK(cm.terms.front().t == 1);
        CHECK(cm.terms.front().k_opt == 1);
        CHECK(cm.terms.front().value == 3);
    }
    SUBCASE("hamming") {
        const auto cm = cm_bound_upper(13, 3, 3, 8);
        CHECK(cm.terms.front().n_prime == 4);
        CHECK(cm.terms.front().k_opt == 2);
        CHECK(cm.rhs == 10);
    }
    SUBCASE("terms below the distance contribute no dimension") {
        const auto cm = cm_bound_upper(9, 6, 8, 3);
        CHECK(cm.rhs == 3);
        bool empty_seen = false;
        for (const auto& t : cm.terms)
            if (t.n_prime < 6) {
                CHECK(t.bound == "empty");
                CHECK(t.k_opt == 0);
                empty_seen = true;
            }
        CHECK(empty_seen);
    }
    SUBCASE("reference minimisation") {
        for (std::uint64_t q : {2, 3, 4})
            for (std::size_t n = 2; n <= 16; ++n)
                for (std::size_t d = 1; d <= n; ++d)
                    for (std::size_t r = 1; r < n; ++r) {
                        std::uint64_t best = n;
                        for (std::size_t t = 1; t * (r + 1) <= n && t <= (n - d) / (r + 1) + 1; ++t) {
                            const std::size_t np = n - t * (r + 1);
                            best = std::min<std::uint64_t>(best, t * r + (np >= d ? k_opt_reference(np, d, q) : 0));
                        }
                        CHECK(cm_bound_upper(n, d, q, r).rhs == best);
                    }
    }
}

TEST_CASE("bounds report and tuple text") {
    const auto b = evaluate_bounds(13, 3, 9, 3, 2);
    CHECK(b.singleton_like_rhs == 10);
    CHECK_FALSE(b.d_optimal);
    CHECK(b.almost_d_optimal);
    CHECK(b.cm_rhs_ub == 3);
    CHECK(b.k_optimal_certified);
    CHECK(llrc_tuple(13, 3, 9, 3, 2) == "(13,3,9,3;2)");
}

TEST_CASE("random codes are never certified beyond their dimension") {
    std::mt19937_64 rng(41);
    const auto F = field_of_order(3);
    int inconclusive = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto C = oracle::random_code(F, 10, 3, rng);
        if (!is_nontrivial(C)) continue;
        const std::size_t d = oracle::min_distance(C);
        const std::size_t r = minimum_linear_locality(C).r_min;
        const auto b = evaluate_bounds(10, 3, d, 3, r);
        CHECK(b.cm_rhs_ub >= 3);
        CHECK(b.singleton_like_rhs >= static_cast<std::int64_t>(d));
        if (!b.k_optimal_certified) {
            CHECK(b.cm_rhs_ub > 3);
            ++inconclusive;
        }
    }
    CHECK(inconclusive > 0);
}
