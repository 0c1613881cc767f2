#include "doctest.h"

#include <set>

#include "lrc/cyclotomic.hpp"
#include "lrc/gf.hpp"
#include "lrc/poly.hpp"

using namespace lrc;

namespace {

// Reference arithmetic for a flat field: schoolbook product of base-p digit vectors
// reduced by the modulus, all in plain integers.
Elem reference_mul(std::uint32_t p, const std::vector<Elem>& modulus, Elem a, Elem b) {
    const std::size_t m = modulus.size() - 1;
    std::vector<std::uint64_t> da(m), db(m), c(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i, a /= p, b /= p) {
        da[i] = a % p;
        db[i] = b % p;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c[i + j] = (c[i + j] + da[i] * db[j]) % p;
    for (std::size_t d = 2 * m - 1; d >= m; --d) {
        const std::uint64_t t = c[d];
        for (std::size_t j = 0; j < m; ++j) c[d - m + j] = (c[d - m + j] + (p - t) * modulus[j]) % p;
        c[d] = 0;
    }
    Elem r = 0;
    for (std::size_t i = m; i-- > 0;) r = r * p + static_cast<Elem>(c[i]);
    return r;
}

// Multiplicative order by stepping through powers one at a time.
std::uint64_t naive_order(const Field& F, Elem a) {
    Elem x = a;
    std::uint64_t k = 1;
    while (x != 1) {
        x = F.mul(x, a);
        ++k;
    }
    return k;
}

Elem naive_pow(const Field& F, Elem a, std::uint64_t e) {
    Elem x = 1;
    for (std::uint64_t i = 0; i < e; ++i) x = F.mul(x, a);
    return x;
}

std::vector<FieldPtr> small_fields() {
    std::vector<FieldPtr> fs;
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64}) fs.push_back(field_of_order(q));
    fs.push_back(quadratic_extension(field_of_order(2)));
    fs.push_back(quadratic_extension(field_of_order(4)));
    fs.push_back(quadratic_extension(field_of_order(3)));
    fs.push_back(quadratic_extension(field_of_order(8)));
    fs.push_back(quadratic_extension(field_of_order(7)));
    fs.push_back(extension(field_of_order(2), 3));
    fs.push_back(extension(field_of_order(4), 3));
    return fs;
}

}  // namespace

TEST_CASE("prime fields") {
    auto F2 = field_new(2, 1);
    CHECK(F2->order() == 2);
    CHECK(F2->add(1, 1) == 0);
    CHECK(F2->modulus() == std::vector<Elem>{1, 1});
    auto F5 = field_new(5, 1);
    CHECK(F5->multiplicative_order(F5->generator()) == 4);
    CHECK(F5->modulus()[0] == F5->neg(F5->generator()));
    CHECK_THROWS_AS(field_new(6, 1), Error);
    try {
        field_new(9, 1);
        FAIL("expected NotPrime");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrime);
    }
    try {
        field_new(2, 21);
        FAIL("expected FieldTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::FieldTooLarge);
    }
    CHECK(field_new(2, 20)->order() == (1u << 20));
}

TEST_CASE("GF(4) reduces x^2 by x^2+x+1") {
    auto F = field_new(2, 2);
    CHECK(F->modulus() == std::vector<Elem>{1, 1, 1});
    CHECK(F->mul(2, 2) == 3);
}

TEST_CASE("GF(9) takes the smallest primitive quadratic") {
    // Independent search: monic quadratics over GF(3) without roots, ranked by c0 + 3 c1,
    // keeping the first whose x has order 8.
    std::vector<Elem> expected;
    for (Elem enc = 0; enc < 9 && expected.empty(); ++enc) {
        Elem c0 = enc % 3, c1 = enc / 3;
        bool has_root = false;
        for (Elem x = 0; x < 3; ++x)
            if ((x * x + c1 * x + c0) % 3 == 0) has_root = true;
        if (has_root) continue;
        std::vector<Elem> mod{c0, c1, 1};
        Elem y = 3;  // x
        std::uint64_t order = 1;
        while (y != 1) {
            y = reference_mul(3, mod, y, 3);
            ++order;
        }
        if (order == 8) expected = mod;
    }
    auto F = field_new(3, 2);
    CHECK(F->modulus() == expected);
    CHECK(naive_order(*F, 3) == 8);
    CHECK(F->generator() == 3);
}

TEST_CASE("flat-field multiplication matches schoolbook reduction") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 4}, {2, 5}, {2, 8}, {3, 3}, {5, 2}, {7, 2}}) {
        auto F = field_new(p, m);
        CHECK(naive_order(*F, F->generator()) == F->order() - 1);
        for (Elem a = 0; a < F->order(); ++a)
            for (Elem b = 0; b < F->order(); ++b) REQUIRE(F->mul(a, b) == reference_mul(p, F->modulus(), a, b));
    }
}

TEST_CASE("untabulated fields agree with the reference") {
    auto F = field_new(2, 18);
    for (Elem a : {1u, 2u, 12345u, 200000u, 262143u})
        for (Elem b : {3u, 77u, 131071u, 99999u}) CHECK(F->mul(a, b) == reference_mul(2, F->modulus(), a, b));
    CHECK(F->mul(77, F->inv(77)) == 1);
    CHECK(F->multiplicative_order(F->generator()) == F->order() - 1);
}

TEST_CASE("field axioms hold exhaustively up to q = 64") {
    for (const auto& F : small_fields()) {
        CAPTURE(F->name());
        const Elem q = F->order();
        for (Elem a = 0; a < q; ++a) {
            REQUIRE(F->add(a, F->neg(a)) == 0);
            REQUIRE(F->mul(a, 1) == a);
            if (a) REQUIRE(F->mul(a, F->inv(a)) == 1);
            for (Elem b = 0; b < q; ++b) {
                REQUIRE(F->add(a, b) == F->add(b, a));
                REQUIRE(F->mul(a, b) == F->mul(b, a));
                // Frobenius is additive
                const auto p = F->characteristic();
                REQUIRE(F->pow(F->add(a, b), p) == F->add(F->pow(a, p), F->pow(b, p)));
                for (Elem c = 0; c < q; ++c) {
                    REQUIRE(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
                    REQUIRE(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
                    REQUIRE(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("pow reduces exponents and rejects zero inverses") {
    auto F = field_new(3, 2);
    CHECK(F->pow(5, 8) == 1);
    CHECK(F->pow(5, 9) == 5);
    CHECK(F->pow(5, -1) == F->inv(5));
    CHECK(F->pow(0, 0) == 1);
    CHECK(F->pow(0, 3) == 0);
    CHECK_THROWS_AS(F->inv(0), Error);
    CHECK_THROWS_AS(F->pow(0, -1), Error);
}

TEST_CASE("field elements refuse to mix fields") {
    auto F4 = field_new(2, 2);
    auto F8 = field_new(2, 3);
    FieldElement a(F4, 2), b(F8, 2);
    try {
        (void)(a + b);
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::FieldMismatch);
    }
    CHECK((a * a).value() == 3);
    CHECK((a * a.inv()).value() == 1);
    CHECK(field_new(2, 2).get() == F4.get());
}

TEST_CASE("quadratic towers") {
    auto F3 = field_new(3, 1);
    auto T9 = quadratic_extension(F3);
    CHECK(T9->order() == 9);
    CHECK(T9->is_tower());
    for (Elem a = 0; a < 3; ++a) CHECK(T9->pow(a, 3) == a);

    auto T81 = quadratic_extension(field_new(3, 2));
    CHECK(T81->order() == 81);
    CHECK(naive_order(*T81, T81->generator()) == 80);
    for (Elem g = 1; g < T81->generator(); ++g) CHECK(naive_order(*T81, g) < 80);

    auto T64 = quadratic_extension(field_new(2, 3));
    const Elem d9 = naive_pow(*T64, T64->generator(), 9);
    CHECK(naive_order(*T64, d9) == 7);
    CHECK(T64->in_base(d9));
    CHECK(d9 < 8);
    // Base arithmetic embeds unchanged.
    auto F8 = field_new(2, 3);
    for (Elem a = 0; a < 8; ++a)
        for (Elem b = 0; b < 8; ++b) CHECK(T64->mul(a, b) == F8->mul(a, b));
}

TEST_CASE("trace down a tower") {
    auto T81 = quadratic_extension(field_new(3, 2));
    const Elem d = T81->generator();
    CHECK(trace_to_base(*T81, 0) == 0);
    CHECK(trace_to_base(*T81, d) == T81->add(d, naive_pow(*T81, d, 9)));
    auto T64 = quadratic_extension(field_new(2, 3));
    for (Elem a = 0; a < 8; ++a) CHECK(trace_to_base(*T64, a) == 0);
    for (Elem a = 0; a < 9; ++a) CHECK(trace_to_base(*T81, a) == T81->add(a, a));
    try {
        trace_to_base(*field_new(3, 2), 1);
        FAIL("expected NotTowerField");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotTowerField);
    }
    FieldElement t = trace_to_base(FieldElement(T81, d));
    CHECK(t.field()->order() == 9);
}

TEST_CASE("trace is linear over the base and onto it") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
        auto B = field_of_order(q);
        auto T = quadratic_extension(B);
        CAPTURE(T->name());
        std::set<Elem> image;
        for (Elem x = 0; x < T->order(); ++x) {
            const Elem tx = trace_to_base(*T, x);
            image.insert(tx);
            for (Elem c = 0; c < q; c += (q > 8 ? 3 : 1))
                REQUIRE(trace_to_base(*T, T->mul(c, x)) == T->mul(c, tx));
            const Elem y = (x * 7 + 3) % T->order();
            REQUIRE(trace_to_base(*T, T->add(x, y)) == T->add(tx, trace_to_base(*T, y)));
        }
        CHECK(image.size() == q);
    }
}

TEST_CASE("absolute trace") {
    auto F8 = field_new(2, 3);
    int ones = 0;
    for (Elem a = 0; a < 8; ++a) ones += absolute_trace(*F8, a);
    CHECK(ones == 4);
}

TEST_CASE("cyclotomic cosets") {
    CHECK(cyclotomic_coset(0, 10, 9) == std::vector<std::uint64_t>{0});
    CHECK(cyclotomic_coset(1, 10, 9) == std::vector<std::uint64_t>{1, 9});
    CHECK(cyclotomic_coset(1, 7, 2) == std::vector<std::uint64_t>{1, 2, 4});
    CHECK_THROWS_AS(cyclotomic_coset(1, 10, 2), Error);
    std::size_t total = 0;
    for (const auto& c : cyclotomic_cosets(17, 16)) total += c.size();
    CHECK(total == 17);
    CHECK(multiplicative_order_mod(9, 10) == 2);
    CHECK(multiplicative_order_mod(2, 7) == 3);
}

TEST_CASE("polynomial basics") {
    auto F2 = field_new(2, 1);
    Poly f(F2, {1, 1, 1});
    CHECK(f.eval(1) == 1);
    CHECK(f.degree() == 2);
    CHECK(poly_lcm(f, f) == f);
    Poly g(F2, {1, 1});
    auto [quot, rem] = poly_divmod(f * g + Poly(F2, {1}), g);
    CHECK(quot == f);
    CHECK(rem == Poly(F2, {1}));
    CHECK_THROWS_AS(poly_divmod(f, Poly(F2)), Error);
    CHECK(Poly(F2, {1, 0, 0}).degree() == 0);
    CHECK(Poly(F2).degree() == -1);
    auto F3 = field_new(3, 1);
    try {
        (void)(f + Poly(F3, {1}));
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::FieldMismatch);
    }
    CHECK(is_irreducible(f));
    CHECK(!is_irreducible(f * g));
}

TEST_CASE("x^n - 1 is squarefree when gcd(n, q) = 1") {
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 7}, {3, 10}, {9, 10}, {16, 17}, {4, 15}}) {
        auto F = field_of_order(q);
        Poly f = Poly::x_pow_minus_one(F, n);
        CHECK(poly_gcd(f, f.derivative()) == Poly::constant(F, 1));
    }
    auto F2 = field_of_order(2);
    Poly f = Poly::x_pow_minus_one(F2, 4);
    CHECK(poly_gcd(f, f.derivative()).degree() > 0);
}

TEST_CASE("minimal polynomials factor x^n - 1") {
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{9, 10}, {8, 9}, {16, 17}, {2, 7}, {3, 13}}) {
        auto B = field_of_order(q);
        auto E = splitting_field(B, n);
        FieldElement beta(E, primitive_root_of_unity(*E, n));
        Poly prod = Poly::constant(B, 1);
        for (const auto& coset : cyclotomic_cosets(n, q)) {
            Poly m = minimal_polynomial(beta, coset.front(), n, B);
            CHECK(m.degree() == static_cast<int>(coset.size()));
            CHECK(m.is_monic());
            CHECK(is_irreducible(m));
            const Elem root = E->pow(beta.value(), static_cast<std::int64_t>(coset.front()));
            // evaluate over the extension
            CHECK(Poly(E, m.coeffs()).eval(root) == 0);
            prod = prod * m;
        }
        CHECK(prod == Poly::x_pow_minus_one(B, n));
    }
}

TEST_CASE("minimal polynomial of beta for q = 9, n = 10") {
    auto B = field_of_order(9);
    auto E = splitting_field(B, 10);
    CHECK(E->order() == 81);
    const Elem beta = primitive_root_of_unity(*E, 10);
    Poly m = minimal_polynomial(FieldElement(E, beta), 1, 10, B);
    // Expand (x - beta)(x - beta^9) by hand.
    const Elem b9 = naive_pow(*E, beta, 9);
    const Elem c1 = E->neg(E->add(beta, b9));
    const Elem c0 = E->mul(beta, b9);
    CHECK(m.coeffs() == std::vector<Elem>{c0, c1, 1});
    CHECK(minimal_polynomial(FieldElement(E, beta), 0, 10, B) == Poly(B, {B->neg(1), 1}));
    try {
        minimal_polynomial(FieldElement(E, E->generator()), 1, 10, B);
        FAIL("expected NotRootOfUnity");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotRootOfUnity);
    }
}
