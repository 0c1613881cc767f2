#include "lrc/constructions.hpp"

#include <algorithm>

#include "lrc/cyclotomic.hpp"
#include "lrc/enumerate.hpp"
#include "lrc/lowweight.hpp"

namespace lrc {

Caps verification_caps() { return Caps{std::uint64_t{1} << 22, std::uint64_t{1} << 22}; }

void assert_parameters(const LinearCode& C, std::size_t n, std::size_t k, std::optional<std::size_t> d,
                       const std::string& what, const Caps& budget) {
    auto mismatch = [&](const std::string& name, std::size_t want, std::size_t got) {
        fail(Errc::Internal, what + ": expected " + name + " = " + std::to_string(want) + ", built " +
                                 std::to_string(got));
    };
    if (C.length() != n) mismatch("n", n, C.length());
    if (C.dimension() != k) mismatch("k", k, C.dimension());
    if (!d || k == 0) return;
    try {
        const std::size_t got = minimum_distance(C, budget);
        if (got != *d) mismatch("d", *d, got);
    } catch (const Error& e) {
        if (!e.is_cap()) throw;
    }
}

namespace {

std::uint64_t checked_pow(std::uint64_t q, std::uint32_t m, std::uint64_t limit, const std::string& what) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        require(r <= limit / q, Errc::FieldTooLarge, what + " exceeds the supported size");
        r *= q;
    }
    return r;
}

std::uint64_t projective_count(std::uint64_t q, std::uint32_t m) {
    require(m >= 2, Errc::BadParameters, "m must be at least 2");
    const std::uint64_t qm = checked_pow(q, m, std::uint64_t{1} << 40, "q^m");
    const std::uint64_t n = (qm - 1) / (q - 1);
    require(n <= kMaxLength, Errc::FieldTooLarge,
            "length " + std::to_string(n) + " exceeds the length cap " + std::to_string(kMaxLength));
    return n;
}

}  // namespace

Matrix projective_points(const FieldPtr& F, std::uint32_t m) {
    const std::uint64_t q = F->order();
    const std::uint64_t n = projective_count(q, m);
    Matrix P(m, n);
    std::size_t col = 0;
    std::vector<Elem> v(m);
    const std::uint64_t total = checked_pow(q, m, std::uint64_t{1} << 40, "q^m");
    for (std::uint64_t e = 1; e < total; ++e) {
        std::uint64_t x = e;
        for (std::uint32_t i = m; i-- > 0;) {
            v[i] = static_cast<Elem>(x % q);
            x /= q;
        }
        auto first = std::find_if(v.begin(), v.end(), [](Elem a) { return a != 0; });
        if (*first != 1) continue;
        for (std::uint32_t i = 0; i < m; ++i) P.at(i, col) = v[i];
        ++col;
    }
    if (col != n) fail(Errc::Internal, "projective point count mismatch");
    return P;
}

LinearCode hamming(std::uint64_t q, std::uint32_t m) {
    FieldPtr F = field_of_order(q);
    const Matrix P = projective_points(F, m);
    const std::size_t n = P.cols;
    LinearCode C = LinearCode::from_parity_check(F, P.to_rows(), n)
                       .with_label("H(" + std::to_string(q) + "," + std::to_string(m) + ")");
    assert_parameters(C, n, n - m, 3, C.label());
    return C;
}

LinearCode simplex(std::uint64_t q, std::uint32_t m) {
    LinearCode C = dual(hamming(q, m)).with_label("S(" + std::to_string(q) + "," + std::to_string(m) + ")");
    const std::uint64_t qm1 = checked_pow(q, m - 1, std::uint64_t{1} << 40, "q^(m-1)");
    assert_parameters(C, C.length(), m, qm1, C.label());
    return C;
}

WeightDistribution hamming_weight_distribution_formula(std::uint64_t q, std::uint32_t m) {
    const std::uint64_t n = projective_count(q, m);
    const std::uint64_t b = checked_pow(q, m - 1, std::uint64_t{1} << 40, "q^(m-1)");
    const std::uint64_t a = (b - 1) / (q - 1);
    const BigInt qm = big_pow(q, m);
    WeightDistribution wd;
    wd.counts.assign(n + 1, 0);
    for (std::uint64_t k = 0; k <= n; ++k) {
        BigInt sum = 0;
        for (std::uint64_t i = 0; i <= std::min(a, k); ++i) {
            const std::uint64_t j = k - i;
            if (j > b) continue;
            BigInt term = big_pow(q - 1, k);
            BigInt tail = big_pow(q - 1, i) * (qm - 1);
            term += (j % 2 == 0) ? tail : BigInt(-tail);
            sum += binomial(static_cast<std::int64_t>(a), static_cast<std::int64_t>(i)) *
                   binomial(static_cast<std::int64_t>(b), static_cast<std::int64_t>(j)) * term;
        }
        if (sum % qm != 0) fail(Errc::Internal, "Hamming weight formula is not integral at weight " + std::to_string(k));
        wd.counts[k] = sum / qm;
    }
    return wd;
}

LinearCode cyclic_code(const Poly& g, std::size_t n) {
    const FieldPtr& F = g.field();
    require(n >= 1, Errc::BadParameters, "length must be positive");
    require(gcd_u64(n, F->order()) == 1, Errc::GcdNotOne,
            "gcd(" + std::to_string(n) + ", " + std::to_string(F->order()) + ") != 1");
    require(!g.is_zero() && poly_mod(Poly::x_pow_minus_one(F, n), g).is_zero(), Errc::NotADivisor,
            g.to_string() + " does not divide x^" + std::to_string(n) + " - 1");
    const Poly gm = g.monic();
    const std::size_t deg = static_cast<std::size_t>(gm.degree());
    std::vector<Word> rows;
    rows.reserve(n - deg);
    for (std::size_t s = 0; s + deg < n; ++s) {
        Word row(n, 0);
        for (std::size_t i = 0; i <= deg; ++i) row[s + i] = gm.coeff(i);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return LinearCode::zero_code(F, n).mark_cyclic();
    return LinearCode::from_generator(F, rows, n).mark_cyclic();
}

Poly bch_generator(std::uint64_t q, std::uint64_t n, std::uint64_t delta, std::uint64_t h) {
    FieldPtr F = field_of_order(q);
    require(delta >= 2 && delta <= n, Errc::BadParameters, "designed distance must satisfy 2 <= delta <= n");
    require(n <= kMaxLength, Errc::FieldTooLarge, "length exceeds the length cap");
    FieldPtr E = splitting_field(F, n);
    const FieldElement beta(E, primitive_root_of_unity(*E, n));
    std::vector<Poly> factors;
    std::vector<bool> seen(n, false);
    for (std::uint64_t i = 0; i + 2 <= delta; ++i) {
        const std::uint64_t s = (h + i) % n;
        if (seen[s]) continue;
        for (std::uint64_t c : cyclotomic_coset(s, n, q)) seen[c] = true;
        factors.push_back(minimal_polynomial(beta, s, n, F));
    }
    return poly_lcm(factors);
}

LinearCode bch(std::uint64_t q, std::uint64_t n, std::uint64_t delta, std::uint64_t h) {
    LinearCode C = cyclic_code(bch_generator(q, n, delta, h), n)
                       .with_label("C(" + std::to_string(q) + "," + std::to_string(n) + "," +
                                   std::to_string(delta) + "," + std::to_string(h) + ")");
    // Designed-distance sanity check, within the verification budget.
    if (C.dimension() > 0) {
        try {
            const std::size_t d = minimum_distance(C, verification_caps());
            if (d < delta)
                fail(Errc::Internal, C.label() + " has minimum distance " + std::to_string(d) +
                                         " below its designed distance");
        } catch (const Error& e) {
            if (!e.is_cap()) throw;
        }
    }
    return C;
}

std::uint64_t q_weight(std::uint64_t j, std::uint64_t q, std::uint32_t m) {
    std::uint64_t s = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
        s += j % q;
        j /= q;
    }
    return s;
}

std::uint64_t grm_dimension(std::uint64_t q, std::uint64_t ell, std::uint32_t m) {
    BigInt kappa = 0;
    const auto Q = static_cast<std::int64_t>(q);
    const auto M = static_cast<std::int64_t>(m);
    for (std::int64_t i = 0; i <= static_cast<std::int64_t>(ell); ++i) {
        for (std::int64_t j = 0; j <= M; ++j) {
            const std::int64_t t = i - j * Q;
            if (t < 0) break;
            BigInt term = binomial(M, j) * binomial(t + M - 1, t);
            kappa += (j % 2 == 0) ? term : BigInt(-term);
        }
    }
    return kappa.convert_to<std::uint64_t>();
}

std::uint64_t grm_distance(std::uint64_t q, std::uint64_t ell, std::uint32_t m) {
    const std::uint64_t l1 = ell / (q - 1);
    const std::uint64_t l0 = ell % (q - 1);
    require(l1 + 1 <= m, Errc::BadParameters, "ell is outside the range of the distance formula");
    return (q - l0) * checked_pow(q, static_cast<std::uint32_t>(m - l1 - 1), std::uint64_t{1} << 40, "q^m");
}

bool grm_formulas_apply(std::uint64_t q, std::uint64_t ell, std::uint32_t m) {
    return m >= 1 && ell < q * (m - 1);
}

LinearCode grm_punctured(std::uint64_t q, std::uint64_t ell, std::uint32_t m) {
    FieldPtr F = field_of_order(q);
    require(m >= 1, Errc::BadParameters, "m must be positive");
    require(ell >= 1 && ell < (q - 1) * m, Errc::BadParameters,
            "ell must satisfy 1 <= ell < (q-1)m = " + std::to_string((q - 1) * m));
    const std::uint64_t qm = checked_pow(q, m, Field::kMaxOrder, "q^m");
    const std::uint64_t n = qm - 1;
    require(n <= kMaxLength, Errc::FieldTooLarge, "length exceeds the length cap");
    FieldPtr E = splitting_field(F, n);
    const FieldElement alpha(E, primitive_root_of_unity(*E, n));
    // Take one minimal polynomial per cyclotomic coset of qualifying exponents; the
    // q-weight is constant on cosets, so this is exactly the product over roots.
    const std::uint64_t bound = (q - 1) * m - ell;
    std::vector<bool> seen(n, false);
    Poly g = Poly::constant(F, 1);
    for (std::uint64_t j = 1; j < n; ++j) {
        if (seen[j] || q_weight(j, q, m) >= bound) continue;
        for (std::uint64_t c : cyclotomic_coset(j, n, q)) seen[c] = true;
        g = g * minimal_polynomial(alpha, j, n, F);
    }
    LinearCode C = cyclic_code(g, n).with_label("R*(" + std::to_string(q) + "," + std::to_string(ell) + "," +
                                                std::to_string(m) + ")");
    if (grm_formulas_apply(q, ell, m)) {
        assert_parameters(C, n, grm_dimension(q, ell, m), grm_distance(q, ell, m) - 1, C.label());
    }
    return C;
}

LinearCode grm(std::uint64_t q, std::uint64_t ell, std::uint32_t m) {
    LinearCode C = extend(grm_punctured(q, ell, m))
                       .with_label("R(" + std::to_string(q) + "," + std::to_string(ell) + "," + std::to_string(m) + ")");
    if (grm_formulas_apply(q, ell, m)) {
        assert_parameters(C, C.length(), grm_dimension(q, ell, m), grm_distance(q, ell, m), C.label());
    }
    return C;
}

LinearCode ternary_golay() {
    FieldPtr F = field_of_order(3);
    // x^11 - 1 = (x - 1) g(x) g~(x) over GF(3); either degree-5 factor generates the code.
    const std::vector<std::vector<Elem>> candidates = {{2, 0, 1, 2, 1, 1}, {2, 1, 2, 1, 0, 1}};
    for (const auto& c : candidates) {
        Poly g(F, c);
        if (!poly_mod(Poly::x_pow_minus_one(F, 11), g).is_zero()) continue;
        LinearCode C = cyclic_code(g, 11).with_label("Golay(3)");
        assert_parameters(C, 11, 6, 5, C.label());
        return C;
    }
    fail(Errc::Internal, "no degree-5 Golay generator divides x^11 - 1");
}

}  // namespace lrc
