#include "lrc/oval.hpp"

#include <array>

#include "lrc/constructions.hpp"

namespace lrc {

namespace {

constexpr std::array<std::pair<OvalFamily, std::string_view>, 8> kNames = {{
    {OvalFamily::Translation, "translation"},
    {OvalFamily::Segre, "segre"},
    {OvalFamily::Glynn1, "glynn1"},
    {OvalFamily::Glynn2, "glynn2"},
    {OvalFamily::Glynn3, "glynn3"},
    {OvalFamily::Cherowitzo, "cherowitzo"},
    {OvalFamily::Payne, "payne"},
    {OvalFamily::User, "user"},
}};

std::uint32_t two_power_degree(std::uint64_t q) {
    std::uint32_t m = 0;
    while ((std::uint64_t{1} << m) < q) ++m;
    return (q >= 2 && (std::uint64_t{1} << m) == q) ? m : 0;
}

// Sum of x^e over the exponents, each reduced into [1, q-1]; coinciding terms cancel.
Poly monomial_sum(const FieldPtr& F, const std::vector<std::uint64_t>& exps) {
    const std::uint64_t q = F->order();
    Poly f(F);
    for (std::uint64_t e : exps) f = f + Poly::monomial(F, 1, static_cast<std::size_t>((e - 1) % (q - 1) + 1));
    return f;
}

// Exponents of the catalog monomials; empty when the family's condition on m fails.
std::vector<std::uint64_t> family_exponents(OvalFamily family, std::uint32_t m, std::uint32_t h) {
    const auto p2 = [](std::uint32_t e) { return std::uint64_t{1} << e; };
    const bool odd = m % 2 == 1;
    switch (family) {
        case OvalFamily::Translation:
            if (h >= 1 && h < m && gcd_u64(h, m) == 1) return {p2(h)};
            return {};
        case OvalFamily::Segre:
            if (odd) return {6};
            return {};
        case OvalFamily::Glynn1:
            if (odd) return {3 * p2((m + 1) / 2) + 4};
            return {};
        case OvalFamily::Glynn2:
            if (m % 4 == 3) return {p2((m + 1) / 2) + p2((m + 1) / 4)};
            return {};
        case OvalFamily::Glynn3:
            if (m % 4 == 1) return {p2((m + 1) / 2) + p2((3 * m + 1) / 4)};
            return {};
        case OvalFamily::Cherowitzo:
            if (odd) {
                const std::uint32_t e = (m + 1) / 2;
                return {p2(e), p2(e) + 2, 3 * p2(e) + 4};
            }
            return {};
        case OvalFamily::Payne:
            // x^(5/6) + x^(1/2) + x^(1/6) as exponents mod 2^m - 1.
            if (odd) return {(p2(m - 1) + 2) / 3, p2(m - 1), (5 * p2(m - 1) - 2) / 3};
            return {};
        case OvalFamily::User:
            return {};
    }
    return {};
}

// Values f(x) for every encoding x.
std::vector<Elem> value_table(const Field& F, const Poly& f) {
    std::vector<Elem> v(F.order());
    for (Elem x = 0; x < F.order(); ++x) v[x] = f.eval(x);
    return v;
}

}  // namespace

std::string oval_family_name(OvalFamily f) {
    for (const auto& [fam, name] : kNames)
        if (fam == f) return std::string(name);
    return "user";
}

OvalFamily parse_oval_family(std::string_view tag) {
    for (const auto& [fam, name] : kNames)
        if (name == tag) return fam;
    fail(Errc::UnknownFamily, "unknown oval family '" + std::string(tag) + "'");
}

std::string OvalPolynomial::tag() const {
    std::string t = oval_family_name(family);
    if (family == OvalFamily::Translation) t += "(h=" + std::to_string(param) + ")";
    return t;
}

bool is_oval_polynomial(const Field& F, const Poly& f) {
    if (F.characteristic() != 2 || !f.field()->same_as(F)) return false;
    const Elem q = F.order();
    const std::vector<Elem> fx = value_table(F, f);
    if (fx[0] != 0 || fx[1] != 1) return false;
    std::vector<std::uint32_t> hits(q);
    for (Elem x = 0; x < q; ++x)
        if (hits[fx[x]]++) return false;
    for (Elem u = 1; u < q; ++u) {
        std::fill(hits.begin(), hits.end(), 0);
        for (Elem x = 0; x < q; ++x)
            if (++hits[F.add(fx[x], F.mul(u, x))] > 2) return false;
        for (Elem y = 0; y < q; ++y)
            if (hits[y] == 1) return false;
    }
    return true;
}

OvalPolynomial oval_poly(OvalFamily family, std::uint64_t q, std::uint32_t h) {
    const std::uint32_t m = two_power_degree(q);
    const std::string what = oval_family_name(family) + " at q = " + std::to_string(q);
    require(family != OvalFamily::User, Errc::UnknownFamily, "user polynomials are not part of the catalog");
    require(m >= 2, Errc::FamilyUnavailableForParameters, what + ": q must be a power of two, at least 4");
    const auto exps = family_exponents(family, m, h);
    require(!exps.empty(), Errc::FamilyUnavailableForParameters, what + ": the condition on m = " +
                                                                      std::to_string(m) + " does not hold");
    FieldPtr F = field_of_order(q);
    OvalPolynomial f{F, monomial_sum(F, exps), family, family == OvalFamily::Translation ? h : 0};
    require(is_oval_polynomial(*F, f.poly), Errc::FamilyUnavailableForParameters,
            what + ": " + f.poly.to_string() + " fails the oval test");
    return f;
}

std::vector<OvalPolynomial> oval_catalog(std::uint64_t q) {
    std::vector<OvalPolynomial> out;
    const std::uint32_t m = two_power_degree(q);
    if (m < 2) return out;
    auto offer = [&](OvalFamily fam, std::uint32_t h) {
        try {
            out.push_back(oval_poly(fam, q, h));
        } catch (const Error& e) {
            if (e.code() != Errc::FamilyUnavailableForParameters) throw;
        }
    };
    for (std::uint32_t h = 1; h < m; ++h) offer(OvalFamily::Translation, h);
    for (auto fam : {OvalFamily::Segre, OvalFamily::Glynn1, OvalFamily::Glynn2, OvalFamily::Glynn3,
                     OvalFamily::Cherowitzo, OvalFamily::Payne})
        offer(fam, 0);
    return out;
}

OvalPolynomial user_oval_polynomial(const Poly& f) { return {f.field(), f, OvalFamily::User, 0}; }

namespace {

struct OvalSetup {
    const Field& F;
    Elem q;
    std::uint32_t m;
    std::vector<Elem> fx;
};

OvalSetup check_hypotheses(const OvalPolynomial& f, bool need_odd_binary, const std::string& what) {
    require(f.field != nullptr, Errc::HypothesisViolated, what + ": polynomial has no field");
    const Field& F = *f.field;
    const std::uint32_t m = F.characteristic() == 2 ? F.prime_degree() : 0;
    require(m >= 3, Errc::HypothesisViolated, what + " needs q = 2^m with m >= 3");
    if (need_odd_binary) {
        require(m % 2 == 1, Errc::HypothesisViolated, what + " needs m odd, got m = " + std::to_string(m));
        for (Elem c : f.poly.coeffs())
            require(c <= 1, Errc::HypothesisViolated, what + " needs coefficients in GF(2)");
    }
    require(is_oval_polynomial(F, f.poly), Errc::HypothesisViolated,
            what + ": " + f.poly.to_string() + " is not an oval polynomial");
    return {F, F.order(), m, value_table(F, f.poly)};
}

}  // namespace

LinearCode code_Bf_bar(const OvalPolynomial& f) {
    const auto s = check_hypotheses(f, false, "code_Bf_bar");
    std::vector<Word> rows(3);
    rows[0] = {s.fx[0]};
    rows[1] = {0};
    rows[2] = {1};
    for (Elem i = 0; i + 1 < s.q; ++i) {
        const Elem a = s.F.exp(i);
        rows[0].push_back(s.fx[a]);
        rows[1].push_back(a);
        rows[2].push_back(1);
    }
    rows[0].insert(rows[0].end(), {1, 0, 1});
    rows[1].insert(rows[1].end(), {0, 1, 1});
    rows[2].insert(rows[2].end(), {0, 0, 0});
    LinearCode C = LinearCode::from_generator(f.field, rows)
                       .with_label("Bbar_f(" + std::to_string(s.q) + "," + f.tag() + ")");
    assert_parameters(C, s.q + 3, 3, s.q, C.label());
    return C;
}

LinearCode code_Gf(const OvalPolynomial& f) {
    const auto s = check_hypotheses(f, true, "code_Gf");
    std::vector<Word> rows(3);
    for (Elem i = 0; i + 1 < s.q; ++i) {
        const Elem a = s.F.exp(i);
        rows[0].push_back(s.fx[a]);
        rows[1].push_back(a);
        rows[2].push_back(1);
    }
    rows[0].insert(rows[0].end(), {0, 1});
    rows[1].insert(rows[1].end(), {1, 0});
    rows[2].insert(rows[2].end(), {1, 1});
    LinearCode C = LinearCode::from_generator(f.field, rows)
                       .with_label("G_f(" + std::to_string(s.q) + "," + f.tag() + ")");
    assert_parameters(C, s.q + 1, 3, s.q - 2, C.label());
    return C;
}

LinearCode code_Gf_bar(const OvalPolynomial& f) {
    const auto s = check_hypotheses(f, true, "code_Gf_bar");
    std::vector<Word> rows = {{s.fx[0]}, {0}, {1}};
    for (Elem i = 0; i + 1 < s.q; ++i) {
        const Elem a = s.F.exp(i);
        rows[0].push_back(s.fx[a]);
        rows[1].push_back(a);
        rows[2].push_back(1);
    }
    rows[0].insert(rows[0].end(), {0, 1});
    rows[1].insert(rows[1].end(), {1, 0});
    rows[2].insert(rows[2].end(), {1, 1});
    LinearCode C = LinearCode::from_generator(f.field, rows)
                       .with_label("Gbar_f(" + std::to_string(s.q) + "," + f.tag() + ")");
    assert_parameters(C, s.q + 2, 3, s.q - 1, C.label());
    return C;
}

}  // namespace lrc
