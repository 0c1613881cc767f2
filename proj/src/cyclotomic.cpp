#include "lrc/cyclotomic.hpp"

#include <algorithm>
#include <set>

namespace lrc {

std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t s, std::uint64_t n, std::uint64_t q) {
    require(n >= 1, Errc::BadParameters, "coset modulus must be positive");
    require(gcd_u64(n, q) == 1, Errc::GcdNotOne,
            "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
    std::set<std::uint64_t> out;
    std::uint64_t x = s % n;
    while (out.insert(x).second) x = x * (q % n) % n;
    return {out.begin(), out.end()};
}

std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t n, std::uint64_t q) {
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        auto c = cyclotomic_coset(s, n, q);
        for (auto i : c) seen[i] = true;
        out.push_back(std::move(c));
    }
    return out;
}

FieldPtr splitting_field(const FieldPtr& base, std::uint64_t n) {
    return extension(base, multiplicative_order_mod(base->order(), n));
}

Elem primitive_root_of_unity(const Field& ext, std::uint64_t n) {
    const std::uint64_t order = ext.order() - 1;
    require(n >= 1 && order % n == 0, Errc::NotRootOfUnity,
            ext.name() + " has no primitive " + std::to_string(n) + "-th root of unity");
    return ext.exp(order / n);
}

bool is_embedded_subfield(const Field& ext, const Field& sub) {
    for (const Field* f = &ext; f; f = f->base().get())
        if (f->same_as(sub)) return true;
    return false;
}

Poly project_to_subfield(const Poly& f, const FieldPtr& sub) {
    require(is_embedded_subfield(*f.field(), *sub), Errc::FieldMismatch,
            sub->name() + " is not a subfield of " + f.field()->name());
    for (Elem c : f.coeffs())
        require(c < sub->order(), Errc::CoefficientNotInBase,
                "coefficient " + std::to_string(c) + " lies outside " + sub->name());
    return Poly(sub, f.coeffs());
}

Poly minimal_polynomial(const FieldElement& beta, std::uint64_t s, std::uint64_t n,
                        const FieldPtr& base) {
    const FieldPtr& E = beta.field();
    require(is_embedded_subfield(*E, *base), Errc::FieldMismatch,
            base->name() + " is not a subfield of " + E->name());
    require(!beta.is_zero() && E->multiplicative_order(beta.value()) == n, Errc::NotRootOfUnity,
            "element is not a primitive " + std::to_string(n) + "-th root of unity");
    Poly m = Poly::constant(E, 1);
    for (auto i : cyclotomic_coset(s, n, base->order())) {
        Elem root = E->pow(beta.value(), static_cast<std::int64_t>(i));
        m = m * Poly(E, {E->neg(root), 1});
    }
    return project_to_subfield(m, base);
}

}  // namespace lrc
