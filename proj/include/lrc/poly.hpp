#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

/// Univariate polynomial over a finite field, coefficients stored low-to-high with
/// no trailing zeros (the zero polynomial has no coefficients).
class Poly {
public:
    explicit Poly(FieldPtr field);
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly constant(FieldPtr field, Elem c);
    static Poly monomial(FieldPtr field, Elem c, std::size_t degree);
    /// x^n - 1.
    static Poly x_pow_minus_one(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Poly monic() const;

    Elem eval(Elem x) const;
    Poly derivative() const;
    Poly scaled(Elem s) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    /// Human-readable form with integer-encoded coefficients, e.g. "x^2 + 2x + 1".
    std::string to_string() const;

private:
    void trim();

    FieldPtr field_;
    std::vector<Elem> c_;
};

/// Quotient and remainder; DivisionByZeroPolynomial when b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly poly_gcd(const Poly& a, const Poly& b);
/// Monic lcm; lcm of an empty list is 1.
Poly poly_lcm(const Poly& a, const Poly& b);
Poly poly_lcm(const std::vector<Poly>& fs);
/// base^e mod m.
Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& m);
/// Rabin's test over the coefficient field.
bool is_irreducible(const Poly& f);

}  // namespace lrc
