#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lrc/error.hpp"

namespace lrc {

/// Integer encoding of a field element. The base-p digits (base-|base| digits
/// for tower fields) are the coefficients of the polynomial-basis representation.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * A concrete finite field GF(p^m).
 *
 * Fields come in two shapes:
 *  - flat fields GF(p^m) built by field_new(), reduced modulo the smallest primitive
 *    polynomial over GF(p), so the residue of x (encoding p) generates the
 *    multiplicative group;
 *  - tower fields built by extension() over an existing field B, reduced modulo the
 *    smallest monic irreducible polynomial over B. B embeds as the elements whose
 *    encoding is below |B| (coefficient-0 inclusion).
 *
 * Fields are immutable and shared; obtain them through the factory functions, which
 * cache instances so that equal parameters give the same object.
 */
class Field {
public:
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;
    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

    std::uint32_t characteristic() const { return p_; }
    /// m with q = p^m.
    std::uint32_t prime_degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    /// Degree over base(); 1 for GF(p).
    std::uint32_t degree() const { return degree_; }
    /// The field the modulus lives over: GF(p) for flat fields, the tower base otherwise.
    /// Null for GF(p) itself.
    const FieldPtr& base() const { return base_; }
    bool is_tower() const { return tower_; }
    /// Null unless is_tower().
    FieldPtr tower_base() const { return tower_ ? base_ : nullptr; }
    /// Monic modulus, coefficients low-to-high over base() (over GF(p) for GF(p) itself).
    const std::vector<Elem>& modulus() const { return modulus_; }
    /// Stable identity string, e.g. "GF(3^2)" or "GF(3^2)[2]".
    const std::string& key() const { return key_; }
    std::string name() const;

    Elem generator() const { return generator_; }
    bool contains(Elem a) const { return a < q_; }
    /// True when a lies in the embedded tower base (or a is in GF(p) for flat fields).
    bool in_base(Elem a) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// Exponent is reduced mod q-1 for a != 0; negative exponents invert.
    Elem pow(Elem a, std::int64_t e) const;
    /// Multiplicative order of a != 0.
    std::uint64_t multiplicative_order(Elem a) const;
    /// generator()^k.
    Elem exp(std::uint64_t k) const { return pow(generator_, static_cast<std::int64_t>(k % (q_ - 1))); }
    /// Discrete log base generator(); a != 0.
    std::uint32_t log(Elem a) const;

    bool same_as(const Field& other) const { return this == &other || key_ == other.key_; }

    // Factories need access to the private constructor.
    friend FieldPtr make_prime_field(std::uint32_t p);
    friend FieldPtr field_new(std::uint32_t p, std::uint32_t m);
    friend FieldPtr extension(const FieldPtr& base, std::uint32_t degree);

private:
    Field() = default;

    Elem slow_mul(Elem a, Elem b) const;
    Elem slow_pow(Elem a, std::uint64_t e) const;
    void build_tables();

    std::uint32_t p_ = 2;
    std::uint32_t m_ = 1;
    std::uint32_t q_ = 2;
    std::uint32_t degree_ = 1;
    bool tower_ = false;
    FieldPtr base_;
    std::vector<Elem> modulus_;
    Elem generator_ = 1;
    std::string key_;

    std::vector<Elem> exp_;            // 2(q-1) entries when tabulated
    std::vector<std::uint32_t> log_;   // q entries when tabulated
    std::vector<Elem> add_table_;      // q*q entries for small odd-characteristic fields
    std::vector<Elem> neg_table_;
};

/// GF(p^m) with the smallest primitive modulus over GF(p) (encoding sum c_i p^i).
FieldPtr field_new(std::uint32_t p, std::uint32_t m);
/// field_new(p, m) for q = p^m; NotPrime if q is not a prime power.
FieldPtr field_of_order(std::uint64_t q);
/// Degree-`degree` tower over `base`; the generator is the smallest primitive element.
FieldPtr extension(const FieldPtr& base, std::uint32_t degree);
inline FieldPtr quadratic_extension(const FieldPtr& base) { return extension(base, 2); }

/// An element bound to its field; arithmetic across different fields is FieldMismatch.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem value);

    const FieldPtr& field() const { return field_; }
    Elem value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    FieldPtr field_;
    Elem value_;
};

/// Relative trace x + x^Q + ... + x^(Q^(e-1)) down to the tower base (x + x^q for
/// quadratic towers). NotTowerField otherwise.
Elem trace_to_base(const Field& field, Elem x);
FieldElement trace_to_base(const FieldElement& x);

/// Absolute trace to GF(p).
Elem absolute_trace(const Field& field, Elem x);

// Number theory helpers shared across modules.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
/// ord_n(q): smallest m >= 1 with q^m = 1 mod n. GcdNotOne if gcd(n, q) != 1.
std::uint32_t multiplicative_order_mod(std::uint64_t q, std::uint64_t n);

}  // namespace lrc
