#include "lrc/poly.hpp"

#include <algorithm>

namespace lrc {

namespace {

void check_same(const Poly& a, const Poly& b) {
    require(a.field()->same_as(*b.field()), Errc::FieldMismatch,
            "polynomials over " + a.field()->name() + " and " + b.field()->name());
}

}  // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
    require(field_ != nullptr, Errc::BadParameters, "polynomial without a field");
}

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    require(field_ != nullptr, Errc::BadParameters, "polynomial without a field");
    for (Elem c : c_)
        require(c < field_->order(), Errc::BadParameters,
                std::to_string(c) + " is not an element of " + field_->name());
    trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::x_pow_minus_one(FieldPtr field, std::size_t n) {
    std::vector<Elem> v(n + 1, 0);
    v[0] = field->neg(1);
    v[n] = field->add(v[n], 1);
    return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scaled(field_->inv(c_.back()));
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Elem> d;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        // i * c_i, with i taken in the prime field
        Elem k = static_cast<Elem>(i % field_->characteristic());
        Elem term = 0;
        for (Elem t = 0; t < k; ++t) term = field_->add(term, c_[i]);
        d.push_back(term);
    }
    return Poly(field_, std::move(d));
}

Poly Poly::scaled(Elem s) const {
    std::vector<Elem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], s);
    return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    check_same(a, b);
    const Field& F = *a.field_;
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    check_same(a, b);
    const Field& F = *a.field_;
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const Field& F = *a.field_;
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.field_, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) { return a.field_->same_as(*b.field_) && a.c_ == b.c_; }

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    check_same(a, b);
    require(!b.is_zero(), Errc::DivisionByZeroPolynomial, "division by the zero polynomial");
    const Field& F = *a.field();
    if (a.degree() < b.degree()) return {Poly(a.field()), a};
    std::vector<Elem> r = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    const Elem lead_inv = F.inv(d.back());
    std::vector<Elem> quot(r.size() - db, 0);
    for (std::size_t i = r.size(); i-- > db;) {
        Elem t = F.mul(r[i], lead_inv);
        if (!t) continue;
        quot[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(t, d[j]));
    }
    r.resize(db);
    return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(r))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_gcd(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    return poly_divmod(a * b, poly_gcd(a, b)).first.monic();
}

Poly poly_lcm(const std::vector<Poly>& fs) {
    require(!fs.empty(), Errc::BadParameters, "lcm of an empty list needs a field");
    Poly acc = Poly::constant(fs.front().field(), 1);
    for (const auto& f : fs) acc = poly_lcm(acc, f);
    return acc;
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    check_same(base, m);
    Poly result = poly_mod(Poly::constant(base.field(), 1), m);
    Poly b = poly_mod(base, m);
    while (e) {
        if (e & 1) result = poly_mod(result * b, m);
        e >>= 1;
        if (e) b = poly_mod(b * b, m);
    }
    return result;
}

bool is_irreducible(const Poly& f) {
    const int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const Poly g = f.monic();
    const FieldPtr& F = f.field();
    const std::uint64_t Q = F->order();
    const Poly x(F, {0, 1});
    // frob[i] = x^(Q^i) mod g
    std::vector<Poly> frob{x};
    for (int i = 1; i <= n; ++i) frob.push_back(poly_powmod(frob.back(), Q, g));
    if (!(frob[n] == x)) return false;
    for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
        Poly h = frob[n / r] - x;
        if (poly_gcd(h, g).degree() != 0) return false;
    }
    return true;
}

}  // namespace lrc
