#include "lrc/gf.hpp"

#include <map>
#include <mutex>

#include "lrc/poly.hpp"

namespace lrc {

// ---- number theory --------------------------------------------------------

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint32_t multiplicative_order_mod(std::uint64_t q, std::uint64_t n) {
    require(n >= 1, Errc::BadParameters, "modulus must be positive");
    require(gcd_u64(q, n) == 1, Errc::GcdNotOne,
            "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
    if (n == 1) return 1;
    std::uint64_t x = q % n;
    std::uint32_t m = 1;
    while (x != 1) {
        x = x * q % n;
        ++m;
    }
    return m;
}

// ---- registry ---------------------------------------------------------------

namespace {

std::recursive_mutex& registry_mutex() {
    static std::recursive_mutex mu;
    return mu;
}

std::map<std::string, FieldPtr>& registry() {
    static std::map<std::string, FieldPtr> fields;
    return fields;
}

std::uint64_t checked_power(std::uint64_t base, std::uint32_t e) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        v *= base;
        if (v > Field::kMaxOrder) return Field::kMaxOrder + 1;
    }
    return v;
}

// Coefficient vector of the integer `enc` read as `len` base-`radix` digits.
std::vector<Elem> digits(std::uint64_t enc, std::uint64_t radix, std::size_t len) {
    std::vector<Elem> d(len);
    for (std::size_t i = 0; i < len; ++i) {
        d[i] = static_cast<Elem>(enc % radix);
        enc /= radix;
    }
    return d;
}

}  // namespace

// ---- Field ------------------------------------------------------------------

std::string Field::name() const {
    std::string s = "GF(" + std::to_string(q_) + ")";
    if (tower_) s += "/" + base_->name();
    return s;
}

bool Field::in_base(Elem a) const {
    if (!base_) return a < q_;
    return a < base_->order();
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    Elem r = 0, place = 1;
    while (a || b) {
        r += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    if (!neg_table_.empty()) return neg_table_[a];
    Elem r = 0, place = 1;
    while (a) {
        r += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return r;
}

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    if (m_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    return slow_mul(a, b);
}

Elem Field::slow_mul(Elem a, Elem b) const {
    const Field& B = *base_;
    const std::uint64_t radix = B.order();
    const std::size_t e = degree_;
    auto da = digits(a, radix, e), db = digits(b, radix, e);
    std::vector<Elem> c(2 * e - 1, 0);
    for (std::size_t i = 0; i < e; ++i) {
        if (!da[i]) continue;
        for (std::size_t j = 0; j < e; ++j)
            if (db[j]) c[i + j] = B.add(c[i + j], B.mul(da[i], db[j]));
    }
    for (std::size_t d = c.size(); d-- > e;) {
        Elem t = c[d];
        if (!t) continue;
        for (std::size_t j = 0; j < e; ++j)
            if (modulus_[j]) c[d - e + j] = B.sub(c[d - e + j], B.mul(t, modulus_[j]));
        c[d] = 0;
    }
    Elem r = 0;
    for (std::size_t i = e; i-- > 0;) r = static_cast<Elem>(r * radix + c[i]);
    return r;
}

Elem Field::slow_pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Elem Field::pow(Elem a, std::int64_t e) const {
    require(a < q_, Errc::FieldMismatch, "element " + std::to_string(a) + " not in " + name());
    if (a == 0) {
        if (e == 0) return 1;
        require(e > 0, Errc::DivisionByZero, "0 raised to a negative power");
        return 0;
    }
    const std::int64_t order = q_ - 1;
    std::int64_t r = e % order;
    if (r < 0) r += order;
    if (!log_.empty())
        return exp_[static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r) % order];
    return slow_pow(a, static_cast<std::uint64_t>(r));
}

Elem Field::inv(Elem a) const {
    require(a != 0, Errc::DivisionByZero, "inverse of zero");
    if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return slow_pow(a, q_ - 2);
}

std::uint64_t Field::multiplicative_order(Elem a) const {
    require(a != 0, Errc::DivisionByZero, "order of zero");
    std::uint64_t n = q_ - 1;
    if (!log_.empty()) return n / gcd_u64(log_[a], n);
    for (auto r : prime_factors(q_ - 1))
        while (n % r == 0 && slow_pow(a, n / r) == 1) n /= r;
    return n;
}

std::uint32_t Field::log(Elem a) const {
    require(a != 0, Errc::DivisionByZero, "log of zero");
    if (!log_.empty()) return log_[a];
    Elem x = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        if (x == a) return i;
        x = mul(x, generator_);
    }
    fail(Errc::Internal, "generator does not reach element " + std::to_string(a));
}

void Field::build_tables() {
    if (p_ != 2 && m_ > 1 && q_ <= 1024) {
        add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b) {
                Elem r = 0, place = 1, x = a, y = b;
                while (x || y) {
                    r += ((x % p_ + y % p_) % p_) * place;
                    x /= p_;
                    y /= p_;
                    place *= p_;
                }
                add_table_[static_cast<std::size_t>(a) * q_ + b] = r;
            }
    }
    if (p_ != 2 && m_ > 1 && q_ <= kTableLimit) {
        std::vector<Elem> negs(q_);
        for (Elem a = 0; a < q_; ++a) negs[a] = neg(a);
        neg_table_ = std::move(negs);
    }
    if (q_ > kTableLimit) return;
    std::vector<Elem> ex(2 * static_cast<std::size_t>(q_ - 1));
    std::vector<std::uint32_t> lg(q_, 0);
    std::vector<bool> seen(q_, false);
    Elem x = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        if (seen[x]) fail(Errc::Internal, name() + ": generator is not primitive");
        seen[x] = true;
        ex[i] = x;
        lg[x] = i;
        x = mul(x, generator_);
    }
    if (x != 1) fail(Errc::Internal, name() + ": generator is not primitive");
    for (std::uint32_t i = 0; i + 1 < q_; ++i) ex[i + q_ - 1] = ex[i];
    exp_ = std::move(ex);
    log_ = std::move(lg);
}

// ---- factories ----------------------------------------------------------------

FieldPtr make_prime_field(std::uint32_t p) {
    require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
    require(p <= Field::kMaxOrder, Errc::FieldTooLarge, "p exceeds the field-size cap");
    std::lock_guard lock(registry_mutex());
    std::string key = "GF(" + std::to_string(p) + ")";
    if (auto it = registry().find(key); it != registry().end()) return it->second;

    std::shared_ptr<Field> f(new Field());
    f->p_ = p;
    f->m_ = 1;
    f->q_ = p;
    f->degree_ = 1;
    f->key_ = key;
    // Modulus x - c with c primitive; scan constant terms (p - c) mod p upward.
    const auto factors = prime_factors(p - 1);
    for (std::uint32_t c0 = 0; c0 < p; ++c0) {
        Elem c = (p - c0) % p;
        if (c == 0) continue;
        bool primitive = true;
        for (auto r : factors)
            if (f->slow_pow(c, (p - 1) / r) == 1) primitive = false;
        if (p == 2 || primitive) {
            f->generator_ = c;
            f->modulus_ = {c0, 1};
            break;
        }
    }
    f->build_tables();
    registry()[key] = f;
    return f;
}

FieldPtr field_new(std::uint32_t p, std::uint32_t m) {
    require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
    require(m >= 1, Errc::BadParameters, "extension degree must be at least 1");
    const std::uint64_t q = checked_power(p, m);
    require(q <= Field::kMaxOrder, Errc::FieldTooLarge,
            std::to_string(p) + "^" + std::to_string(m) + " exceeds the field-size cap 2^20");
    if (m == 1) return make_prime_field(p);

    std::lock_guard lock(registry_mutex());
    std::string key = "GF(" + std::to_string(p) + "^" + std::to_string(m) + ")";
    if (auto it = registry().find(key); it != registry().end()) return it->second;

    FieldPtr P = make_prime_field(p);
    Poly x(P, {0, 1});
    const auto factors = prime_factors(q - 1);
    std::vector<Elem> chosen;
    for (std::uint64_t enc = 1; enc < q && chosen.empty(); ++enc) {
        auto c = digits(enc, p, m);
        if (c[0] == 0) continue;
        c.push_back(1);
        Poly f(P, c);
        if (!is_irreducible(f)) continue;
        bool primitive = true;
        for (auto r : factors)
            if (poly_powmod(x, (q - 1) / r, f) == Poly::constant(P, 1)) {
                primitive = false;
                break;
            }
        if (primitive) chosen = c;
    }
    require(!chosen.empty(), Errc::Internal, "no primitive polynomial found for " + key);

    std::shared_ptr<Field> F(new Field());
    F->p_ = p;
    F->m_ = m;
    F->q_ = static_cast<std::uint32_t>(q);
    F->degree_ = m;
    F->base_ = P;
    F->modulus_ = chosen;
    F->generator_ = p;  // the residue of x
    F->key_ = key;
    F->build_tables();
    registry()[key] = F;
    return F;
}

FieldPtr field_of_order(std::uint64_t q) {
    require(q >= 2, Errc::NotPrime, "field order must be a prime power");
    auto ps = prime_factors(q);
    require(ps.size() == 1, Errc::NotPrime, std::to_string(q) + " is not a prime power");
    std::uint32_t m = 0;
    for (std::uint64_t v = q; v > 1; v /= ps[0]) ++m;
    return field_new(static_cast<std::uint32_t>(ps[0]), m);
}

FieldPtr extension(const FieldPtr& base, std::uint32_t degree) {
    require(base != nullptr, Errc::BadParameters, "null base field");
    require(degree >= 1, Errc::BadParameters, "extension degree must be at least 1");
    if (degree == 1) return base;
    const std::uint64_t Q = base->order();
    const std::uint64_t q = checked_power(Q, degree);
    require(q <= Field::kMaxOrder, Errc::FieldTooLarge,
            base->name() + " degree-" + std::to_string(degree) + " extension exceeds the cap 2^20");

    std::lock_guard lock(registry_mutex());
    std::string key = base->key() + "[" + std::to_string(degree) + "]";
    if (auto it = registry().find(key); it != registry().end()) return it->second;

    std::vector<Elem> chosen;
    const std::uint64_t candidates = checked_power(Q, degree);
    for (std::uint64_t enc = 1; enc < candidates && chosen.empty(); ++enc) {
        auto c = digits(enc, Q, degree);
        if (c[0] == 0) continue;
        c.push_back(1);
        if (is_irreducible(Poly(base, c))) chosen = c;
    }
    require(!chosen.empty(), Errc::Internal, "no irreducible polynomial found for " + key);

    std::shared_ptr<Field> F(new Field());
    F->p_ = base->characteristic();
    F->m_ = base->prime_degree() * degree;
    F->q_ = static_cast<std::uint32_t>(q);
    F->degree_ = degree;
    F->tower_ = true;
    F->base_ = base;
    F->modulus_ = chosen;
    F->key_ = key;

    const auto factors = prime_factors(q - 1);
    F->generator_ = 0;
    for (Elem g = 1; g < q; ++g) {
        bool primitive = true;
        for (auto r : factors)
            if (F->slow_pow(g, (q - 1) / r) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            F->generator_ = g;
            break;
        }
    }
    require(F->generator_ != 0, Errc::Internal, "no primitive element in " + key);
    F->build_tables();
    registry()[key] = F;
    return F;
}

// ---- FieldElement -----------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    require(field_ != nullptr, Errc::BadParameters, "element without a field");
    require(value_ < field_->order(), Errc::BadParameters,
            std::to_string(value_) + " is not an element of " + field_->name());
}

namespace {
const FieldPtr& common(const FieldElement& a, const FieldElement& b) {
    require(a.field()->same_as(*b.field()), Errc::FieldMismatch,
            a.field()->name() + " vs " + b.field()->name());
    return a.field();
}
}  // namespace

FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const auto& f = common(a, b);
    return {f, f->add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const auto& f = common(a, b);
    return {f, f->sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const auto& f = common(a, b);
    return {f, f->mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    const auto& f = common(a, b);
    return {f, f->div(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_->neg(a.value_)}; }
bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_->same_as(*b.field_) && a.value_ == b.value_;
}

// ---- traces -----------------------------------------------------------------

Elem trace_to_base(const Field& field, Elem x) {
    require(field.is_tower(), Errc::NotTowerField, field.name() + " is not a tower field");
    const std::int64_t Q = field.base()->order();
    Elem sum = 0, y = x;
    for (std::uint32_t i = 0; i < field.degree(); ++i) {
        sum = field.add(sum, y);
        y = field.pow(y, Q);
    }
    require(field.in_base(sum), Errc::Internal, "trace left the base field");
    return sum;
}

FieldElement trace_to_base(const FieldElement& x) {
    Elem t = trace_to_base(*x.field(), x.value());
    return {x.field()->base(), t};
}

Elem absolute_trace(const Field& field, Elem x) {
    Elem sum = 0, y = x;
    for (std::uint32_t i = 0; i < field.prime_degree(); ++i) {
        sum = field.add(sum, y);
        y = field.pow(y, field.characteristic());
    }
    require(sum < field.characteristic(), Errc::Internal, "absolute trace left GF(p)");
    return sum;
}

}  // namespace lrc
