#include "lrc/bounds.hpp"

#include "lrc/weights.hpp"

namespace lrc {

std::int64_t singleton_like(std::size_t n, std::size_t k, std::size_t r) {
    require(r >= 1, Errc::BadLocality, "locality must be at least 1");
    const auto N = static_cast<std::int64_t>(n), K = static_cast<std::int64_t>(k), R = static_cast<std::int64_t>(r);
    return N - K - (K + R - 1) / R + 2;
}

const char* d_optimality_name(DOptimality v) {
    switch (v) {
        case DOptimality::DOptimal: return "d_optimal";
        case DOptimality::AlmostDOptimal: return "almost_d_optimal";
        case DOptimality::Neither: return "neither";
    }
    return "neither";
}

DOptimality classify_d_optimality(std::size_t n, std::size_t k, std::size_t d, std::size_t r) {
    const std::int64_t rhs = singleton_like(n, k, r);
    const auto D = static_cast<std::int64_t>(d);
    if (D == rhs) return DOptimality::DOptimal;
    if (D == rhs - 1) return DOptimality::AlmostDOptimal;
    return DOptimality::Neither;
}

namespace {

// Largest k >= 0 with q^k <= x (x >= 1).
std::uint64_t floor_log(const BigInt& x, std::uint64_t q) {
    std::uint64_t k = 0;
    BigInt p = q;
    while (p <= x) {
        p *= q;
        ++k;
    }
    return k;
}

}  // namespace

KOptBound k_opt_upper(std::size_t n, std::size_t d, std::uint64_t q) {
    require(d >= 1 && d <= n, Errc::BadParameters, "k_opt_upper needs 1 <= d <= n");
    require(q >= 2, Errc::BadParameters, "q must be at least 2");
    KOptBound best{n - d + 1, "singleton"};
    auto offer = [&](std::uint64_t v, const char* name) {
        if (v < best.value) best = {v, name};
    };

    // Sphere packing: q^k V_q(n, e) <= q^n.
    const std::size_t e = (d - 1) / 2;
    BigInt ball = 0;
    for (std::size_t i = 0; i <= e; ++i)
        ball += binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(i)) * big_pow(q - 1, i);
    offer(floor_log(big_pow(q, n) / ball, q), "sphere_packing");

    // Plotkin: M <= floor(qd / (qd - (q-1)n)) when the denominator is positive.
    const BigInt qd = BigInt(q) * d, slack = BigInt(q - 1) * n;
    if (qd > slack) offer(floor_log(qd / (qd - slack), q), "plotkin");

    // Griesmer: sum_{i<k} ceil(d / q^i) <= n.
    std::uint64_t k = 0;
    BigInt used = 0, qi = 1;
    while (true) {
        const BigInt next = used + (BigInt(d) + qi - 1) / qi;
        if (next > n) break;
        used = next;
        qi *= q;
        ++k;
    }
    offer(k, "griesmer");
    return best;
}

CmBound cm_bound_upper(std::size_t n, std::size_t d, std::uint64_t q, std::size_t r) {
    require(r >= 1, Errc::BadLocality, "locality must be at least 1");
    require(d >= 1 && d <= n, Errc::BadParameters, "the CM bound needs 1 <= d <= n");
    CmBound out;
    out.rhs = n;
    const std::size_t t_max = (n - d) / (r + 1) + 1;
    for (std::size_t t = 1; t <= t_max && t * (r + 1) <= n; ++t) {
        CmTerm term;
        term.t = t;
        term.n_prime = n - t * (r + 1);
        if (term.n_prime >= d) {
            const KOptBound kb = k_opt_upper(term.n_prime, d, q);
            term.k_opt = kb.value;
            term.bound = kb.bound;
        } else {
            term.bound = "empty";
        }
        term.value = t * r + term.k_opt;
        out.rhs = std::min<std::uint64_t>(out.rhs, term.value);
        out.terms.push_back(std::move(term));
    }
    return out;
}

const char* k_optimality_name(KOptimality v) {
    return v == KOptimality::Certified ? "k_optimal_certified" : "inconclusive";
}

BoundsReport evaluate_bounds(std::size_t n, std::size_t k, std::size_t d, std::uint64_t q, std::size_t r) {
    BoundsReport b;
    b.n = n;
    b.k = k;
    b.d = d;
    b.q = q;
    b.r = r;
    b.singleton_like_rhs = singleton_like(n, k, r);
    const DOptimality dv = classify_d_optimality(n, k, d, r);
    b.d_optimal = dv == DOptimality::DOptimal;
    b.almost_d_optimal = dv == DOptimality::AlmostDOptimal;
    const CmBound cm = cm_bound_upper(n, d, q, r);
    b.cm_rhs_ub = cm.rhs;
    b.k_optimal_certified = k == cm.rhs;
    b.k_opt_components = cm.terms;
    return b;
}

std::string llrc_tuple(std::size_t n, std::size_t k, std::size_t d, std::uint64_t q, std::size_t r) {
    return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "," + std::to_string(q) +
           ";" + std::to_string(r) + ")";
}

}  // namespace lrc
