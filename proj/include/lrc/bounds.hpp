#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

/// n - k - ceil(k/r) + 2. BadLocality for r < 1.
std::int64_t singleton_like(std::size_t n, std::size_t k, std::size_t r);

enum class DOptimality { DOptimal, AlmostDOptimal, Neither };
const char* d_optimality_name(DOptimality v);
DOptimality classify_d_optimality(std::size_t n, std::size_t k, std::size_t d, std::size_t r);

struct KOptBound {
    std::uint64_t value = 0;
    /// "singleton", "sphere_packing", "plotkin" or "griesmer"; the first listed wins ties.
    std::string bound;
};

/// Upper bound on the dimension of any [n, k, d] code over GF(q): the least of the
/// Singleton, sphere-packing, Plotkin (when qd > (q-1)n) and Griesmer bounds.
/// BadParameters unless 1 <= d <= n.
KOptBound k_opt_upper(std::size_t n, std::size_t d, std::uint64_t q);

struct CmTerm {
    std::size_t t = 0;
    /// n - t(r+1).
    std::size_t n_prime = 0;
    /// Upper bound on k_opt(n', d); 0 when n' < d.
    std::uint64_t k_opt = 0;
    /// Name of the bound that gave k_opt, or "empty" when n' < d.
    std::string bound;
    /// t r + k_opt.
    std::uint64_t value = 0;
};

struct CmBound {
    std::vector<CmTerm> terms;
    /// min(n, min over terms).
    std::uint64_t rhs = 0;
};

/// min over t of t r + k_opt(n - t(r+1), d), for 1 <= t <= floor((n-d)/(r+1)) + 1 with
/// t(r+1) <= n, capped by n. BadLocality for r < 1.
CmBound cm_bound_upper(std::size_t n, std::size_t d, std::uint64_t q, std::size_t r);

enum class KOptimality { Certified, Inconclusive };
const char* k_optimality_name(KOptimality v);

struct BoundsReport {
    std::size_t n = 0, k = 0, d = 0, r = 0;
    std::uint64_t q = 0;
    std::int64_t singleton_like_rhs = 0;
    bool d_optimal = false;
    bool almost_d_optimal = false;
    std::uint64_t cm_rhs_ub = 0;
    /// k equals the CM upper bound; a smaller k is only ever "inconclusive".
    bool k_optimal_certified = false;
    std::vector<CmTerm> k_opt_components;
};

BoundsReport evaluate_bounds(std::size_t n, std::size_t k, std::size_t d, std::uint64_t q, std::size_t r);

/// The (n,k,d,q;r) tuple.
std::string llrc_tuple(std::size_t n, std::size_t k, std::size_t d, std::uint64_t q, std::size_t r);

}  // namespace lrc
