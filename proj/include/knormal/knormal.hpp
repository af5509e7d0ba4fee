#pragma once

// k-normal elements: g_alpha, normality degree, primitivity, the divisor-sum
// count N_k and its brute-force oracle, and search.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "knormal/field_tower.hpp"
#include "knormal/intfactor.hpp"
#include "knormal/polyring.hpp"
#include "knormal/top_field.hpp"

namespace knormal {

/// g_alpha(x) = sum_{i<n} alpha^(q^i) x^(n-1-i), over F_{q^n}.
TopPoly g_alpha(const FieldTower& tower, const FieldElement& alpha);

/// x^n - 1 with coefficients embedded in F_{q^n}.
TopPoly lifted_x_pow_minus_one(const FieldTower& tower);

struct NormalityDegree {
    unsigned k = 0;
    /// gcd(g_alpha, x^n - 1), monic, over F_{q^n}.
    TopPoly certificate;
};

/// alpha = 0 gives k = n via gcd(0, x^n - 1) = x^n - 1.
NormalityDegree normality_degree(const FieldTower& tower, const FieldElement& alpha);

/// Least-degree monic m over F_q with sum m_i alpha^(q^i) = 0, found by
/// Gaussian elimination on the Frobenius orbit. deg m = n - k.
BasePoly frobenius_order_poly(const FieldTower& tower, const FieldElement& alpha);

/// alpha != 0 and alpha^((q^n-1)/r) != 1 for every prime r | q^n - 1.
bool is_primitive(const FieldTower& tower, const FieldElement& alpha, const IntFactorization& group_order);

struct NormalityProfile {
    FieldElement alpha;
    TopPoly g_alpha;
    TopPoly gcd_with_cyclo;
    unsigned k = 0;
    bool is_primitive = false;
};

NormalityProfile normality_profile(const FieldTower& tower, const FieldElement& alpha,
                                   const IntFactorization& group_order);

struct CountResult {
    std::uint32_t q = 0;
    unsigned n = 0;
    unsigned k = 0;
    BigInt formula_count;
    std::optional<BigInt> brute_count;
    /// (h, Phi_q(h)) for each monic h | x^n - 1 of degree n - k.
    std::vector<std::pair<BasePoly, BigInt>> divisors_used;
};

/// N_k = sum of Phi_q(h) over monic h | x^n - 1 with deg h = n - k, divisors over F_q.
CountResult count_knormal_formula(const BaseFieldPtr& base, unsigned n, unsigned k,
                                  const FactorOptions& options = {});

/// hist[k] = number of elements (zero included) with normality degree k, for k = 0..n.
std::vector<std::uint64_t> normality_histogram(const FieldTower& tower, std::uint64_t cutoff = kDefaultCutoff);

BigInt count_knormal_bruteforce(const FieldTower& tower, unsigned k, std::uint64_t cutoff = kDefaultCutoff);

enum class SearchMode { first, all, count };

struct SearchQuery {
    unsigned k = 1;
    bool require_primitive = true;
    SearchMode mode = SearchMode::first;
    std::uint64_t cutoff = kDefaultCutoff;
};

struct SearchResult {
    /// In enumeration order; empty in count mode.
    std::vector<FieldElement> elements;
    std::uint64_t count = 0;
};

/// Scans F_{q^n} in enumeration order. Zero is never returned. When
/// primitivity is required and group_order is null, q^n - 1 is factored here.
SearchResult search_knormal(const FieldTower& tower, const SearchQuery& query,
                            const IntFactorization* group_order = nullptr);

SearchResult search_primitive_knormal(const FieldTower& tower, unsigned k, SearchMode mode,
                                      const IntFactorization& group_order, std::uint64_t cutoff = kDefaultCutoff);

}  // namespace knormal
