#pragma once

// Polynomials over the base field F_q: factorization, irreducibility,
// Euler phi and square-free divisor counts, divisor enumeration.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knormal/base_field.hpp"
#include "knormal/bigint.hpp"
#include "knormal/poly.hpp"

namespace knormal {

using BasePoly = Poly<BaseField>;

/// unit * prod factor^mult. Factors are monic irreducible, pairwise distinct,
/// sorted by degree and then by coefficient code from the top down.
struct Factorization {
    BaseField::Element unit = 1;
    std::vector<std::pair<BasePoly, unsigned>> factors;

    BasePoly expand(const BaseFieldPtr& field) const;
    std::size_t distinct() const noexcept { return factors.size(); }
    std::size_t count_of_degree(std::size_t d) const;
};

struct FactorOptions {
    std::uint64_t seed = kDefaultSeed;
    /// Route F_2 inputs through the bit-packed kernel.
    bool packed_gf2 = true;
};

/// Strict weak order used for every deterministic polynomial listing.
bool poly_less(const BasePoly& a, const BasePoly& b);

Factorization factor(const BasePoly& f, const FactorOptions& options = {});

/// Throws constant_polynomial for degree < 1.
bool is_irreducible(const BasePoly& f);

/// Smallest (by integer code sum c_i q^i) monic irreducible of the given degree.
BasePoly smallest_irreducible(const BaseFieldPtr& field, std::size_t degree);

/// Monic irreducibles of degree d counted by exhaustive enumeration.
/// Throws enumeration_too_large when q^d exceeds the cutoff.
BigInt count_irreducibles(const BaseFieldPtr& field, std::size_t d, std::uint64_t cutoff = kDefaultCutoff);

/// |(F_q[x]/<f>)^*|. Throws non_monic_input.
BigInt phi_poly(const BasePoly& f, const FactorOptions& options = {});
BigInt phi_poly(const Factorization& fac, std::uint32_t q);

/// Number of square-free monic divisors. Throws non_monic_input.
BigInt w_poly(const BasePoly& f, const FactorOptions& options = {});
BigInt w_poly(const Factorization& fac);

/// Visits each exponent tuple (e_i <= mult_i) with sum e_i * deg_i == d, in
/// lexicographic order of the tuple.
void for_each_divisor_exponents(const Factorization& fac, std::size_t d,
                                const std::function<void(std::span<const unsigned>)>& visit);

BasePoly divisor_from_exponents(const BaseFieldPtr& field, const Factorization& fac, std::span<const unsigned> exps);

/// All monic divisors of degree d, in deterministic order. Throws
/// enumeration_too_large when prod(mult_i + 1) exceeds the limit; use
/// for_each_divisor_exponents to stream instead.
std::vector<BasePoly> divisors_of_degree(const BasePoly& f, std::size_t d, std::uint64_t limit = kDefaultCutoff,
                                         const FactorOptions& options = {});

/// x^n - 1
BasePoly x_pow_minus_one(const BaseFieldPtr& field, std::size_t n);
/// T = (x^n - 1)/(x - 1) = x^{n-1} + ... + 1
BasePoly cyclotomic_cofactor(const BaseFieldPtr& field, std::size_t n);

/// Text form: coefficients lowest-first separated by commas. For e > 1 each
/// coefficient may be a bracketed digit list, e.g. "[0,1],1,[1,1]".
BasePoly parse_poly(const BaseFieldPtr& field, std::string_view text);
std::string to_string(const BasePoly& f);
/// Human readable, e.g. "x^3 + x + 1".
std::string to_pretty_string(const BasePoly& f);

}  // namespace knormal
