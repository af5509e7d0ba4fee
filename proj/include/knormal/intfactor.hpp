#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "knormal/bigint.hpp"
#include "knormal/error.hpp"

namespace knormal {

struct IntFactorization {
    BigInt value = 1;
    /// (prime, exponent), primes ascending.
    std::vector<std::pair<BigInt, unsigned>> factors;

    BigInt product() const;
    std::size_t omega() const noexcept { return factors.size(); }
};

struct IntFactorOptions {
    std::uint64_t rho_budget = std::uint64_t{1} << 26;
    std::uint64_t seed = kDefaultSeed;
};

/// Deterministic Miller-Rabin (exact below 2^64).
bool is_prime_u64(std::uint64_t n);
/// Exact below 2^64; above, Miller-Rabin with the first 24 primes as bases.
bool is_probable_prime(const BigInt& n);

/// Complete factorization: hint primes first, trial division to 10^6, then
/// Brent's rho. Throws IncompleteFactorization when rho exhausts its budget,
/// composite_hint for a composite hint.
IntFactorization factor_int(const BigInt& t, std::span<const BigInt> hints = {}, const IntFactorOptions& options = {});

BigInt euler_phi_int(const IntFactorization& f);
BigInt w_int(const IntFactorization& f);

/// Known prime factors of 2^n - 1, keyed by n.
using HintTable = std::map<unsigned, std::vector<BigInt>>;

/// Lines `n: p1 p2 ...`, `#` starts a comment, blank lines ignored. Every hint
/// is checked to divide 2^n - 1 and to be prime.
HintTable load_factor_hints(std::istream& in);
HintTable load_factor_hints(const std::filesystem::path& path);

/// Factors q^n - 1; uses hints[n] when q == 2.
IntFactorization factor_group_order(const BigInt& q, unsigned n, const HintTable* hints = nullptr,
                                    const IntFactorOptions& options = {});

}  // namespace knormal
