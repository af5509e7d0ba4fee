#pragma once

// Bit-packed polynomials over F_2. Bit i of word i/64 is the coefficient of x^i.
// Used as the fast path for factoring over F_2 and for F_{2^n} multiplication.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace knormal::gf2x {

/// Carry-less 64x64 -> 128 bit product.
unsigned __int128 clmul64(std::uint64_t a, std::uint64_t b) noexcept;

/// a*b mod (x^n + low) with 1 <= n <= 63 and a, b already reduced.
std::uint64_t mulmod_word(std::uint64_t a, std::uint64_t b, std::uint64_t low, unsigned n) noexcept;

class Gf2Poly {
   public:
    Gf2Poly() = default;
    explicit Gf2Poly(std::vector<std::uint64_t> words);

    static Gf2Poly one() { return Gf2Poly({1}); }
    static Gf2Poly x() { return Gf2Poly({2}); }
    static Gf2Poly monomial(std::size_t deg);
    static Gf2Poly random(std::size_t max_deg_exclusive, std::mt19937_64& rng);

    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
    std::optional<std::size_t> degree() const noexcept;
    bool bit(std::size_t i) const noexcept;
    void flip(std::size_t i);
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    Gf2Poly& operator^=(const Gf2Poly& rhs);
    friend Gf2Poly operator^(Gf2Poly a, const Gf2Poly& b) { return a ^= b; }
    friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a ^= b; }
    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;
    friend std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b);

   private:
    void trim();
    std::vector<std::uint64_t> words_;
};

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly sqr(const Gf2Poly& a);
std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly derivative(const Gf2Poly& a);
/// Square root of a polynomial with only even-degree terms.
Gf2Poly sqrt_even(const Gf2Poly& a);

bool is_irreducible(const Gf2Poly& f);

/// Full factorization of a nonzero polynomial: (irreducible, multiplicity), sorted.
std::vector<std::pair<Gf2Poly, unsigned>> factor(const Gf2Poly& f, std::uint64_t seed);

}  // namespace knormal::gf2x
