#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "knormal/bigint.hpp"

namespace knormal {

/// The base field F_q = F_p[y]/(g), with e = deg g. When e = 1 this is the
/// prime field F_p and there is no modulus.
///
/// Elements are integer codes 0 <= c < q: code = sum_i d_i p^i where d_i is the
/// coefficient of y^i. Code 0 is zero and code 1 is one.
class BaseField {
   public:
    using Element = std::uint32_t;

    static constexpr std::uint32_t kMaxPrime = (std::uint32_t{1} << 31) - 1;
    static constexpr std::uint32_t kMaxExtensionOrder = std::uint32_t{1} << 20;

    /// F_p. Throws not_prime.
    static std::shared_ptr<const BaseField> prime(std::uint32_t p);

    /// F_p[y]/(modulus), modulus given lowest-first over F_p and monic of degree >= 2.
    /// Throws not_prime, reducible_modulus, field_too_large.
    static std::shared_ptr<const BaseField> extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

    /// F_{p^e} with the smallest monic irreducible modulus.
    static std::shared_ptr<const BaseField> make(std::uint32_t p, unsigned e);

    /// F_q for a prime power q. Throws invalid_argument when q is not a prime power.
    static std::shared_ptr<const BaseField> for_order(std::uint64_t q);

    std::uint32_t p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return e_ == 1; }
    /// Modulus digits lowest-first (length e + 1); empty for a prime field.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1; }
    bool is_zero(Element a) const noexcept { return a == 0; }

    Element add(Element a, Element b) const noexcept;
    Element sub(Element a, Element b) const noexcept;
    Element neg(Element a) const noexcept;
    Element mul(Element a, Element b) const noexcept;
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, const BigInt& exp) const;
    /// a^p
    Element frobenius(Element a) const;
    /// Image of an integer in the prime subfield.
    Element from_int(std::int64_t v) const noexcept;

    std::vector<std::uint32_t> digits(Element a) const;
    /// Accepts up to e digits, each reduced mod p.
    Element from_digits(std::span<const std::uint32_t> digits) const;

    friend bool operator==(const BaseField& a, const BaseField& b) noexcept {
        return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
    }

   private:
    BaseField(std::uint32_t p, std::vector<std::uint32_t> modulus);
    Element slow_mul(Element a, Element b) const;
    void build_tables();

    std::uint32_t p_;
    unsigned e_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> pow_p_;       // p^i for i < e
    std::vector<std::uint32_t> exp_;         // generator^i, length 2(q-1)
    std::vector<std::uint32_t> log_;         // discrete log, log_[0] unused
    std::vector<std::uint32_t> add_table_;   // q*q table for small odd-characteristic extensions
    std::vector<std::uint32_t> neg_table_;
};

using BaseFieldPtr = std::shared_ptr<const BaseField>;


}  // namespace knormal
