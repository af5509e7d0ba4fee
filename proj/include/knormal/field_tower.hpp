#pragma once

// The tower F_p < F_q < F_{q^n} and the operations that work on any level.

#include <cstdint>
#include <optional>
#include <ranges>
#include <string>
#include <vector>

#include "knormal/base_field.hpp"
#include "knormal/error.hpp"
#include "knormal/field_element.hpp"
#include "knormal/intfactor.hpp"
#include "knormal/top_field.hpp"

namespace knormal {

struct ModuliOverride {
    /// Monic modulus of F_q over F_p, digits lowest-first (length e + 1). Only for e >= 2.
    std::optional<std::vector<std::uint32_t>> base;
    /// Monic modulus of F_{q^n} over F_q, base-field codes lowest-first (length n + 1).
    std::optional<std::vector<std::uint32_t>> top;
};

enum class ArithOp { add, sub, mul, div };

class FieldTower {
   public:
    /// Without overrides both moduli are the smallest monic irreducibles of
    /// their degree (ordered by integer code sum c_i q^i).
    /// Throws not_prime, reducible_modulus, non_monic_input, invalid_argument.
    static FieldTower build(std::uint32_t p, unsigned e, unsigned n, const ModuliOverride& overrides = {});

    std::uint32_t p() const noexcept { return prime_->p(); }
    unsigned e() const noexcept { return base_->e(); }
    unsigned n() const noexcept { return top_->n(); }
    std::uint32_t q() const noexcept { return base_->q(); }
    const BigInt& cardinality() const noexcept { return top_->cardinality(); }

    const BaseFieldPtr& prime_field() const noexcept { return prime_; }
    const BaseFieldPtr& base_field() const noexcept { return base_; }
    const TopFieldPtr& top_field() const noexcept { return top_; }

    /// Absent when e = 1.
    std::optional<BasePoly> base_modulus() const;
    const BasePoly& top_modulus() const noexcept { return top_->modulus(); }

    FieldElement zero(Level level) const;
    FieldElement one(Level level) const;
    /// Throws level_mismatch on a malformed element.
    void check(const FieldElement& a) const;

    /// Throws level_mismatch, division_by_zero.
    FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) const;
    /// a^(q^i) for a in the top field.
    FieldElement frobenius(const FieldElement& a, std::uint64_t i) const;
    /// Constant embedding of a base-level element into the top field.
    FieldElement embed(const FieldElement& base_element) const;

   private:
    FieldTower(BaseFieldPtr prime, BaseFieldPtr base, TopFieldPtr top)
        : prime_(std::move(prime)), base_(std::move(base)), top_(std::move(top)) {}

    BaseFieldPtr prime_;
    BaseFieldPtr base_;
    TopFieldPtr top_;
};

/// Least t >= 1 with a^t = 1, for a in the top field. group_order must factor q^n - 1.
/// Throws zero_element.
BigInt multiplicative_order(const FieldTower& tower, const FieldElement& a, const IntFactorization& group_order);

/// Every element of F_{q^n} exactly once, starting from 0, in order of the
/// index sum c_i q^i. Throws enumeration_too_large when q^n > cutoff.
inline auto enumerate_elements(const FieldTower& tower, std::uint64_t cutoff = kDefaultCutoff) {
    if (tower.cardinality() > cutoff) {
        throw Error(Errc::enumeration_too_large,
                    "q^n = " + tower.cardinality().str() + " exceeds cutoff " + std::to_string(cutoff));
    }
    const auto count = static_cast<std::uint64_t>(tower.cardinality());
    return std::views::iota(std::uint64_t{0}, count) |
           std::views::transform([top = tower.top_field()](std::uint64_t i) { return top->element_at(i); });
}

}  // namespace knormal
