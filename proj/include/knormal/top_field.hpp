#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "knormal/base_field.hpp"
#include "knormal/bigint.hpp"
#include "knormal/field_element.hpp"
#include "knormal/polyring.hpp"

namespace knormal {

/// The working extension F_{q^n} = F_q[z]/(h). Elements are top-level
/// FieldElements holding n base-field codes.
class TopField {
   public:
    using Element = FieldElement;

    /// modulus: base-field codes lowest-first, monic of degree n >= 1.
    /// Throws reducible_modulus, non_monic_input.
    static std::shared_ptr<const TopField> make(BaseFieldPtr base, std::vector<BaseField::Element> modulus);

    const BaseFieldPtr& base() const noexcept { return base_; }
    unsigned n() const noexcept { return n_; }
    std::uint32_t p() const noexcept { return base_->p(); }
    std::uint32_t q() const noexcept { return base_->q(); }
    const BasePoly& modulus() const noexcept { return modulus_; }
    /// q^n
    const BigInt& cardinality() const noexcept { return cardinality_; }

    Element zero() const { return {Level::top, std::vector<std::uint32_t>(n_, 0)}; }
    Element one() const { return embed(1); }
    Element embed(BaseField::Element c) const;
    bool is_zero(const Element& a) const;
    /// Throws level_mismatch unless a is a well-formed element of this field.
    void check(const Element& a) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    Element pow(const Element& a, const BigInt& exp) const;
    /// a^(q^i)
    Element frobenius(const Element& a, std::uint64_t i = 1) const;

    /// Element whose base-q digits (coefficient of z^0 least significant) spell index.
    Element element_at(std::uint64_t index) const;
    std::uint64_t index_of(const Element& a) const;

    friend bool operator==(const TopField& a, const TopField& b) noexcept {
        return *a.base_ == *b.base_ && a.modulus_.coeffs() == b.modulus_.coeffs();
    }

   private:
    TopField(BaseFieldPtr base, BasePoly modulus);
    BasePoly as_poly(const Element& a) const;
    Element from_poly(const BasePoly& f) const;

    BaseFieldPtr base_;
    BasePoly modulus_;
    unsigned n_;
    BigInt cardinality_;
    // F_{2^n}, n <= 63: elements packed into one word, x^n = packed_low_
    bool packed_ = false;
    std::uint64_t packed_low_ = 0;
};

using TopFieldPtr = std::shared_ptr<const TopField>;
using TopPoly = Poly<TopField>;

}  // namespace knormal
