#include "knormal/top_field.hpp"

#include <string>

#include "knormal/error.hpp"
#include "knormal/gf2x.hpp"

namespace knormal {

namespace {

std::uint64_t pack(const FieldElement& a) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) w |= std::uint64_t{a.coeffs[i] & 1u} << i;
    return w;
}

FieldElement unpack(std::uint64_t w, unsigned n) {
    FieldElement out{Level::top, std::vector<std::uint32_t>(n)};
    for (unsigned i = 0; i < n; ++i) out.coeffs[i] = static_cast<std::uint32_t>((w >> i) & 1);
    return out;
}

}  // namespace

TopField::TopField(BaseFieldPtr base, BasePoly modulus)
    : base_(std::move(base)),
      modulus_(std::move(modulus)),
      n_(static_cast<unsigned>(modulus_.size() - 1)),
      cardinality_(ipow(BigInt(base_->q()), n_)) {
    if (base_->p() == 2 && base_->is_prime_field() && n_ <= 63) {
        packed_ = true;
        for (unsigned i = 0; i < n_; ++i) packed_low_ |= std::uint64_t{modulus_.coeffs()[i]} << i;
    }
}

std::shared_ptr<const TopField> TopField::make(BaseFieldPtr base, std::vector<BaseField::Element> modulus) {
    for (auto c : modulus)
        if (c >= base->q()) throw Error(Errc::invalid_argument, "modulus coefficient out of range");
    BasePoly h(base, std::move(modulus));
    if (h.size() < 2) throw Error(Errc::invalid_argument, "top modulus must have degree >= 1");
    if (!h.is_monic()) throw Error(Errc::non_monic_input, "top modulus " + to_string(h) + " is not monic");
    if (!is_irreducible(h)) throw Error(Errc::reducible_modulus, "top modulus " + to_string(h) + " is reducible");
    return std::shared_ptr<const TopField>(new TopField(std::move(base), std::move(h)));
}

TopField::Element TopField::embed(BaseField::Element c) const {
    Element out = zero();
    out.coeffs[0] = c;
    return out;
}

bool TopField::is_zero(const Element& a) const {
    for (auto c : a.coeffs)
        if (c != 0) return false;
    return true;
}

void TopField::check(const Element& a) const {
    if (a.level != Level::top || a.coeffs.size() != n_)
        throw Error(Errc::level_mismatch, "expected an element of F_{q^" + std::to_string(n_) + "}");
    for (auto c : a.coeffs)
        if (c >= base_->q()) throw Error(Errc::invalid_argument, "coefficient out of range");
}

TopField::Element TopField::add(const Element& a, const Element& b) const {
    Element out{Level::top, std::vector<std::uint32_t>(n_)};
    for (unsigned i = 0; i < n_; ++i) out.coeffs[i] = base_->add(a.coeffs[i], b.coeffs[i]);
    return out;
}

TopField::Element TopField::sub(const Element& a, const Element& b) const {
    Element out{Level::top, std::vector<std::uint32_t>(n_)};
    for (unsigned i = 0; i < n_; ++i) out.coeffs[i] = base_->sub(a.coeffs[i], b.coeffs[i]);
    return out;
}

TopField::Element TopField::neg(const Element& a) const {
    Element out{Level::top, std::vector<std::uint32_t>(n_)};
    for (unsigned i = 0; i < n_; ++i) out.coeffs[i] = base_->neg(a.coeffs[i]);
    return out;
}

TopField::Element TopField::mul(const Element& a, const Element& b) const {
    if (packed_) return unpack(gf2x::mulmod_word(pack(a), pack(b), packed_low_, n_), n_);
    const BaseField& f = *base_;
    std::vector<std::uint32_t> prod(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (unsigned j = 0; j < n_; ++j) prod[i + j] = f.add(prod[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    }
    const auto& h = modulus_.coeffs();
    for (std::size_t top = prod.size(); top-- > n_;) {
        const auto c = prod[top];
        if (c == 0) continue;
        for (unsigned i = 0; i < n_; ++i) prod[top - n_ + i] = f.sub(prod[top - n_ + i], f.mul(c, h[i]));
    }
    prod.resize(n_);
    return {Level::top, std::move(prod)};
}

BasePoly TopField::as_poly(const Element& a) const { return BasePoly(base_, a.coeffs); }

TopField::Element TopField::from_poly(const BasePoly& f) const {
    Element out = zero();
    for (std::size_t i = 0; i < f.size(); ++i) out.coeffs[i] = f.coeffs()[i];
    return out;
}

TopField::Element TopField::inv(const Element& a) const {
    if (is_zero(a)) throw Error(Errc::division_by_zero, "inverse of zero in F_{q^n}");
    auto [g, s, t] = ext_gcd(as_poly(a), modulus_);
    return from_poly(s % modulus_);
}

TopField::Element TopField::pow(const Element& a, const BigInt& exp) const {
    Element result = one();
    if (exp == 0) return result;
    const std::size_t bits = boost::multiprecision::msb(exp) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        result = mul(result, result);
        if (boost::multiprecision::bit_test(exp, static_cast<unsigned>(i))) result = mul(result, a);
    }
    return result;
}

TopField::Element TopField::frobenius(const Element& a, std::uint64_t i) const {
    Element r = a;
    const BigInt q = base_->q();
    for (std::uint64_t k = 0; k < i % n_; ++k) r = (q == 2) ? mul(r, r) : pow(r, q);
    return r;
}

TopField::Element TopField::element_at(std::uint64_t index) const {
    Element out = zero();
    for (unsigned i = 0; i < n_; ++i) {
        out.coeffs[i] = static_cast<std::uint32_t>(index % base_->q());
        index /= base_->q();
    }
    return out;
}

std::uint64_t TopField::index_of(const Element& a) const {
    std::uint64_t idx = 0;
    for (unsigned i = n_; i-- > 0;) idx = idx * base_->q() + a.coeffs[i];
    return idx;
}

}  // namespace knormal
