#pragma once

// Dense univariate polynomials over a runtime field context. A field type F
// provides F::Element and zero/one/is_zero/add/sub/neg/mul/inv plus equality.

#include <cstddef>
#include <memory>
#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "knormal/bigint.hpp"
#include "knormal/error.hpp"

namespace knormal {

template <class Field>
class Poly {
   public:
    using Scalar = typename Field::Element;
    using FieldPtr = std::shared_ptr<const Field>;

    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(FieldPtr field, Scalar c) { return Poly(std::move(field), std::vector<Scalar>{std::move(c)}); }
    static Poly one(FieldPtr field) {
        auto c = field->one();
        return constant(std::move(field), std::move(c));
    }
    static Poly monomial(FieldPtr field, Scalar c, std::size_t deg) {
        std::vector<Scalar> v(deg + 1, field->zero());
        v[deg] = std::move(c);
        return Poly(std::move(field), std::move(v));
    }
    static Poly x(FieldPtr field) {
        auto c = field->one();
        return monomial(std::move(field), std::move(c), 1);
    }

    const FieldPtr& field() const noexcept { return field_; }
    const Field& ring() const noexcept { return *field_; }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }
    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    /// Number of stored coefficients, deg + 1 (0 for the zero polynomial).
    std::size_t size() const noexcept { return c_.size(); }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }
    const Scalar& lead() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == field_->one(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == field_->one(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return (a.field_ == b.field_ || *a.field_ == *b.field_) && a.c_ == b.c_;
    }

   private:
    void trim() {
        while (!c_.empty() && field_->is_zero(c_.back())) c_.pop_back();
    }

    FieldPtr field_;
    std::vector<Scalar> c_;
};

namespace detail {

template <class F>
void require_same_field(const Poly<F>& a, const Poly<F>& b) {
    if (a.field() != b.field() && !(*a.field() == *b.field()))
        throw Error(Errc::field_mismatch, "polynomials live over different fields");
}

}  // namespace detail

template <class F>
Poly<F> operator+(const Poly<F>& a, const Poly<F>& b) {
    detail::require_same_field(a, b);
    const F& f = a.ring();
    std::vector<typename F::Element> out(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly<F>(a.field(), std::move(out));
}

template <class F>
Poly<F> operator-(const Poly<F>& a) {
    const F& f = a.ring();
    std::vector<typename F::Element> out(a.coeffs());
    for (auto& c : out) c = f.neg(c);
    return Poly<F>(a.field(), std::move(out));
}

template <class F>
Poly<F> operator-(const Poly<F>& a, const Poly<F>& b) {
    detail::require_same_field(a, b);
    const F& f = a.ring();
    std::vector<typename F::Element> out(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly<F>(a.field(), std::move(out));
}

template <class F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b) {
    detail::require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly<F>(a.field());
    const F& f = a.ring();
    std::vector<typename F::Element> out(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a.coeffs()[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return Poly<F>(a.field(), std::move(out));
}

template <class F>
Poly<F> scale(const Poly<F>& a, const typename F::Element& c) {
    const F& f = a.ring();
    std::vector<typename F::Element> out(a.coeffs());
    for (auto& x : out) x = f.mul(x, c);
    return Poly<F>(a.field(), std::move(out));
}

/// Zero stays zero.
template <class F>
Poly<F> make_monic(const Poly<F>& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return scale(a, a.ring().inv(a.lead()));
}

/// (quotient, remainder) with deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    detail::require_same_field(a, b);
    if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
    const F& f = a.ring();
    if (a.size() < b.size()) return {Poly<F>(a.field()), a};
    std::vector<typename F::Element> rem(a.coeffs());
    std::vector<typename F::Element> quo(a.size() - b.size() + 1, f.zero());
    const auto lead_inv = f.inv(b.lead());
    const std::size_t db = b.size() - 1;
    for (std::size_t top = rem.size(); top-- > db;) {
        if (f.is_zero(rem[top])) continue;
        const auto c = f.mul(rem[top], lead_inv);
        quo[top - db] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[top - db + j] = f.sub(rem[top - db + j], f.mul(c, b.coeffs()[j]));
    }
    rem.resize(db);
    return {Poly<F>(a.field(), std::move(quo)), Poly<F>(a.field(), std::move(rem))};
}

template <class F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).first;
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

/// Monic gcd; gcd(0, b) = monic(b). Throws both_zero.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    detail::require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) throw Error(Errc::both_zero, "gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
    detail::require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) throw Error(Errc::both_zero, "gcd(0, 0) is undefined");
    const auto& fld = a.field();
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::one(fld), s1(fld);
    Poly<F> t0(fld), t1 = Poly<F>::one(fld);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly<F> s2 = s0 - q * s1;
        Poly<F> t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const auto c = a.ring().inv(r0.lead());
    return {scale(r0, c), scale(s0, c), scale(t0, c)};
}

template <class F>
Poly<F> mulmod(const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
    return (a * b) % m;
}

template <class F>
Poly<F> powmod(Poly<F> base, const BigInt& exp, const Poly<F>& m) {
    Poly<F> result = Poly<F>::one(m.field()) % m;
    base = base % m;
    if (exp == 0) return result;
    const std::size_t bits = boost::multiprecision::msb(exp) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (boost::multiprecision::bit_test(exp, static_cast<unsigned>(i))) result = mulmod(result, base, m);
    }
    return result;
}

template <class F>
Poly<F> derivative(const Poly<F>& a) {
    const F& f = a.ring();
    if (a.size() <= 1) return Poly<F>(a.field());
    std::vector<typename F::Element> out(a.size() - 1, f.zero());
    for (std::size_t i = 1; i < a.size(); ++i) {
        // i * a_i as repeated addition in the prime subfield
        auto c = f.zero();
        const auto& ai = a.coeffs()[i];
        for (std::size_t k = 0; k < i % f.p(); ++k) c = f.add(c, ai);
        out[i - 1] = c;
    }
    return Poly<F>(a.field(), std::move(out));
}

/// Value at a point (Horner).
template <class F>
typename F::Element evaluate(const Poly<F>& a, const typename F::Element& x) {
    const F& f = a.ring();
    auto acc = f.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.coeffs()[i]);
    return acc;
}

}  // namespace knormal
