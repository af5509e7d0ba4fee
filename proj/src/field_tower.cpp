#include "knormal/field_tower.hpp"

#include <string>

#include "knormal/error.hpp"

namespace knormal {

FieldTower FieldTower::build(std::uint32_t p, unsigned e, unsigned n, const ModuliOverride& overrides) {
    if (e == 0 || n == 0) throw Error(Errc::invalid_argument, "extension degrees must be positive");
    auto prime = BaseField::prime(p);
    BaseFieldPtr base;
    if (overrides.base) {
        if (e == 1) throw Error(Errc::invalid_argument, "a base modulus override needs e >= 2");
        if (overrides.base->size() != e + 1)
            throw Error(Errc::invalid_argument, "base modulus must have degree " + std::to_string(e));
        base = BaseField::extension(p, *overrides.base);
    } else {
        base = BaseField::make(p, e);
    }
    std::vector<BaseField::Element> top_mod;
    if (overrides.top) {
        if (overrides.top->size() != n + 1)
            throw Error(Errc::invalid_argument, "top modulus must have degree " + std::to_string(n));
        top_mod = *overrides.top;
    } else {
        top_mod = smallest_irreducible(base, n).coeffs();
    }
    auto top = TopField::make(base, std::move(top_mod));
    return FieldTower(std::move(prime), std::move(base), std::move(top));
}

std::optional<BasePoly> FieldTower::base_modulus() const {
    if (base_->is_prime_field()) return std::nullopt;
    return BasePoly(prime_, base_->modulus());
}

FieldElement FieldTower::zero(Level level) const {
    switch (level) {
        case Level::prime: return {Level::prime, {0}};
        case Level::base: return {Level::base, std::vector<std::uint32_t>(e(), 0)};
        case Level::top: return top_->zero();
    }
    return {};
}

FieldElement FieldTower::one(Level level) const {
    FieldElement out = zero(level);
    out.coeffs[0] = 1;
    return out;
}

void FieldTower::check(const FieldElement& a) const {
    switch (a.level) {
        case Level::prime:
            if (a.coeffs.size() != 1 || a.coeffs[0] >= p())
                throw Error(Errc::level_mismatch, "malformed prime-field element");
            return;
        case Level::base:
            if (a.coeffs.size() != e()) throw Error(Errc::level_mismatch, "malformed base-field element");
            for (auto d : a.coeffs)
                if (d >= p()) throw Error(Errc::level_mismatch, "base-field digit out of range");
            return;
        case Level::top: top_->check(a); return;
    }
}

namespace {

BaseField::Element apply(const BaseField& f, BaseField::Element a, BaseField::Element b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return f.add(a, b);
        case ArithOp::sub: return f.sub(a, b);
        case ArithOp::mul: return f.mul(a, b);
        case ArithOp::div: return f.div(a, b);
    }
    return 0;
}

}  // namespace

FieldElement FieldTower::arith(const FieldElement& a, const FieldElement& b, ArithOp op) const {
    if (a.level != b.level) throw Error(Errc::level_mismatch, "operands live on different tower levels");
    check(a);
    check(b);
    switch (a.level) {
        case Level::prime: return {Level::prime, {apply(*prime_, a.coeffs[0], b.coeffs[0], op)}};
        case Level::base: {
            const auto r = apply(*base_, base_->from_digits(a.coeffs), base_->from_digits(b.coeffs), op);
            return {Level::base, base_->digits(r)};
        }
        case Level::top:
            switch (op) {
                case ArithOp::add: return top_->add(a, b);
                case ArithOp::sub: return top_->sub(a, b);
                case ArithOp::mul: return top_->mul(a, b);
                case ArithOp::div: return top_->div(a, b);
            }
    }
    return {};
}

FieldElement FieldTower::frobenius(const FieldElement& a, std::uint64_t i) const {
    top_->check(a);
    return top_->frobenius(a, i);
}

FieldElement FieldTower::embed(const FieldElement& base_element) const {
    if (base_element.level != Level::base) throw Error(Errc::level_mismatch, "embed expects a base-field element");
    check(base_element);
    return top_->embed(base_->from_digits(base_element.coeffs));
}

BigInt multiplicative_order(const FieldTower& tower, const FieldElement& a, const IntFactorization& group_order) {
    const TopField& f = *tower.top_field();
    f.check(a);
    if (f.is_zero(a)) throw Error(Errc::zero_element, "zero has no multiplicative order");
    const FieldElement one = f.one();
    BigInt t = group_order.value;
    for (const auto& [r, e] : group_order.factors) {
        for (unsigned k = 0; k < e; ++k) {
            if (f.pow(a, t / r) != one) break;
            t /= r;
        }
    }
    return t;
}

}  // namespace knormal
