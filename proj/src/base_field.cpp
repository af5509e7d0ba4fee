#include "knormal/base_field.hpp"

#include <string>

#include "knormal/error.hpp"
#include "knormal/intfactor.hpp"
#include "knormal/polyring.hpp"

namespace knormal {

namespace {

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> small_prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

BaseField::BaseField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), e_(modulus.empty() ? 1u : static_cast<unsigned>(modulus.size() - 1)), q_(p), modulus_(std::move(modulus)) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e_; ++i) {
        pow_p_.push_back(static_cast<std::uint32_t>(q));
        q *= p_;
        if (e_ > 1 && q > kMaxExtensionOrder) {
            throw Error(Errc::field_too_large,
                        "extension fields need q <= 2^20 (p=" + std::to_string(p) + ", e=" + std::to_string(e_) + ")");
        }
    }
    q_ = static_cast<std::uint32_t>(q);
}

std::shared_ptr<const BaseField> BaseField::prime(std::uint32_t p) {
    if (p > kMaxPrime) throw Error(Errc::field_too_large, "prime must be below 2^31");
    if (!is_prime_u64(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
    return std::shared_ptr<const BaseField>(new BaseField(p, {}));
}

std::shared_ptr<const BaseField> BaseField::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    auto fp = prime(p);
    if (modulus.size() < 3) throw Error(Errc::invalid_argument, "extension modulus must have degree >= 2");
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) throw Error(Errc::non_monic_input, "extension modulus must be monic");
    Poly<BaseField> g(fp, modulus);
    if (!is_irreducible(g)) throw Error(Errc::reducible_modulus, "base modulus " + to_string(g) + " is reducible");
    auto f = std::shared_ptr<BaseField>(new BaseField(p, std::move(modulus)));
    f->build_tables();
    return f;
}

std::shared_ptr<const BaseField> BaseField::make(std::uint32_t p, unsigned e) {
    if (e == 0) throw Error(Errc::invalid_argument, "extension degree must be positive");
    if (e == 1) return prime(p);
    auto g = smallest_irreducible(prime(p), e);
    return extension(p, g.coeffs());
}

std::shared_ptr<const BaseField> BaseField::for_order(std::uint64_t q) {
    if (q < 2) throw Error(Errc::invalid_argument, "q must be a prime power >= 2, got " + std::to_string(q));
    const std::uint64_t p = small_prime_divisors(q).front();
    unsigned e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw Error(Errc::invalid_argument, std::to_string(q) + " is not a prime power");
    if (p > kMaxPrime) throw Error(Errc::field_too_large, "prime must be below 2^31");
    return make(static_cast<std::uint32_t>(p), e);
}

BaseField::Element BaseField::slow_mul(Element a, Element b) const {
    auto da = digits(a);
    auto db = digits(b);
    std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    // modulus is monic: y^e = -sum_{i<e} g_i y^i
    for (std::size_t top = prod.size(); top-- > e_;) {
        const std::uint64_t c = prod[top];
        if (c == 0) continue;
        prod[top] = 0;
        for (unsigned i = 0; i < e_; ++i) {
            const std::uint64_t sub = c * modulus_[i] % p_;
            prod[top - e_ + i] = (prod[top - e_ + i] + p_ - sub) % p_;
        }
    }
    std::vector<std::uint32_t> out(prod.begin(), prod.begin() + e_);
    return from_digits(out);
}

void BaseField::build_tables() {
    const std::uint32_t order = q_ - 1;
    const auto primes = small_prime_divisors(order);
    auto slow_pow = [&](Element a, std::uint64_t k) {
        Element r = 1;
        while (k) {
            if (k & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            k >>= 1;
        }
        return r;
    };
    Element gen = 0;
    for (Element c = 2; c < q_ && gen == 0; ++c) {
        bool ok = true;
        for (auto r : primes) {
            if (slow_pow(c, order / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) gen = c;
    }
    exp_.assign(2 * static_cast<std::size_t>(order), 0);
    log_.assign(q_, 0);
    Element x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = x;
        exp_[i + order] = x;
        log_[x] = i;
        x = slow_mul(x, gen);
    }
    if (p_ != 2 && q_ <= 1024) {
        add_table_.resize(std::size_t{q_} * q_);
        for (Element a = 0; a < q_; ++a) {
            auto da = digits(a);
            for (Element b = 0; b < q_; ++b) {
                auto db = digits(b);
                std::vector<std::uint32_t> s(e_);
                for (unsigned i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_table_[std::size_t{a} * q_ + b] = from_digits(s);
            }
        }
    }
    if (p_ != 2) {
        neg_table_.resize(q_);
        for (Element a = 0; a < q_; ++a) {
            auto d = digits(a);
            for (auto& x : d) x = (p_ - x) % p_;
            neg_table_[a] = from_digits(d);
        }
    }
}

BaseField::Element BaseField::add(Element a, Element b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Element>(s >= p_ ? s - p_ : s);
    }
    if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
    Element out = 0;
    for (unsigned i = 0; i < e_; ++i) {
        const std::uint32_t da = a / pow_p_[i] % p_;
        const std::uint32_t db = b / pow_p_[i] % p_;
        out += ((da + db) % p_) * pow_p_[i];
    }
    return out;
}

BaseField::Element BaseField::neg(Element a) const noexcept {
    if (p_ == 2) return a;
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_table_[a];
}

BaseField::Element BaseField::sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

BaseField::Element BaseField::mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return static_cast<Element>(std::uint64_t{a} * b % p_);
    return exp_[std::size_t{log_[a]} + log_[b]];
}

BaseField::Element BaseField::inv(Element a) const {
    if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero in F_" + std::to_string(q_));
    if (e_ == 1) return static_cast<Element>(powmod_u64(a, p_ - 2, p_));
    const std::uint32_t order = q_ - 1;
    return exp_[(order - log_[a]) % order];
}

BaseField::Element BaseField::pow(Element a, const BigInt& exp) const {
    if (exp == 0) return 1;
    if (a == 0) return 0;
    const std::uint32_t order = q_ - 1;
    const auto k = static_cast<std::uint64_t>(exp % order);
    if (e_ == 1) return static_cast<Element>(powmod_u64(a, k, p_));
    return exp_[(std::uint64_t{log_[a]} * k) % order];
}

BaseField::Element BaseField::frobenius(Element a) const {
    if (e_ == 1 || a == 0) return a;
    const std::uint32_t order = q_ - 1;
    return exp_[(std::uint64_t{log_[a]} * p_) % order];
}

BaseField::Element BaseField::from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
}

std::vector<std::uint32_t> BaseField::digits(Element a) const {
    std::vector<std::uint32_t> d(e_);
    for (unsigned i = 0; i < e_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

BaseField::Element BaseField::from_digits(std::span<const std::uint32_t> digits) const {
    if (digits.size() > e_) throw Error(Errc::invalid_argument, "too many digits for F_" + std::to_string(q_));
    Element out = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) out += (digits[i] % p_) * pow_p_[i];
    return out;
}

}  // namespace knormal
