#include "knormal/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "knormal/error.hpp"
#include "knormal/gf2x.hpp"

namespace knormal {

namespace {

bool is_gf2(const BaseField& f) { return f.p() == 2 && f.is_prime_field(); }

gf2x::Gf2Poly to_packed(const BasePoly& f) {
    std::vector<std::uint64_t> w((f.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.coeffs()[i]) w[i / 64] |= std::uint64_t{1} << (i % 64);
    return gf2x::Gf2Poly(std::move(w));
}

BasePoly from_packed(const BaseFieldPtr& field, const gf2x::Gf2Poly& g) {
    const std::size_t n = g.degree() ? *g.degree() + 1 : 0;
    std::vector<BaseField::Element> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = g.bit(i) ? 1 : 0;
    return BasePoly(field, std::move(c));
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// h^q mod m
BasePoly frobenius_mod(const BasePoly& h, const BasePoly& m) { return powmod(h, BigInt(m.ring().q()), m); }

// Inverse of the coefficientwise Frobenius on a polynomial whose exponents are all multiples of p.
BasePoly pth_root(const BasePoly& f) {
    const BaseField& fld = f.ring();
    const std::uint32_t p = fld.p();
    std::vector<BaseField::Element> out(f.size() / p + 1, 0);
    for (std::size_t i = 0; i < f.size(); i += p) {
        auto c = f.coeffs()[i];
        // a^(q/p) = a^(p^(e-1)) inverts a -> a^p on F_q
        for (unsigned k = 1; k < fld.e(); ++k) c = fld.frobenius(c);
        out[i / p] = c;
    }
    return BasePoly(f.field(), std::move(out));
}

void squarefree(const BasePoly& f, unsigned mult, std::vector<std::pair<BasePoly, unsigned>>& out) {
    if (f.size() <= 1) return;
    const BasePoly d = derivative(f);
    if (d.is_zero()) {
        squarefree(pth_root(f), mult * f.ring().p(), out);
        return;
    }
    BasePoly c = gcd(f, d);
    BasePoly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        BasePoly y = gcd(w, c);
        BasePoly part = w / y;
        if (!part.is_one()) out.emplace_back(std::move(part), i * mult);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_one()) squarefree(pth_root(c), mult * f.ring().p(), out);
}

BasePoly random_below(const BaseFieldPtr& field, std::size_t size, std::mt19937_64& rng) {
    std::vector<BaseField::Element> c(size);
    for (auto& x : c) x = static_cast<BaseField::Element>(rng() % field->q());
    return BasePoly(field, std::move(c));
}

void equal_degree(const BasePoly& f, std::size_t d, std::mt19937_64& rng, std::vector<BasePoly>& out) {
    const std::size_t deg = *f.degree();
    if (deg == d) {
        out.push_back(f);
        return;
    }
    const BaseField& fld = f.ring();
    const BasePoly one = BasePoly::one(f.field());
    for (;;) {
        BasePoly a = random_below(f.field(), deg, rng);
        if (a.is_constant()) continue;
        BasePoly b(f.field());
        if (fld.p() == 2) {
            // trace from F_{q^d} down to F_2: sum_{j < e*d} a^(2^j)
            BasePoly acc = a;
            b = a;
            for (std::size_t j = 1; j < std::size_t{fld.e()} * d; ++j) {
                acc = mulmod(acc, acc, f);
                b = b + acc;
            }
        } else {
            const BigInt exp = (ipow(BigInt(fld.q()), d) - 1) / 2;
            b = powmod(a, exp, f) - one;
        }
        if (b.is_zero()) continue;
        BasePoly g = gcd(f, b);
        const std::size_t gd = *g.degree();
        if (gd > 0 && gd < deg) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

Factorization factor_generic(const BasePoly& f, std::uint64_t seed) {
    Factorization fac;
    fac.unit = f.lead();
    const BasePoly monic = make_monic(f);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<BasePoly, unsigned>> parts;
    squarefree(monic, 1, parts);
    const BasePoly x = BasePoly::x(f.field());
    for (auto& [part, mult] : parts) {
        BasePoly rest = part;
        BasePoly h = x % rest;
        for (std::size_t i = 1; rest.size() >= 2 * i + 1; ++i) {
            h = frobenius_mod(h, rest);
            BasePoly g = gcd(rest, h - x);
            if (!g.is_one()) {
                std::vector<BasePoly> irr;
                equal_degree(g, i, rng, irr);
                for (auto& p : irr) fac.factors.emplace_back(std::move(p), mult);
                rest = rest / g;
                h = h % rest;
            }
        }
        if (rest.size() > 1) fac.factors.emplace_back(std::move(rest), mult);
    }
    return fac;
}

}  // namespace

bool poly_less(const BasePoly& a, const BasePoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    }
    return false;
}

BasePoly Factorization::expand(const BaseFieldPtr& field) const {
    BasePoly acc = BasePoly::constant(field, unit);
    for (const auto& [p, m] : factors)
        for (unsigned i = 0; i < m; ++i) acc = acc * p;
    return acc;
}

std::size_t Factorization::count_of_degree(std::size_t d) const {
    return static_cast<std::size_t>(
        std::count_if(factors.begin(), factors.end(), [d](const auto& fm) { return fm.first.size() == d + 1; }));
}

Factorization factor(const BasePoly& f, const FactorOptions& options) {
    if (f.is_zero()) throw Error(Errc::invalid_argument, "cannot factor the zero polynomial");
    Factorization fac;
    if (options.packed_gf2 && is_gf2(f.ring())) {
        fac.unit = 1;
        if (f.size() > 1) {
            for (auto& [g, m] : gf2x::factor(to_packed(f), options.seed))
                fac.factors.emplace_back(from_packed(f.field(), g), m);
        }
    } else {
        fac = factor_generic(f, options.seed);
    }
    std::sort(fac.factors.begin(), fac.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return fac;
}

bool is_irreducible(const BasePoly& f) {
    if (f.size() < 2) throw Error(Errc::constant_polynomial, "irreducibility of a constant is undefined");
    if (is_gf2(f.ring())) return gf2x::is_irreducible(to_packed(f));
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    const BasePoly m = make_monic(f);
    const BasePoly x = BasePoly::x(f.field()) % m;
    // powers[k] = x^(q^k) mod m for k <= n
    std::vector<BasePoly> powers{x};
    for (std::size_t k = 1; k <= n; ++k) powers.push_back(frobenius_mod(powers.back(), m));
    if (powers[n] != x) return false;
    for (std::size_t r : prime_divisors(n)) {
        if (!gcd(m, powers[n / r] - x).is_one()) return false;
    }
    return true;
}

namespace {

// Monic polynomial of the given degree whose lower coefficients are the base-q digits of code.
BasePoly monic_from_code(const BaseFieldPtr& field, std::size_t degree, std::uint64_t code) {
    std::vector<BaseField::Element> c(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) {
        c[i] = static_cast<BaseField::Element>(code % field->q());
        code /= field->q();
    }
    c[degree] = 1;
    return BasePoly(field, std::move(c));
}

}  // namespace

BasePoly smallest_irreducible(const BaseFieldPtr& field, std::size_t degree) {
    if (degree == 0) throw Error(Errc::invalid_argument, "irreducible polynomials have degree >= 1");
    for (std::uint64_t code = 0;; ++code) {
        BasePoly f = monic_from_code(field, degree, code);
        if (is_irreducible(f)) return f;
    }
}

BigInt count_irreducibles(const BaseFieldPtr& field, std::size_t d, std::uint64_t cutoff) {
    if (d == 0) throw Error(Errc::invalid_argument, "degree must be >= 1");
    const BigInt total = ipow(BigInt(field->q()), d);
    if (total > cutoff)
        throw Error(Errc::enumeration_too_large, "q^d = " + total.str() + " exceeds cutoff " + std::to_string(cutoff));
    const auto n = static_cast<std::uint64_t>(total);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < n; ++code)
        if (is_irreducible(monic_from_code(field, d, code))) ++count;
    return count;
}

BigInt phi_poly(const Factorization& fac, std::uint32_t q) {
    BigInt r = 1;
    for (const auto& [g, a] : fac.factors) {
        const std::size_t d = g.size() - 1;
        r *= ipow(BigInt(q), d * a) - ipow(BigInt(q), d * (a - 1));
    }
    return r;
}

BigInt phi_poly(const BasePoly& f, const FactorOptions& options) {
    if (!f.is_monic()) throw Error(Errc::non_monic_input, "phi_poly needs a monic polynomial, got " + to_string(f));
    return phi_poly(factor(f, options), f.ring().q());
}

BigInt w_poly(const Factorization& fac) { return BigInt(1) << fac.distinct(); }

BigInt w_poly(const BasePoly& f, const FactorOptions& options) {
    if (!f.is_monic()) throw Error(Errc::non_monic_input, "w_poly needs a monic polynomial, got " + to_string(f));
    return w_poly(factor(f, options));
}

void for_each_divisor_exponents(const Factorization& fac, std::size_t d,
                                const std::function<void(std::span<const unsigned>)>& visit) {
    const std::size_t r = fac.factors.size();
    std::vector<unsigned> exps(r, 0);
    // suffix_max[i]: largest degree reachable from factors i..r-1
    std::vector<std::size_t> suffix_max(r + 1, 0);
    for (std::size_t i = r; i-- > 0;)
        suffix_max[i] = suffix_max[i + 1] + (fac.factors[i].first.size() - 1) * fac.factors[i].second;
    auto rec = [&](auto&& self, std::size_t i, std::size_t remaining) -> void {
        if (i == r) {
            if (remaining == 0) visit(exps);
            return;
        }
        if (remaining > suffix_max[i]) return;
        const std::size_t deg = fac.factors[i].first.size() - 1;
        for (unsigned e = 0; e <= fac.factors[i].second && e * deg <= remaining; ++e) {
            exps[i] = e;
            self(self, i + 1, remaining - e * deg);
        }
        exps[i] = 0;
    };
    rec(rec, 0, d);
}

BasePoly divisor_from_exponents(const BaseFieldPtr& field, const Factorization& fac, std::span<const unsigned> exps) {
    BasePoly acc = BasePoly::one(field);
    for (std::size_t i = 0; i < exps.size(); ++i)
        for (unsigned k = 0; k < exps[i]; ++k) acc = acc * fac.factors[i].first;
    return acc;
}

std::vector<BasePoly> divisors_of_degree(const BasePoly& f, std::size_t d, std::uint64_t limit,
                                         const FactorOptions& options) {
    if (!f.is_monic()) throw Error(Errc::non_monic_input, "divisors_of_degree needs a monic polynomial");
    const Factorization fac = factor(f, options);
    BigInt total = 1;
    for (const auto& fm : fac.factors) total *= fm.second + 1;
    if (total > limit)
        throw Error(Errc::enumeration_too_large,
                    total.str() + " candidate divisors exceed limit " + std::to_string(limit));
    std::vector<BasePoly> out;
    for_each_divisor_exponents(fac, d, [&](std::span<const unsigned> e) {
        out.push_back(divisor_from_exponents(f.field(), fac, e));
    });
    return out;
}

BasePoly x_pow_minus_one(const BaseFieldPtr& field, std::size_t n) {
    std::vector<BaseField::Element> c(n + 1, 0);
    c[0] = field->neg(1);
    c[n] = field->add(c[n], 1);
    return BasePoly(field, std::move(c));
}

BasePoly cyclotomic_cofactor(const BaseFieldPtr& field, std::size_t n) {
    if (n == 0) throw Error(Errc::invalid_argument, "n must be positive");
    return BasePoly(field, std::vector<BaseField::Element>(n, 1));
}

namespace {

class PolyParser {
   public:
    PolyParser(const BaseField& field, std::string_view text) : field_(field), text_(text) {}

    std::vector<BaseField::Element> parse() {
        std::vector<BaseField::Element> out;
        skip_ws();
        if (pos_ == text_.size()) return out;
        for (;;) {
            out.push_back(parse_coeff());
            skip_ws();
            if (pos_ == text_.size()) break;
            expect(',');
        }
        return out;
    }

   private:
    BaseField::Element parse_coeff() {
        skip_ws();
        if (peek() == '[') {
            ++pos_;
            std::vector<std::uint32_t> digits;
            skip_ws();
            if (peek() != ']') {
                for (;;) {
                    digits.push_back(field_.from_int(parse_int()));
                    skip_ws();
                    if (peek() == ']') break;
                    expect(',');
                }
            }
            expect(']');
            return field_.from_digits(digits);
        }
        return field_.from_int(parse_int());
    }

    std::int64_t parse_int() {
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = (v * 10 + (text_[pos_] - '0')) % field_.p();
            ++pos_;
        }
        return negative ? -v : v;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(Errc::invalid_argument,
                    "bad polynomial text '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + msg);
    }

    const BaseField& field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string coeff_text(const BaseField& field, BaseField::Element c) {
    if (field.is_prime_field()) return std::to_string(c);
    std::string s = "[";
    auto d = field.digits(c);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(d[i]);
    }
    return s + "]";
}

}  // namespace

BasePoly parse_poly(const BaseFieldPtr& field, std::string_view text) {
    return BasePoly(field, PolyParser(*field, text).parse());
}

std::string to_string(const BasePoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ',';
        s += coeff_text(f.ring(), f.coeffs()[i]);
    }
    return s;
}

std::string to_pretty_string(const BasePoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        const auto c = f.coeffs()[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        const bool show_coeff = c != 1 || i == 0;
        if (show_coeff) os << coeff_text(f.ring(), c);
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

}  // namespace knormal
