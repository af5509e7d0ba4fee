#include "knormal/gf2x.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace knormal::gf2x {

namespace {

using u128 = unsigned __int128;

// Spread the 32 low bits of w to even bit positions.
std::uint64_t spread32(std::uint64_t w) noexcept {
    w &= 0xffffffffULL;
    w = (w | (w << 16)) & 0x0000ffff0000ffffULL;
    w = (w | (w << 8)) & 0x00ff00ff00ff00ffULL;
    w = (w | (w << 4)) & 0x0f0f0f0f0f0f0f0fULL;
    w = (w | (w << 2)) & 0x3333333333333333ULL;
    w = (w | (w << 1)) & 0x5555555555555555ULL;
    return w;
}

// Inverse of spread32 on the even bits.
std::uint64_t gather_even(std::uint64_t w) noexcept {
    w &= 0x5555555555555555ULL;
    w = (w | (w >> 1)) & 0x3333333333333333ULL;
    w = (w | (w >> 2)) & 0x0f0f0f0f0f0f0f0fULL;
    w = (w | (w >> 4)) & 0x00ff00ff00ff00ffULL;
    w = (w | (w >> 8)) & 0x0000ffff0000ffffULL;
    w = (w | (w >> 16)) & 0x00000000ffffffffULL;
    return w;
}

// dst ^= src << shift (in bits), growing dst as needed.
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, std::size_t shift) {
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    const std::size_t need = src.size() + word_shift + 1;
    if (dst.size() < need) dst.resize(need, 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + word_shift] ^= src[i] << bit_shift;
        if (bit_shift != 0) dst[i + word_shift + 1] ^= src[i] >> (64 - bit_shift);
    }
}

}  // namespace

u128 clmul64(std::uint64_t a, std::uint64_t b) noexcept {
    u128 table[16];
    table[0] = 0;
    table[1] = a;
    for (int j = 2; j < 16; j += 2) {
        table[j] = table[j / 2] << 1;
        table[j + 1] = table[j] ^ a;
    }
    u128 r = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        r = (r << 4) ^ table[(b >> shift) & 0xf];
    }
    return r;
}

std::uint64_t mulmod_word(std::uint64_t a, std::uint64_t b, std::uint64_t low, unsigned n) noexcept {
    u128 prod = clmul64(a, b);
    // Fold bits >= n down using x^n = low.
    for (int top = 2 * static_cast<int>(n) - 2; top >= static_cast<int>(n); --top) {
        if ((prod >> top) & 1) {
            prod ^= u128{1} << top;
            prod ^= static_cast<u128>(low) << (top - static_cast<int>(n));
        }
    }
    return static_cast<std::uint64_t>(prod);
}

Gf2Poly::Gf2Poly(std::vector<std::uint64_t> words) : words_(std::move(words)) { trim(); }

Gf2Poly Gf2Poly::monomial(std::size_t deg) {
    std::vector<std::uint64_t> w(deg / 64 + 1, 0);
    w[deg / 64] = std::uint64_t{1} << (deg % 64);
    return Gf2Poly(std::move(w));
}

Gf2Poly Gf2Poly::random(std::size_t max_deg_exclusive, std::mt19937_64& rng) {
    if (max_deg_exclusive == 0) return {};
    std::vector<std::uint64_t> w((max_deg_exclusive + 63) / 64);
    for (auto& x : w) x = rng();
    if (max_deg_exclusive % 64 != 0) w.back() &= (std::uint64_t{1} << (max_deg_exclusive % 64)) - 1;
    return Gf2Poly(std::move(w));
}

void Gf2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::optional<std::size_t> Gf2Poly::degree() const noexcept {
    if (words_.empty()) return std::nullopt;
    return 64 * (words_.size() - 1) + (63 - static_cast<std::size_t>(std::countl_zero(words_.back())));
}

bool Gf2Poly::bit(std::size_t i) const noexcept {
    return i / 64 < words_.size() && ((words_[i / 64] >> (i % 64)) & 1);
}

void Gf2Poly::flip(std::size_t i) {
    if (words_.size() <= i / 64) words_.resize(i / 64 + 1, 0);
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
    trim();
}

Gf2Poly& Gf2Poly::operator^=(const Gf2Poly& rhs) {
    if (words_.size() < rhs.words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    trim();
    return *this;
}

std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    }
    return std::strong_ordering::equal;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& aw = a.words();
    const auto& bw = b.words();
    std::vector<std::uint64_t> out(aw.size() + bw.size(), 0);
    for (std::size_t i = 0; i < aw.size(); ++i) {
        for (std::size_t j = 0; j < bw.size(); ++j) {
            const u128 p = clmul64(aw[i], bw[j]);
            out[i + j] ^= static_cast<std::uint64_t>(p);
            out[i + j + 1] ^= static_cast<std::uint64_t>(p >> 64);
        }
    }
    return Gf2Poly(std::move(out));
}

Gf2Poly sqr(const Gf2Poly& a) {
    const auto& aw = a.words();
    std::vector<std::uint64_t> out(2 * aw.size(), 0);
    for (std::size_t i = 0; i < aw.size(); ++i) {
        out[2 * i] = spread32(aw[i]);
        out[2 * i + 1] = spread32(aw[i] >> 32);
    }
    return Gf2Poly(std::move(out));
}

std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& a, const Gf2Poly& b) {
    if (b.is_zero()) throw std::domain_error("gf2x division by zero");
    const auto db = *b.degree();
    std::vector<std::uint64_t> rem = a.words();
    std::vector<std::uint64_t> quo;
    auto top_degree = [&]() -> std::optional<std::size_t> {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) return std::nullopt;
        return 64 * (rem.size() - 1) + (63 - static_cast<std::size_t>(std::countl_zero(rem.back())));
    };
    for (auto d = top_degree(); d && *d >= db; d = top_degree()) {
        const std::size_t shift = *d - db;
        if (quo.size() <= shift / 64) quo.resize(shift / 64 + 1, 0);
        quo[shift / 64] |= std::uint64_t{1} << (shift % 64);
        xor_shifted(rem, b.words(), shift);
    }
    return {Gf2Poly(std::move(quo)), Gf2Poly(std::move(rem))};
}

Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b) { return divmod(a, b).second; }
Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& b) { return divmod(a, b).first; }

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        Gf2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Gf2Poly derivative(const Gf2Poly& a) {
    // d/dx x^i = i x^{i-1}: keep odd i, shift down by one.
    std::vector<std::uint64_t> w = a.words();
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t odd = w[i] & 0xaaaaaaaaaaaaaaaaULL;
        w[i] = odd >> 1;
    }
    return Gf2Poly(std::move(w));
}

Gf2Poly sqrt_even(const Gf2Poly& a) {
    const auto& aw = a.words();
    std::vector<std::uint64_t> out((aw.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < aw.size(); ++i) {
        if (aw[i] & 0xaaaaaaaaaaaaaaaaULL) throw std::domain_error("sqrt_even: odd-degree term present");
        const std::uint64_t half = gather_even(aw[i]);
        out[i / 2] |= (i % 2 == 0) ? half : (half << 32);
    }
    return Gf2Poly(std::move(out));
}

namespace {

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

// x^(2^k) mod f
Gf2Poly frobenius_power_of_x(std::size_t k, const Gf2Poly& f) {
    Gf2Poly h = Gf2Poly::x() % f;
    for (std::size_t i = 0; i < k; ++i) h = sqr(h) % f;
    return h;
}

// Square-free decomposition: (square-free part, multiplicity) with pairwise coprime parts.
void squarefree(const Gf2Poly& f, unsigned mult, std::vector<std::pair<Gf2Poly, unsigned>>& out) {
    if (*f.degree() == 0) return;
    Gf2Poly d = derivative(f);
    if (d.is_zero()) {
        squarefree(sqrt_even(f), 2 * mult, out);
        return;
    }
    Gf2Poly c = gcd(f, d);
    Gf2Poly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Gf2Poly y = gcd(w, c);
        Gf2Poly part = w / y;
        if (!part.is_one()) out.emplace_back(std::move(part), i * mult);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_one()) squarefree(sqrt_even(c), 2 * mult, out);
}

void equal_degree(const Gf2Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Gf2Poly>& out) {
    const std::size_t deg = *f.degree();
    if (deg == d) {
        out.push_back(f);
        return;
    }
    for (;;) {
        Gf2Poly a = Gf2Poly::random(deg, rng);
        if (a.is_zero()) continue;
        // Absolute trace from F_{2^d}: sum of a^(2^j), j < d.
        Gf2Poly t = a;
        Gf2Poly acc = a;
        for (std::size_t j = 1; j < d; ++j) {
            acc = sqr(acc) % f;
            t ^= acc;
        }
        Gf2Poly g = gcd(f, t);
        const std::size_t gd = g.degree().value_or(0);
        if (gd > 0 && gd < deg) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

bool is_irreducible(const Gf2Poly& f) {
    const auto deg = f.degree();
    if (!deg || *deg == 0) throw std::domain_error("is_irreducible: constant polynomial");
    const std::size_t n = *deg;
    if (n == 1) return true;
    const Gf2Poly x = Gf2Poly::x();
    if (frobenius_power_of_x(n, f) != x % f) return false;
    for (std::size_t r : prime_divisors(n)) {
        Gf2Poly h = frobenius_power_of_x(n / r, f) ^ x;
        if (!gcd(f, h).is_one()) return false;
    }
    return true;
}

std::vector<std::pair<Gf2Poly, unsigned>> factor(const Gf2Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Gf2Poly, unsigned>> parts;
    squarefree(f, 1, parts);

    std::vector<std::pair<Gf2Poly, unsigned>> result;
    for (auto& [part, mult] : parts) {
        Gf2Poly rest = part;
        Gf2Poly h = Gf2Poly::x();
        for (std::size_t i = 1; rest.degree().value_or(0) >= 2 * i; ++i) {
            h = sqr(h) % rest;
            Gf2Poly g = gcd(rest, h ^ Gf2Poly::x());
            if (!g.is_one()) {
                std::vector<Gf2Poly> irr;
                equal_degree(g, i, rng, irr);
                for (auto& p : irr) result.emplace_back(std::move(p), mult);
                rest = rest / g;
                h = h % rest;
            }
        }
        if (rest.degree().value_or(0) > 0) result.emplace_back(std::move(rest), mult);
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

}  // namespace knormal::gf2x
