#include <gtest/gtest.h>

#include <random>

#include "knormal/gf2x.hpp"
#include "knormal/polyring.hpp"
#include "oracles.hpp"

using namespace knormal;
using gf2x::Gf2Poly;

namespace {

unsigned __int128 naive_clmul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = 0;
    for (int i = 0; i < 64; ++i)
        if ((b >> i) & 1) r ^= static_cast<unsigned __int128>(a) << i;
    return r;
}

Gf2Poly naive_mul(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (std::size_t i = 0; i <= *a.degree(); ++i)
        for (std::size_t j = 0; j <= *b.degree(); ++j)
            if (a.bit(i) && b.bit(j)) r.flip(i + j);
    return r;
}

BasePoly to_base(const Gf2Poly& f, const BaseFieldPtr& f2) {
    std::vector<std::uint32_t> c;
    if (auto d = f.degree())
        for (std::size_t i = 0; i <= *d; ++i) c.push_back(f.bit(i) ? 1 : 0);
    return BasePoly(f2, c);
}

}  // namespace

TEST(Gf2x, ClmulMatchesBitLoop) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20000; ++i) {
        const auto a = rng(), b = rng();
        ASSERT_TRUE(gf2x::clmul64(a, b) == naive_clmul(a, b));
    }
    EXPECT_TRUE(gf2x::clmul64(~0ULL, ~0ULL) == naive_clmul(~0ULL, ~0ULL));
}

TEST(Gf2x, MulmodWordMatchesBitSerialReduction) {
    std::mt19937_64 rng(12);
    // x^n + low for a few irreducible moduli, plus arbitrary ones
    for (unsigned n = 1; n <= 63; ++n) {
        const std::uint64_t mask = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
        const std::uint64_t low = rng() & mask;
        for (int i = 0; i < 300; ++i) {
            const auto a = rng() & mask, b = rng() & mask;
            ASSERT_EQ(gf2x::mulmod_word(a, b, low, n), oracle::gf2n_mul(a, b, low | (1ULL << n), n))
                << "n=" << n;
        }
    }
}

TEST(Gf2x, MultiplicationAndDivision) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        const auto a = Gf2Poly::random(1 + rng() % 300, rng);
        const auto b = Gf2Poly::random(1 + rng() % 300, rng);
        ASSERT_EQ(a * b, naive_mul(a, b));
        ASSERT_EQ(sqr(a), a * a);
        if (b.is_zero()) continue;
        auto [quo, rem] = divmod(a, b);
        ASSERT_EQ(quo * b + rem, a);
        if (!rem.is_zero()) ASSERT_LT(*rem.degree(), *b.degree());
    }
}

TEST(Gf2x, GcdDividesBoth) {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 300; ++i) {
        const auto c = Gf2Poly::random(20, rng);
        if (c.is_zero()) continue;
        const auto a = Gf2Poly::random(40, rng) * c;
        const auto b = Gf2Poly::random(40, rng) * c;
        if (a.is_zero() || b.is_zero()) continue;
        const auto g = gcd(a, b);
        ASSERT_TRUE((a % g).is_zero());
        ASSERT_TRUE((b % g).is_zero());
        ASSERT_TRUE((g % c).is_zero());
    }
}

TEST(Gf2x, SqrtAndDerivative) {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 200; ++i) {
        const auto a = Gf2Poly::random(100, rng);
        ASSERT_EQ(sqrt_even(sqr(a)), a);
        ASSERT_TRUE(derivative(sqr(a)).is_zero());
    }
}

TEST(Gf2x, IrreducibilityMatchesTrialDivision) {
    for (std::uint64_t code = 2; code < (1u << 13); ++code) {
        const Gf2Poly f({code});
        oracle::SmallPoly s;
        for (int i = 0; i < 13; ++i) s.c[i] = (code >> i) & 1;
        s.deg = 12;
        s.normalize();
        ASSERT_EQ(gf2x::is_irreducible(f), oracle::irreducible_by_trial_division(s, 2)) << code;
    }
}

TEST(Gf2x, FactorRoundTripAndAgreesWithGenericPath) {
    std::mt19937_64 rng(16);
    const auto f2 = BaseField::prime(2);
    for (int i = 0; i < 400; ++i) {
        auto f = Gf2Poly::random(2 + rng() % 120, rng);
        if (f.is_zero()) continue;
        if (i % 3 == 0) f = f * f * Gf2Poly::random(10, rng);
        if (f.is_zero()) continue;
        const auto fac = gf2x::factor(f, 99);
        Gf2Poly prod = Gf2Poly::one();
        for (const auto& [g, m] : fac) {
            ASSERT_TRUE(gf2x::is_irreducible(g));
            for (unsigned j = 0; j < m; ++j) prod = prod * g;
        }
        ASSERT_EQ(prod, f);
        for (std::size_t j = 1; j < fac.size(); ++j) ASSERT_NE(fac[j - 1].first, fac[j].first);

        if (*f.degree() > 60) continue;
        const auto packed = knormal::factor(to_base(f, f2), {.seed = 5, .packed_gf2 = true});
        const auto generic = knormal::factor(to_base(f, f2), {.seed = 5, .packed_gf2 = false});
        ASSERT_EQ(packed.factors, generic.factors);
    }
}
