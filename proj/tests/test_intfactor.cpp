#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "knormal/intfactor.hpp"
#include "oracles.hpp"

using namespace knormal;

namespace {

std::vector<std::uint64_t> primes_of(const IntFactorization& f) {
    std::vector<std::uint64_t> out;
    for (const auto& [p, e] : f.factors) out.push_back(static_cast<std::uint64_t>(p));
    return out;
}

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::invalid_argument;
}

HintTable hints_from(const std::string& text) {
    std::istringstream in(text);
    return load_factor_hints(in);
}

bool trial_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST(IntFactor, Examples) {
    EXPECT_EQ(primes_of(factor_int(32767)), (std::vector<std::uint64_t>{7, 31, 151}));
    EXPECT_TRUE(factor_int(1).factors.empty());
    EXPECT_EQ(primes_of(factor_int(2047)), (std::vector<std::uint64_t>{23, 89}));

    EXPECT_EQ(euler_phi_int(factor_int(7)), 6);
    EXPECT_EQ(euler_phi_int(factor_int(1)), 1);
    EXPECT_EQ(euler_phi_int(factor_int(32767)), 27000);

    EXPECT_EQ(w_int(factor_int(32767)), 8);
    EXPECT_EQ(w_int(factor_int(1)), 1);
    EXPECT_EQ(w_int(factor_int(2047)), 4);
}

TEST(IntFactor, PrimalityAgreesWithTrialDivision) {
    for (std::uint64_t n = 0; n < 200000; ++n) ASSERT_EQ(is_prime_u64(n), trial_prime(n)) << n;
    // strong pseudoprimes to several small bases
    for (std::uint64_t n : {3215031751ULL, 2152302898747ULL, 3474749660383ULL, 341550071728321ULL,
                            3825123056546413051ULL})
        EXPECT_FALSE(is_prime_u64(n)) << n;
    EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));
    EXPECT_TRUE(is_probable_prime(ipow(BigInt(2), 127) - 1));
    EXPECT_FALSE(is_probable_prime(ipow(BigInt(2), 128) + 1));
}

TEST(IntFactor, RoundTripSmall) {
    for (std::uint64_t t = 1; t <= 100000; ++t) {
        const auto f = factor_int(t);
        ASSERT_EQ(f.value, t);
        ASSERT_EQ(f.product(), t);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            ASSERT_TRUE(trial_prime(static_cast<std::uint64_t>(f.factors[i].first)));
            if (i > 0) ASSERT_LT(f.factors[i - 1].first, f.factors[i].first);
        }
    }
}

TEST(IntFactor, RoundTripMersenne) {
    for (unsigned n = 1; n <= 64; ++n) {
        const BigInt m = ipow(BigInt(2), n) - 1;
        const auto f = factor_int(m);
        ASSERT_EQ(f.product(), m) << n;
        for (const auto& [p, e] : f.factors) ASSERT_TRUE(is_probable_prime(p)) << n;
    }
    // product of two 40-bit primes forces rho past trial division
    std::uint64_t p1 = (1ULL << 40) + 1, p2;
    while (!trial_prime(p1)) ++p1;
    p2 = p1 + 2;
    while (!trial_prime(p2)) ++p2;
    const BigInt semi = BigInt(p1) * BigInt(p2);
    const auto f = factor_int(semi);
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.product(), semi);
}

TEST(IntFactor, PhiMatchesSieve) {
    const auto table = oracle::phi_table(100000);
    for (std::uint64_t t = 1; t <= 100000; ++t) ASSERT_EQ(euler_phi_int(factor_int(t)), table[t]) << t;
}

TEST(IntFactor, WIsMultiplicative) {
    std::mt19937_64 rng(41);
    int checked = 0;
    while (checked < 2000) {
        const std::uint64_t a = 1 + rng() % 1000000, b = 1 + rng() % 1000000;
        if (std::gcd(a, b) != 1) continue;
        ASSERT_EQ(w_int(factor_int(BigInt(a) * b)), w_int(factor_int(a)) * w_int(factor_int(b)));
        ++checked;
    }
}

TEST(IntFactor, HintsParsing) {
    const auto table = hints_from("# comment\n11: 23 89\n\n  67: 193707721 # trailing\n");
    ASSERT_EQ(table.size(), 2u);
    EXPECT_EQ(table.at(11), (std::vector<BigInt>{23, 89}));
    EXPECT_EQ(table.at(67), (std::vector<BigInt>{193707721}));
    EXPECT_TRUE(hints_from("").empty());
    const auto bad = code_of([] { hints_from("11: 24 89\n"); });
    EXPECT_TRUE(bad == Errc::non_dividing_hint || bad == Errc::composite_hint);
    EXPECT_EQ(code_of([] { hints_from("11: 13\n"); }), Errc::non_dividing_hint);
    try {
        hints_from("# ok\n11: 23\nbogus line\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::malformed_hint_line);
        EXPECT_NE(std::string(e.what()).find('3'), std::string::npos);
    }
    EXPECT_EQ(code_of([] { hints_from("11 23\n"); }), Errc::malformed_hint_line);
    EXPECT_EQ(code_of([] { hints_from("x: 23\n"); }), Errc::malformed_hint_line);
}

TEST(IntFactor, HintsFromFile) {
    const auto path = std::filesystem::temp_directory_path() / "knormal_hints_test.txt";
    {
        std::ofstream out(path);
        out << "15: 7 31 151\n";
    }
    const auto table = load_factor_hints(path);
    std::filesystem::remove(path);
    EXPECT_EQ(table.at(15).size(), 3u);
}

TEST(IntFactor, IncompleteFactorizationIsReported) {
    const BigInt m67 = ipow(BigInt(2), 67) - 1;  // 193707721 * 761838257287
    IntFactorOptions tiny;
    tiny.rho_budget = 4;
    try {
        factor_int(m67, {}, tiny);
        FAIL() << "expected IncompleteFactorization";
    } catch (const IncompleteFactorization& e) {
        EXPECT_EQ(e.code(), Errc::incomplete_factorization);
        EXPECT_EQ(e.cofactor(), m67);
    }
    // a partial hint list leaves a prime cofactor, which needs no rho
    const std::vector<BigInt> hint{193707721};
    const auto f = factor_int(m67, hint, tiny);
    EXPECT_EQ(f.product(), m67);
    EXPECT_EQ(f.omega(), 2u);

    HintTable table{{67, {193707721}}};
    EXPECT_EQ(factor_group_order(2, 67, &table, tiny).omega(), 2u);
    EXPECT_EQ(code_of([&] { factor_group_order(2, 67, nullptr, tiny); }), Errc::incomplete_factorization);
}

TEST(IntFactor, CompositeHintRejected) {
    const std::vector<BigInt> hint{217};  // 7 * 31
    EXPECT_EQ(code_of([&] { factor_int(32767, hint); }), Errc::composite_hint);
}

TEST(IntFactor, Deterministic) {
    const BigInt m = ipow(BigInt(2), 62) - 1;
    const auto a = factor_int(m, {}, {.seed = 1});
    const auto b = factor_int(m, {}, {.seed = 2});
    EXPECT_EQ(a.factors, b.factors);
}
