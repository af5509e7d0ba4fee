#include <gtest/gtest.h>

#include "knormal/knormal.hpp"
#include "oracles.hpp"

using namespace knormal;

namespace {

FieldElement top(std::vector<std::uint32_t> c) { return {Level::top, std::move(c)}; }

std::vector<std::pair<std::uint64_t, unsigned>> fields_up_to(std::initializer_list<std::uint64_t> qs,
                                                             std::uint64_t limit) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (auto q : qs)
        for (unsigned n = 1; ipow(BigInt(q), n) <= limit; ++n) out.emplace_back(q, n);
    return out;
}

FieldTower tower_for(std::uint64_t q, unsigned n, const ModuliOverride& o = {}) {
    const auto b = BaseField::for_order(q);
    return FieldTower::build(b->p(), b->e(), n, o);
}

}  // namespace

TEST(Knormal, GAlphaExamples) {
    const auto t = FieldTower::build(2, 1, 3);
    EXPECT_TRUE(g_alpha(t, t.zero(Level::top)).is_zero());
    const auto g1 = g_alpha(t, t.one(Level::top));
    ASSERT_EQ(g1.size(), 3u);
    for (const auto& c : g1.coeffs()) EXPECT_EQ(c, t.one(Level::top));
    const auto gz = g_alpha(t, top({0, 1, 0}));
    ASSERT_EQ(gz.size(), 3u);
    EXPECT_EQ(gz.coeff(2), top({0, 1, 0}));
    EXPECT_EQ(gz.coeff(1), top({0, 0, 1}));
    EXPECT_EQ(gz.coeff(0), top({0, 1, 1}));
}

TEST(Knormal, NormalityDegreeExamples) {
    const auto t = FieldTower::build(2, 1, 3);
    const auto one = normality_degree(t, t.one(Level::top));
    EXPECT_EQ(one.k, 2u);
    ASSERT_EQ(one.certificate.size(), 3u);
    for (const auto& c : one.certificate.coeffs()) EXPECT_EQ(c, t.one(Level::top));
    EXPECT_EQ(normality_degree(t, t.zero(Level::top)).k, 3u);
    EXPECT_EQ(normality_histogram(t), (std::vector<std::uint64_t>{3, 3, 1, 1}));
    EXPECT_EQ(normality_degree(FieldTower::build(3, 1, 5), FieldTower::build(3, 1, 5).zero(Level::top)).k, 5u);
}

TEST(Knormal, FrobeniusOrderPolyExamples) {
    const auto t = FieldTower::build(2, 1, 3);
    const auto f2 = t.base_field();
    EXPECT_TRUE(frobenius_order_poly(t, t.zero(Level::top)).is_one());
    EXPECT_EQ(frobenius_order_poly(t, t.one(Level::top)), BasePoly(f2, {1, 1}));
    int normal = 0;
    for (const auto& a : enumerate_elements(t)) {
        if (normality_degree(t, a).k != 0) continue;
        ++normal;
        EXPECT_EQ(frobenius_order_poly(t, a), x_pow_minus_one(f2, 3));
    }
    EXPECT_EQ(normal, 3);
    const auto t5 = FieldTower::build(5, 1, 2);
    EXPECT_EQ(frobenius_order_poly(t5, t5.one(Level::top)), BasePoly(t5.base_field(), {4, 1}));
}

TEST(Knormal, PrimitivityExamples) {
    const auto t = FieldTower::build(2, 1, 3);
    const auto g = factor_group_order(2, 3);
    EXPECT_FALSE(is_primitive(t, t.one(Level::top), g));
    EXPECT_FALSE(is_primitive(t, t.zero(Level::top), g));
    int count = 0;
    for (const auto& a : enumerate_elements(t)) count += is_primitive(t, a, g);
    EXPECT_EQ(count, 6);
    const auto prof = normality_profile(t, top({0, 1, 0}), g);
    EXPECT_TRUE(prof.is_primitive);
    EXPECT_EQ(prof.k, prof.gcd_with_cyclo.degree().value_or(0));
}

TEST(Knormal, CountFormulaExamples) {
    const auto f2 = BaseField::prime(2);
    const auto c231 = count_knormal_formula(f2, 3, 1);
    EXPECT_EQ(c231.formula_count, 3);
    ASSERT_EQ(c231.divisors_used.size(), 1u);
    EXPECT_EQ(c231.divisors_used[0].first, BasePoly(f2, {1, 1, 1}));
    EXPECT_EQ(count_knormal_formula(f2, 3, 0).formula_count, phi_poly(x_pow_minus_one(f2, 3)));
    EXPECT_EQ(count_knormal_formula(f2, 3, 0).formula_count, 3);
    for (std::uint64_t q : {2u, 3u, 4u, 9u})
        for (unsigned n : {1u, 4u, 6u}) EXPECT_EQ(count_knormal_formula(BaseField::for_order(q), n, n).formula_count, 1);
    const auto c291 = count_knormal_formula(f2, 9, 1);
    EXPECT_GE(c291.formula_count, 189);
    EXPECT_EQ(phi_poly(cyclotomic_cofactor(f2, 9)), 189);
    BigInt sum = 0;
    for (const auto& [h, phi] : c291.divisors_used) sum += phi;
    EXPECT_EQ(sum, c291.formula_count);
}

TEST(Knormal, BruteforceExamples) {
    const auto t = FieldTower::build(2, 1, 3);
    EXPECT_EQ(count_knormal_bruteforce(t, 1), 3);
    EXPECT_EQ(count_knormal_bruteforce(t, 3), 1);
    BigInt sum = 0;
    for (unsigned k = 0; k <= 3; ++k) sum += count_knormal_bruteforce(t, k);
    EXPECT_EQ(sum, 8);
}

TEST(Knormal, FormulaMatchesBruteforce) {
    for (const auto& [q, n] : fields_up_to({2, 3, 4, 5}, 1024)) {
        const auto t = tower_for(q, n);
        const auto hist = normality_histogram(t);
        for (unsigned k = 0; k <= n; ++k)
            ASSERT_EQ(count_knormal_formula(t.base_field(), n, k).formula_count, hist[k]) << q << " " << n << " " << k;
    }
}

TEST(Knormal, PartitionIdentity) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u}) {
        const auto b = BaseField::for_order(q);
        for (unsigned n = 1; n <= 12; ++n) {
            BigInt sum = 0;
            for (unsigned k = 0; k <= n; ++k) sum += count_knormal_formula(b, n, k).formula_count;
            ASSERT_EQ(sum, ipow(BigInt(q), n)) << q << " " << n;
            ASSERT_EQ(count_knormal_formula(b, n, 0).formula_count, phi_poly(x_pow_minus_one(b, n)));
        }
    }
}

TEST(Knormal, FrobeniusInvarianceAndDuality) {
    for (const auto& [q, n] : fields_up_to({2, 3, 4, 5, 7, 9}, 1024)) {
        const auto t = tower_for(q, n);
        const auto x_n = x_pow_minus_one(t.base_field(), n);
        for (const auto& a : enumerate_elements(t)) {
            const auto nd = normality_degree(t, a);
            ASSERT_EQ(normality_degree(t, t.frobenius(a, 1)).k, nd.k);
            const auto m = frobenius_order_poly(t, a);
            ASSERT_EQ(*m.degree() + nd.k, n);
            ASSERT_TRUE((x_n % m).is_zero());
            ASSERT_TRUE(nd.certificate.is_monic());
        }
    }
}

TEST(Knormal, RepresentationIndependence) {
    for (const auto& [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 6}, {2, 8}, {3, 4}, {4, 3}, {5, 3}}) {
        const auto a = tower_for(q, n);
        // second-smallest monic irreducible of degree n over F_q
        const auto b = a.base_field();
        std::optional<std::vector<std::uint32_t>> other;
        for (std::uint64_t code = 0; !other; ++code) {
            std::vector<std::uint32_t> c(n + 1);
            std::uint64_t v = code;
            for (unsigned i = 0; i < n; ++i) {
                c[i] = static_cast<std::uint32_t>(v % q);
                v /= q;
            }
            c[n] = 1;
            if (c != a.top_modulus().coeffs() && is_irreducible(BasePoly(b, c))) other = c;
        }
        ModuliOverride o;
        o.top = other;
        if (q == 4) o.base = std::vector<std::uint32_t>{1, 1, 1};
        const auto t2 = tower_for(q, n, o);
        ASSERT_NE(t2.top_modulus().coeffs(), a.top_modulus().coeffs());
        EXPECT_EQ(normality_histogram(a), normality_histogram(t2));
        const auto g = factor_group_order(q, n);
        for (unsigned k = 0; k <= n; ++k)
            EXPECT_EQ(search_primitive_knormal(a, k, SearchMode::count, g).count,
                      search_primitive_knormal(t2, k, SearchMode::count, g).count);
    }
}

TEST(Knormal, SearchExamples) {
    const auto t = FieldTower::build(2, 1, 3);
    const auto first = search_knormal(t, {.k = 1, .require_primitive = true, .mode = SearchMode::first});
    ASSERT_EQ(first.elements.size(), 1u);
    EXPECT_EQ(normality_degree(t, first.elements[0]).k, 1u);
    EXPECT_TRUE(is_primitive(t, first.elements[0], factor_group_order(2, 3)));

    const auto f25 = FieldTower::build(5, 1, 2);
    EXPECT_EQ(search_knormal(f25, {.k = 1, .mode = SearchMode::count}).count, 0u);

    // F_4: elements of order 3 are z and z+1; 1-normal means gcd(g, x^2+1) = x+1,
    // i.e. alpha + alpha^2 = 0, i.e. alpha in F_2. So none of them.
    const auto f4 = FieldTower::build(2, 1, 2);
    std::uint64_t brute = 0;
    const auto g4 = factor_group_order(2, 2);
    for (const auto& a : enumerate_elements(f4)) {
        if (f4.top_field()->is_zero(a)) continue;
        const auto sum = f4.arith(a, f4.frobenius(a, 1), ArithOp::add);
        const bool one_normal = f4.top_field()->is_zero(sum) && !f4.top_field()->is_zero(a);
        brute += one_normal && multiplicative_order(f4, a, g4) == 3;
    }
    EXPECT_EQ(search_knormal(f4, {.k = 1, .mode = SearchMode::count}).count, brute);

    EXPECT_EQ(search_knormal(t, {.k = 0, .require_primitive = false, .mode = SearchMode::count}).count, 3u);
    const auto all = search_knormal(t, {.k = 0, .require_primitive = false, .mode = SearchMode::all});
    EXPECT_EQ(all.elements.size(), 3u);
    EXPECT_EQ(search_knormal(t, {.k = 3, .require_primitive = false, .mode = SearchMode::count}).count, 0u);

    const auto big = FieldTower::build(2, 1, 25);
    EXPECT_THROW(search_knormal(big, {}), Error);
}
