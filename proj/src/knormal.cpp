#include "knormal/knormal.hpp"

#include <string>

#include "knormal/error.hpp"

namespace knormal {

TopPoly g_alpha(const FieldTower& tower, const FieldElement& alpha) {
    const TopField& f = *tower.top_field();
    f.check(alpha);
    const unsigned n = f.n();
    std::vector<FieldElement> c(n, f.zero());
    FieldElement power = alpha;
    for (unsigned i = 0; i < n; ++i) {
        c[n - 1 - i] = power;
        power = f.frobenius(power, 1);
    }
    return TopPoly(tower.top_field(), std::move(c));
}

TopPoly lifted_x_pow_minus_one(const FieldTower& tower) {
    const TopField& f = *tower.top_field();
    std::vector<FieldElement> c(f.n() + 1, f.zero());
    c[0] = f.neg(f.one());
    c[f.n()] = f.add(c[f.n()], f.one());
    return TopPoly(tower.top_field(), std::move(c));
}

NormalityDegree normality_degree(const FieldTower& tower, const FieldElement& alpha) {
    TopPoly g = gcd(g_alpha(tower, alpha), lifted_x_pow_minus_one(tower));
    const auto k = static_cast<unsigned>(*g.degree());
    return {k, std::move(g)};
}

BasePoly frobenius_order_poly(const FieldTower& tower, const FieldElement& alpha) {
    const TopField& top = *tower.top_field();
    const BaseField& f = *tower.base_field();
    top.check(alpha);
    const unsigned n = top.n();

    struct Row {
        std::vector<std::uint32_t> vec;
        std::vector<std::uint32_t> combo;
        unsigned pivot;
    };
    std::vector<Row> rows;
    FieldElement power = alpha;
    for (unsigned i = 0; i <= n; ++i) {
        std::vector<std::uint32_t> v = power.coeffs;
        std::vector<std::uint32_t> combo(n + 1, 0);
        combo[i] = 1;
        for (const Row& row : rows) {
            if (v[row.pivot] == 0) continue;
            const auto c = f.div(v[row.pivot], row.vec[row.pivot]);
            for (unsigned j = 0; j < n; ++j) v[j] = f.sub(v[j], f.mul(c, row.vec[j]));
            for (unsigned j = 0; j <= n; ++j) combo[j] = f.sub(combo[j], f.mul(c, row.combo[j]));
        }
        unsigned pivot = 0;
        while (pivot < n && v[pivot] == 0) ++pivot;
        if (pivot == n) return BasePoly(tower.base_field(), std::move(combo));
        rows.push_back({std::move(v), std::move(combo), pivot});
        power = top.frobenius(power, 1);
    }
    throw Error(Errc::invalid_argument, "Frobenius orbit longer than n; field is malformed");
}

bool is_primitive(const FieldTower& tower, const FieldElement& alpha, const IntFactorization& group_order) {
    const TopField& f = *tower.top_field();
    f.check(alpha);
    if (f.is_zero(alpha)) return false;
    const FieldElement one = f.one();
    for (const auto& [r, e] : group_order.factors)
        if (f.pow(alpha, group_order.value / r) == one) return false;
    return true;
}

NormalityProfile normality_profile(const FieldTower& tower, const FieldElement& alpha,
                                   const IntFactorization& group_order) {
    auto g = g_alpha(tower, alpha);
    auto nd = normality_degree(tower, alpha);
    return {alpha, std::move(g), std::move(nd.certificate), nd.k, is_primitive(tower, alpha, group_order)};
}

CountResult count_knormal_formula(const BaseFieldPtr& base, unsigned n, unsigned k, const FactorOptions& options) {
    if (n == 0) throw Error(Errc::invalid_argument, "n must be positive");
    if (k > n) throw Error(Errc::invalid_argument, "k must satisfy 0 <= k <= n");
    CountResult out;
    out.q = base->q();
    out.n = n;
    out.k = k;
    const Factorization fac = factor(x_pow_minus_one(base, n), options);
    const BigInt q = base->q();
    for_each_divisor_exponents(fac, n - k, [&](std::span<const unsigned> exps) {
        BigInt phi = 1;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            const std::size_t d = fac.factors[i].first.size() - 1;
            phi *= ipow(q, d * exps[i]) - ipow(q, d * (exps[i] - 1));
        }
        out.formula_count += phi;
        out.divisors_used.emplace_back(divisor_from_exponents(base, fac, exps), phi);
    });
    return out;
}

std::vector<std::uint64_t> normality_histogram(const FieldTower& tower, std::uint64_t cutoff) {
    std::vector<std::uint64_t> hist(tower.n() + 1, 0);
    for (const FieldElement& a : enumerate_elements(tower, cutoff)) ++hist[normality_degree(tower, a).k];
    return hist;
}

BigInt count_knormal_bruteforce(const FieldTower& tower, unsigned k, std::uint64_t cutoff) {
    if (k > tower.n()) throw Error(Errc::invalid_argument, "k must satisfy 0 <= k <= n");
    std::uint64_t count = 0;
    for (const FieldElement& a : enumerate_elements(tower, cutoff))
        if (normality_degree(tower, a).k == k) ++count;
    return count;
}

SearchResult search_knormal(const FieldTower& tower, const SearchQuery& query, const IntFactorization* group_order) {
    if (query.k > tower.n()) throw Error(Errc::invalid_argument, "k must satisfy 0 <= k <= n");
    auto elements = enumerate_elements(tower, query.cutoff);
    std::optional<IntFactorization> owned;
    if (query.require_primitive && group_order == nullptr) {
        owned = factor_group_order(tower.q(), tower.n());
        group_order = &*owned;
    }
    const TopField& f = *tower.top_field();
    SearchResult result;
    for (const FieldElement& a : elements) {
        if (f.is_zero(a)) continue;
        if (query.require_primitive && !is_primitive(tower, a, *group_order)) continue;
        if (normality_degree(tower, a).k != query.k) continue;
        ++result.count;
        if (query.mode != SearchMode::count) result.elements.push_back(a);
        if (query.mode == SearchMode::first) break;
    }
    return result;
}

SearchResult search_primitive_knormal(const FieldTower& tower, unsigned k, SearchMode mode,
                                      const IntFactorization& group_order, std::uint64_t cutoff) {
    return search_knormal(tower, {k, true, mode, cutoff}, &group_order);
}

}  // namespace knormal
