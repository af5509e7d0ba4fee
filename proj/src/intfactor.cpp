#include "knormal/intfactor.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "knormal/error.hpp"

namespace knormal {

namespace {

using u128 = unsigned __int128;
using boost::multiprecision::gcd;
using boost::multiprecision::powm;

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

constexpr std::uint32_t kWitnesses[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                        41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

bool miller_rabin_big(const BigInt& n) {
    BigInt d = n - 1;
    unsigned s = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    for (std::uint32_t a : kWitnesses) {
        BigInt x = powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t seed_for(const BigInt& n, std::uint64_t seed) {
    return seed ^ static_cast<std::uint64_t>(n & 0xffffffffffffffffULL) ^ (static_cast<std::uint64_t>(boost::multiprecision::msb(n)) << 56);
}

// Brent's cycle finding with batched gcds. Returns a nontrivial factor or 0.
std::uint64_t rho_u64(std::uint64_t n, std::uint64_t& budget, std::mt19937_64& rng) {
    if (n % 2 == 0) return 2;
    constexpr std::uint64_t kBatch = 128;
    while (budget > 0) {
        const std::uint64_t c = rng() % (n - 1) + 1;
        auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t y = rng() % n, x = y, ys = y, g = 1, q = 1;
        for (std::uint64_t r = 1; g == 1 && budget > 0; r <<= 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            budget = budget > r ? budget - r : 0;
            for (std::uint64_t k = 0; k < r && g == 1 && budget > 0; k += kBatch) {
                ys = y;
                const std::uint64_t steps = std::min(kBatch, r - k);
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                budget = budget > steps ? budget - steps : 0;
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            // batch overshot; step back one at a time
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

BigInt rho_big(const BigInt& n, std::uint64_t& budget, std::mt19937_64& rng) {
    if (!boost::multiprecision::bit_test(n, 0)) return 2;
    constexpr std::uint64_t kBatch = 128;
    auto random_below = [&](const BigInt& bound) {
        BigInt r = 0;
        for (unsigned i = 0; i <= boost::multiprecision::msb(bound) / 64; ++i) r = (r << 64) | rng();
        return r % bound;
    };
    while (budget > 0) {
        const BigInt c = random_below(n - 1) + 1;
        auto f = [&](const BigInt& x) { return (x * x + c) % n; };
        BigInt y = random_below(n), x = y, ys = y, g = 1, q = 1;
        for (std::uint64_t r = 1; g == 1 && budget > 0; r <<= 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            budget = budget > r ? budget - r : 0;
            for (std::uint64_t k = 0; k < r && g == 1 && budget > 0; k += kBatch) {
                ys = y;
                const std::uint64_t steps = std::min(kBatch, r - k);
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = f(y);
                    q = q * (x > y ? BigInt(x - y) : BigInt(y - x)) % n;
                }
                budget = budget > steps ? budget - steps : 0;
                g = gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(x > ys ? BigInt(x - ys) : BigInt(ys - x), n);
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    if (auto small = to_u64(n)) return is_prime_u64(*small);
    for (std::uint32_t p : kWitnesses)
        if (n % p == 0) return false;
    return miller_rabin_big(n);
}

BigInt IntFactorization::product() const {
    BigInt r = 1;
    for (const auto& [p, e] : factors) r *= ipow(p, e);
    return r;
}

IntFactorization factor_int(const BigInt& t, std::span<const BigInt> hints, const IntFactorOptions& options) {
    if (t < 1) throw Error(Errc::invalid_argument, "factor_int needs t >= 1, got " + t.str());
    std::map<BigInt, unsigned> found;
    BigInt rest = t;
    for (const BigInt& h : hints) {
        if (!is_probable_prime(h)) throw Error(Errc::composite_hint, "hint " + h.str() + " is not prime");
        while (rest % h == 0) {
            rest /= h;
            ++found[h];
        }
    }
    for (std::uint32_t p : small_primes()) {
        if (BigInt(p) * p > rest) break;
        if (auto small = to_u64(rest)) {
            std::uint64_t r = *small;
            while (r % p == 0) {
                r /= p;
                ++found[BigInt(p)];
            }
            rest = r;
        } else {
            while (rest % p == 0) {
                rest /= p;
                ++found[BigInt(p)];
            }
        }
    }

    std::vector<BigInt> pending;
    if (rest > 1) pending.push_back(rest);
    while (!pending.empty()) {
        BigInt n = std::move(pending.back());
        pending.pop_back();
        if (is_probable_prime(n)) {
            ++found[n];
            continue;
        }
        std::mt19937_64 rng(seed_for(n, options.seed));
        std::uint64_t budget = options.rho_budget;
        BigInt d = 0;
        if (auto small = to_u64(n)) {
            d = rho_u64(*small, budget, rng);
        } else {
            d = rho_big(n, budget, rng);
        }
        if (d == 0) throw IncompleteFactorization(n);
        pending.push_back(n / d);
        pending.push_back(d);
    }

    IntFactorization out;
    out.value = t;
    for (auto& [p, e] : found) out.factors.emplace_back(p, e);
    return out;
}

BigInt euler_phi_int(const IntFactorization& f) {
    BigInt r = 1;
    for (const auto& [p, e] : f.factors) r *= ipow(p, e - 1) * (p - 1);
    return r;
}

BigInt w_int(const IntFactorization& f) { return BigInt(1) << f.omega(); }

HintTable load_factor_hints(std::istream& in) {
    HintTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto colon = line.find(':');
        auto malformed = [&]() {
            return Error(Errc::malformed_hint_line, "line " + std::to_string(lineno) + ": '" + line + "'");
        };
        if (colon == std::string::npos) throw malformed();
        unsigned n = 0;
        try {
            const BigInt nn = parse_bigint(line.substr(0, colon));
            if (nn < 1 || nn > 1'000'000) throw malformed();
            n = static_cast<unsigned>(nn);
        } catch (const Error&) {
            throw malformed();
        }
        const BigInt mersenne = (BigInt(1) << n) - 1;
        std::istringstream rest(line.substr(colon + 1));
        std::string tok;
        auto& entry = table[n];
        while (rest >> tok) {
            BigInt p;
            try {
                p = parse_bigint(tok);
            } catch (const Error&) {
                throw malformed();
            }
            if (p < 2 || mersenne % p != 0)
                throw Error(Errc::non_dividing_hint, p.str() + " does not divide 2^" + std::to_string(n) + "-1");
            if (!is_probable_prime(p))
                throw Error(Errc::composite_hint, p.str() + " (hint for n=" + std::to_string(n) + ") is not prime");
            if (std::find(entry.begin(), entry.end(), p) == entry.end()) entry.push_back(p);
        }
    }
    return table;
}

HintTable load_factor_hints(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_argument, "cannot open hints file " + path.string());
    return load_factor_hints(in);
}

IntFactorization factor_group_order(const BigInt& q, unsigned n, const HintTable* hints,
                                    const IntFactorOptions& options) {
    const BigInt t = ipow(q, n) - 1;
    std::vector<BigInt> use;
    if (hints != nullptr && q == 2) {
        // 2^d - 1 divides 2^n - 1 whenever d | n
        for (const auto& [d, primes] : *hints)
            if (d != 0 && n % d == 0) use.insert(use.end(), primes.begin(), primes.end());
    }
    return factor_int(t, use, options);
}

}  // namespace knormal
