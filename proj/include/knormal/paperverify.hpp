#pragma once

// Exact-integer checks of the sieve machinery for primitive 1-normal elements
// over F_2, and the reports they produce.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knormal/bigint.hpp"
#include "knormal/intfactor.hpp"
#include "knormal/polyring.hpp"

namespace knormal {

enum class Verdict { holds, fails, skipped };

struct VerificationReport {
    std::string claim_id;
    std::uint64_t q = 2;
    /// One entry for a single n, two for an inclusive range.
    std::vector<unsigned> n;
    std::vector<std::pair<std::string, BigInt>> intermediates;
    Verdict verdict = Verdict::skipped;
    /// Skip reason or explanation of a failure.
    std::string note;
    /// The failure is anticipated by a stated hypothesis (e.g. the n = 15 exclusion).
    bool expected_failure = false;
    /// Parameters outside the range the claim is made for.
    bool out_of_paper = false;

    const BigInt& intermediate(const std::string& name) const;
    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
    std::uint64_t cutoff = kDefaultCutoff;
    const HintTable* hints = nullptr;
    IntFactorOptions int_options;
    FactorOptions poly_options;
};

/// W(T) W(q^n - 1) < q^(n/2 - 1), decided as (W(T) W(q^n - 1))^2 q^2 < q^n.
/// Throws p_divides_n, invalid_argument (n < 2), IncompleteFactorization.
VerificationReport sieve_check(std::uint64_t q, unsigned n, const VerifyOptions& options = {});

/// Over F_2, n odd >= 3: 5 r <= n + 9 with r the number of distinct irreducible
/// factors of T, plus no linear factor and s2 <= 1, s3 <= 2, s4 <= 3. Throws even_n.
VerificationReport proposition_bound_check(unsigned n, const VerifyOptions& options = {});

/// 7 omega(2^n - 1) < n + 14 for odd n. Throws even_n, IncompleteFactorization.
VerificationReport cohen_bound_check(unsigned n, const VerifyOptions& options = {});

/// 14(n+9) + 10n + 140 < 35n - 70, the scaled form of (n+9)/5 + n/7 + 2 < n/2 - 1.
VerificationReport analytic_exponent_check(unsigned n);

/// Sieve check over F_2 for each odd n in [lo, hi]; per-n errors become skipped
/// reports. n = 15 failing is flagged as expected, n <= 9 as out_of_paper.
/// Analytic checks are appended for n >= 31.
std::vector<VerificationReport> corollary_scan(unsigned lo, unsigned hi, const VerifyOptions& options = {});

/// phi(2^n - 1) + Phi_2(T) > 2^n, confirmed by search when 2^n <= cutoff.
/// n outside {3, 5, 7, 9, 15} is flagged out_of_paper. Throws even_n.
VerificationReport final_theorem_check(unsigned n, const VerifyOptions& options = {});

/// Existence of a primitive 1-normal element of F_{q^n} by search, for (q, n)
/// meeting the hypotheses n >= 3 when 3 <= q <= 9, n >= 6 when q >= 11, p not dividing n.
/// Throws p_divides_n, hypothesis_not_met, enumeration_too_large.
VerificationReport theorem12_spot_check(std::uint64_t q, unsigned n, const VerifyOptions& options = {});

/// Primitive 1-normal count in F_{q^2} is zero (odd q > 3; other q flagged out_of_paper).
VerificationReport nonexistence_check(std::uint64_t q, const VerifyOptions& options = {});

/// Monic irreducible counts over F_2 in degrees 2, 3, 4 are 1, 2, 3.
VerificationReport irreducible_counts_check(const VerifyOptions& options = {});

/// Pairs checked by verify-paper with theorem12_spot_check.
const std::vector<std::pair<std::uint64_t, unsigned>>& theorem12_spot_list();

struct ReplicationOptions {
    unsigned n_max = 63;
    unsigned proposition_max = 201;
    VerifyOptions verify;
};

std::vector<VerificationReport> replicate_paper(const ReplicationOptions& options = {});

enum class ExitStatus : int { ok = 0, claim_failure = 1, usage = 2, resource_limit = 3 };

/// claim_failure if a report fails that is neither expected nor out_of_paper; otherwise
/// resource_limit if anything was skipped and skips are not allowed.
ExitStatus summarize(const std::vector<VerificationReport>& reports, bool allow_skip);

/// First report responsible for a nonzero summarize() status.
const VerificationReport* first_problem(const std::vector<VerificationReport>& reports, bool allow_skip);

std::string_view verdict_name(Verdict v);

}  // namespace knormal
