#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knormal/paperverify.hpp"
#include "json.hpp"

namespace knormal {

inline constexpr const char* kVersion = "1.0.0";

/// Keys: claim_id, q, n (number, or [lo, hi] for a range), intermediates
/// (object; numbers when they fit in uint64, decimal strings otherwise),
/// verdict, and optionally note, expected_failure, out_of_paper.
nlohmann::ordered_json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::ordered_json& j);

/// {"claims": [...], "meta": {"version", "seed"}}
nlohmann::ordered_json claims_document(const std::vector<VerificationReport>& reports, std::uint64_t seed);
std::vector<VerificationReport> claims_from_document(const nlohmann::ordered_json& doc);

/// Aligned text table, one row per report.
std::string render_text(const std::vector<VerificationReport>& reports);

nlohmann::ordered_json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::ordered_json& j);

}  // namespace knormal
