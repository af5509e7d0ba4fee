#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace knormal {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultSeed = 0x6b6e6f726d616cULL;
inline constexpr std::uint64_t kDefaultCutoff = std::uint64_t{1} << 20;

BigInt ipow(const BigInt& base, std::uint64_t exp);

/// Value as uint64 when it fits, nullopt otherwise (including negatives).
std::optional<std::uint64_t> to_u64(const BigInt& v);

/// Parses a non-negative decimal integer; throws Error(invalid_argument).
BigInt parse_bigint(const std::string& text);

}  // namespace knormal
