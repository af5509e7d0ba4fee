#include "knormal/bigint.hpp"

#include <cctype>

#include "knormal/error.hpp"

namespace knormal {

BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

std::optional<std::uint64_t> to_u64(const BigInt& v) {
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return static_cast<std::uint64_t>(v);
}

BigInt parse_bigint(const std::string& text) {
    std::size_t b = text.find_first_not_of(" \t\r\n");
    std::size_t e = text.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw Error(Errc::invalid_argument, "empty integer");
    BigInt v = 0;
    for (std::size_t i = b; i <= e; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error(Errc::invalid_argument, "not a non-negative integer: '" + text + "'");
        v = v * 10 + (text[i] - '0');
    }
    return v;
}

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::not_prime: return "NotPrime";
        case Errc::reducible_modulus: return "ReducibleModulus";
        case Errc::field_too_large: return "FieldTooLarge";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::level_mismatch: return "LevelMismatch";
        case Errc::field_mismatch: return "FieldMismatch";
        case Errc::zero_element: return "ZeroElement";
        case Errc::enumeration_too_large: return "EnumerationTooLarge";
        case Errc::both_zero: return "BothZero";
        case Errc::constant_polynomial: return "ConstantPolynomial";
        case Errc::non_monic_input: return "NonMonicInput";
        case Errc::incomplete_factorization: return "IncompleteFactorization";
        case Errc::malformed_hint_line: return "MalformedHintLine";
        case Errc::non_dividing_hint: return "NonDividingHint";
        case Errc::composite_hint: return "CompositeHint";
        case Errc::p_divides_n: return "PDividesN";
        case Errc::even_n: return "EvenN";
        case Errc::hypothesis_not_met: return "HypothesisNotMet";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace knormal
