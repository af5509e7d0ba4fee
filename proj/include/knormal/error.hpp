#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "knormal/bigint.hpp"

namespace knormal {

enum class Errc {
    not_prime,
    reducible_modulus,
    field_too_large,
    division_by_zero,
    level_mismatch,
    field_mismatch,
    zero_element,
    enumeration_too_large,
    both_zero,
    constant_polynomial,
    non_monic_input,
    incomplete_factorization,
    malformed_hint_line,
    non_dividing_hint,
    composite_hint,
    p_divides_n,
    even_n,
    hypothesis_not_met,
    invalid_argument,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

/// Raised when rho runs out of budget; carries the unfactored cofactor.
class IncompleteFactorization : public Error {
   public:
    explicit IncompleteFactorization(BigInt cofactor)
        : Error(Errc::incomplete_factorization, "could not split cofactor " + cofactor.str()),
          cofactor_(std::move(cofactor)) {}

    const BigInt& cofactor() const noexcept { return cofactor_; }

   private:
    BigInt cofactor_;
};

}  // namespace knormal
