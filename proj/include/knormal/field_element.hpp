#pragma once

#include <cstdint>
#include <vector>

namespace knormal {

enum class Level { prime, base, top };

/// An element of one level of the tower F_p < F_q < F_{q^n}, as a fixed-width
/// coefficient vector over the level below:
///   prime: {residue}
///   base:  e digits over F_p (coefficients of 1, y, ..., y^{e-1})
///   top:   n base-field codes (coefficients of 1, z, ..., z^{n-1})
struct FieldElement {
    Level level = Level::top;
    std::vector<std::uint32_t> coeffs;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

}  // namespace knormal
