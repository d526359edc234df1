#pragma once

#include "hrum/rational.hpp"

#include <optional>
#include <vector>

namespace hrum {

/// Dense equality system A x = b over exact rationals.
struct LinearSystem {
    std::vector<std::vector<Rational>> rows;  // A, one vector per equation
    std::vector<Rational> rhs;                // b
};

/// Finds x >= 0 with A x = b, or nullopt when none exists. Phase-one simplex
/// with Bland's rule on an exact tableau, so it terminates and decides
/// boundary cases (weights exactly zero) without rounding.
std::optional<std::vector<Rational>> find_nonnegative_solution(const LinearSystem& system);

}  // namespace hrum
