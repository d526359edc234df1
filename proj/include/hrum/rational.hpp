#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hrum {

/// Exact rational number. Every probability in the library is one of these.
using Rational = mpq_class;

/// Parses an exact rational from `a/b`, an integer, or a finite decimal with
/// an optional exponent (`0.3`, `-1.25`, `1e-9`). No rounding takes place.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical rendering: `a/b` in lowest terms, or `a` when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal rendering rounded half away from zero to `digits` fractional digits.
std::string to_decimal(const Rational& value, int digits);

/// Equality test used throughout detection. The default is exact comparison;
/// a positive epsilon relaxes every equality to |lhs - rhs| <= epsilon.
class Tolerance {
public:
    Tolerance() = default;
    explicit Tolerance(Rational epsilon);

    bool exact() const { return epsilon_ == 0; }
    const Rational& epsilon() const { return epsilon_; }

    bool equal(const Rational& lhs, const Rational& rhs) const;

private:
    Rational epsilon_{0};
};

}  // namespace hrum
