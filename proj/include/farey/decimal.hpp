#pragma once

#include <string>
#include <string_view>

#include "farey/fraction.hpp"

namespace farey {

/// Parses a finite non-negative decimal such as "0.6180339887" or ".25" into
/// an exact rational. With allow_exponent, a trailing "e-4" / "E+2" is
/// accepted as well. Throws std::invalid_argument on anything else.
Rational parse_decimal(std::string_view text, bool allow_exponent = false);

/// Fixed-point rendering with `decimals` digits after the point, rounding half
/// to even.
std::string to_fixed(const Rational& r, unsigned decimals);

/// printf("%.*g")-style rendering computed exactly: `significant` digits,
/// trailing zeros trimmed, exponent form below 1e-4 or at/above 10^significant.
std::string to_general(const Rational& r, unsigned significant);

/// 10^n as an exact integer.
BigInt pow10(unsigned n);

}  // namespace farey
