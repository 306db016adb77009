#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "chctk/term.hpp"  // BigInt / BigRat aliases

namespace chctk {

/// Parses a non-negative decimal like "6.03" or "1800" into an exact
/// rational. Returns nullopt on malformed input.
std::optional<BigRat> parseDecimal(std::string_view text);

/// Rounds half-up to two decimal places (values are non-negative throughout
/// the scoring pipeline).
BigRat roundTo2(const BigRat& value);

/// Renders with exactly two decimal places after half-up rounding: "6.03".
std::string fixed2(const BigRat& value);

/// Shortest exact decimal rendering, used when writing times back out.
/// Requires a denominator of the form 2^a * 5^b (always true for values
/// parsed from decimal text).
std::string decimalString(const BigRat& value);

}  // namespace chctk
