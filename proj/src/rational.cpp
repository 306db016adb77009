#include "chctk/rational.hpp"

#include <algorithm>

namespace chctk {

std::optional<BigRat> parseDecimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string intPart, fracPart;
  std::size_t dot = text.find('.');
  if (dot == std::string_view::npos) {
    intPart = std::string(text);
  } else {
    intPart = std::string(text.substr(0, dot));
    fracPart = std::string(text.substr(dot + 1));
    if (fracPart.empty()) return std::nullopt;
  }
  if (intPart.empty()) return std::nullopt;
  auto isDigits = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!isDigits(intPart) || !isDigits(fracPart)) return std::nullopt;

  // Strip leading zeros; cpp_int would read them as an octal prefix.
  std::string digits = intPart + fracPart;
  std::size_t firstNonZero = digits.find_first_not_of('0');
  BigInt num =
      firstNonZero == std::string::npos ? 0 : BigInt(digits.substr(firstNonZero));
  BigInt den = 1;
  for (std::size_t i = 0; i < fracPart.size(); ++i) den *= 10;
  return BigRat(num, den);
}

BigRat roundTo2(const BigRat& value) {
  // floor(100v + 1/2) / 100
  BigRat scaled = value * 100 + BigRat(1, 2);
  BigInt floored = boost::multiprecision::numerator(scaled) /
                   boost::multiprecision::denominator(scaled);
  return BigRat(floored, 100);
}

std::string fixed2(const BigRat& value) {
  BigRat scaled = value * 100 + BigRat(1, 2);
  BigInt cents = boost::multiprecision::numerator(scaled) /
                 boost::multiprecision::denominator(scaled);
  BigInt whole = cents / 100;
  BigInt frac = cents % 100;
  std::string fracStr = frac.str();
  if (fracStr.size() < 2) fracStr.insert(0, 2 - fracStr.size(), '0');
  return whole.str() + "." + fracStr;
}

std::string decimalString(const BigRat& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  unsigned twos = 0, fives = 0;
  BigInt d = den;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  unsigned k = std::max(twos, fives);
  BigInt scaled = num;
  for (unsigned i = twos; i < k; ++i) scaled *= 2;
  for (unsigned i = fives; i < k; ++i) scaled *= 5;
  std::string digits = scaled.str();
  if (k == 0) return digits;
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  return digits;
}

}  // namespace chctk
