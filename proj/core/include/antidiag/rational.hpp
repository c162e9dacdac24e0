#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace antidiag {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

/// "p/q" in lowest terms, or just "p" when the denominator is one.
std::string to_fraction_string(const Rational& value);

/// Inverse of to_fraction_string; accepts "p", "-p" and "p/q".
Rational parse_fraction(std::string_view text);

double to_double(const Rational& value);

/// Fixed-point rendering with the given number of decimals (rounded half away from zero).
std::string to_decimal_string(const Rational& value, int decimals = 6);

}  // namespace antidiag
