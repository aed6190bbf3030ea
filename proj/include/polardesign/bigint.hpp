#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_big(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// "a/b" or "a"; lowest terms.
inline std::string to_decimal(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

/// Parses "a" or "a/b" (b > 0). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Smallest integer >= x.
BigInt ceil_rational(const Rational& x);

/// ceil(log2(x)) for x >= 1, via bit length.
std::uint64_t ceil_log2(const BigInt& x);

}  // namespace polar
