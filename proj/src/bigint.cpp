#include "polardesign/bigint.hpp"

#include <stdexcept>

namespace polar {

namespace {

BigInt parse_integer(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::size_t start = text[0] == '-' || text[0] == '+' ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed number '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("malformed number '" + text + "'");
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("denominator must be positive in '" + text + "'");
  return Rational(num, den);
}

BigInt ceil_rational(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;  // truncates toward zero
  if (q * den < num) ++q;
  return q;
}

std::uint64_t ceil_log2(const BigInt& x) {
  if (x < 1) throw std::invalid_argument("ceil_log2 needs x >= 1");
  if (x == 1) return 0;
  const BigInt y = x - 1;
  return boost::multiprecision::msb(y) + 1;
}

}  // namespace polar
