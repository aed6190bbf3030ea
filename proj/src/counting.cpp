#include "polardesign/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace polar {

BigInt gaussian_binomial(long n, long k, const BigInt& p) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (p < 2) throw std::invalid_argument("gaussian_binomial needs p >= 2");
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long j = 1; j <= k; ++j) {
    // after step j the running value is [n j]_p, so the division is exact
    result *= pow_big(p, static_cast<std::uint64_t>(n - j + 1)) - 1;
    result /= pow_big(p, static_cast<std::uint64_t>(j)) - 1;
  }
  return result;
}

BigInt half_power(const PolarSpaceDescriptor& space, long twice_exponent) {
  if (twice_exponent < 0) throw std::invalid_argument("negative exponent in polar count");
  if (twice_exponent % 2 == 0) return pow_big(BigInt(space.order), static_cast<std::uint64_t>(twice_exponent / 2));
  if (!space.hermitian()) throw std::invalid_argument("half-integer exponent on a non-Hermitian space");
  return pow_big(BigInt(space.q), static_cast<std::uint64_t>(twice_exponent));
}

CountExpression polar_count_expression(const PolarSpaceDescriptor& space, unsigned k) {
  return polar_count_through_expression(space, 0, k);
}

BigInt polar_count(const PolarSpaceDescriptor& space, unsigned k) { return polar_count_expression(space, k).value; }

CountExpression polar_count_through_expression(const PolarSpaceDescriptor& space, unsigned t, unsigned k) {
  if (t > k || k > space.rank)
    throw std::invalid_argument("need t <= k <= n, got t = " + std::to_string(t) + ", k = " + std::to_string(k) +
                                ", n = " + std::to_string(space.rank));
  const long n = space.rank;
  CountExpression out;
  out.factors.push_back(gaussian_binomial(n - t, static_cast<long>(k) - t, BigInt(space.order)));
  for (long i = 0; i < static_cast<long>(k) - static_cast<long>(t); ++i)
    out.factors.push_back(half_power(space, 2 * (n - t - i) + space.twice_e) + 1);
  out.value = 1;
  for (const auto& f : out.factors) out.value *= f;
  return out;
}

BigInt polar_count_through(const PolarSpaceDescriptor& space, unsigned t, unsigned k) {
  return polar_count_through_expression(space, t, k).value;
}

BigInt intersection_pattern_count(const BigInt& p, long k, long t, long ell, long j) {
  const BigInt first = gaussian_binomial(t - ell, j - ell, p);
  const BigInt second = gaussian_binomial(k + ell - t, j, p);
  if (first == 0 || second == 0) return 0;
  // both binomials nonzero forces t >= j and k - t - j + ell >= 0
  const long exponent = (t - j) * (k - t - j + ell);
  return pow_big(p, static_cast<std::uint64_t>(exponent)) * first * second;
}

BigInt meeting_count(const BigInt& p, long ambient, long t, long k, long j) {
  const BigInt first = gaussian_binomial(t, j, p);
  const BigInt second = gaussian_binomial(ambient - t, k - j, p);
  if (first == 0 || second == 0) return 0;
  return pow_big(p, static_cast<std::uint64_t>((t - j) * (k - j))) * first * second;
}

LambdaRatio lambda_ratio(const PolarSpaceDescriptor& space, unsigned t, unsigned k, const BigInt& blocks) {
  if (t > k || k > space.rank) throw std::invalid_argument("lambda_ratio needs t <= k <= n");
  LambdaRatio out;
  out.value = Rational(blocks * polar_count_through(space, t, k), polar_count(space, k));
  const BigInt kt = gaussian_binomial(k, t, BigInt(space.order));
  out.simplified = Rational(blocks * kt, polar_count(space, t));
  out.equal = out.value == out.simplified;
  return out;
}

Rational tail_product(const PolarSpaceDescriptor& space, unsigned t) {
  Rational out = 1;
  const long n = space.rank;
  for (long i = 0; i < static_cast<long>(t); ++i) {
    const BigInt power = half_power(space, 2 * (n - i) + space.twice_e);
    out *= Rational(power + 1, power);
  }
  return out;
}

}  // namespace polar
