#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polardesign/bigint.hpp"
#include "polardesign/geometry.hpp"

namespace polar {

/// An exact count with the factors that produced it (for reports).
struct CountExpression {
  BigInt value;
  std::vector<BigInt> factors;
};

/// [n k]_p = prod_{j=1}^k (p^{n-j+1} - 1) / (p^j - 1); zero when k > n or
/// either argument is negative.
BigInt gaussian_binomial(long n, long k, const BigInt& p);

/// p^{twice_exponent / 2}. Odd exponents are only defined for Hermitian
/// descriptors, where p = q^2 and the value is q^{twice_exponent}.
BigInt half_power(const PolarSpaceDescriptor& space, long twice_exponent);

/// Number of totally isotropic k-spaces:
/// [n k]_p * prod_{i=0}^{k-1} (p^{n-i+e} + 1).
BigInt polar_count(const PolarSpaceDescriptor& space, unsigned k);
CountExpression polar_count_expression(const PolarSpaceDescriptor& space, unsigned k);

/// Number of totally isotropic k-spaces through a fixed t-space:
/// [n-t k-t]_p * prod_{i=0}^{k-t-1} (p^{n-t-i+e} + 1).
BigInt polar_count_through(const PolarSpaceDescriptor& space, unsigned t, unsigned k);
CountExpression polar_count_through_expression(const PolarSpaceDescriptor& space, unsigned t, unsigned k);

/// Inside a (k+t)-space W with t-spaces V, V' meeting in dimension ell: the
/// number of k-spaces U of W with V' <= U and dim(U cap V) = j,
///   p^{(t-j)(k-t-j+ell)} [t-ell j-ell]_p [k+ell-t j]_p.
/// Out-of-range arguments give 0 through a vanishing binomial.
BigInt intersection_pattern_count(const BigInt& p, long k, long t, long ell, long j);

/// Number of k-subspaces U of an N-dimensional space meeting a fixed
/// t-subspace in dimension exactly j: p^{(t-j)(k-j)} [t j]_p [N-t k-j]_p.
BigInt meeting_count(const BigInt& p, long ambient, long t, long k, long j);

struct LambdaRatio {
  Rational value;       // N * polar_count_through(t,k) / polar_count(k)
  Rational simplified;  // N * [k t]_p / ([n t]_p prod_{i<t} (p^{n-i+e} + 1))
  bool equal = false;
};

/// lambda for a block set of size N. Throws std::invalid_argument unless
/// t <= k <= n.
LambdaRatio lambda_ratio(const PolarSpaceDescriptor& space, unsigned t, unsigned k, const BigInt& blocks);

/// prod_{i=0}^{t-1} (1 + p^{-(n-i+e)}) as an exact rational.
Rational tail_product(const PolarSpaceDescriptor& space, unsigned t);

}  // namespace polar
