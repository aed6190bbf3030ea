#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polardesign/bigint.hpp"
#include "polardesign/geometry.hpp"

namespace polar {

using BigMatrix = std::vector<std::vector<BigInt>>;

/// The (t+1)x(t+1) upper-triangular system D f = (0,...,0,m)^T whose
/// solution gives the decoding weights gamma_V(U) = f(dim(U cap V)).
///
/// Row ell < t counts k-spaces U of a (k+t)-space W through a t-space V' with
/// dim(V cap V') = ell, split by j = dim(U cap V); row t is [k t]_p on the
/// diagonal.
struct DecodingSystem {
  BigInt p;
  unsigned t = 0;
  unsigned k = 0;
  BigMatrix d;
  BigInt det;                  // det(D), product of the diagonal
  std::vector<BigInt> det_j;   // det(D_j): column j replaced by e_t
  std::vector<BigInt> f;       // f(0..t)
  BigInt m;                    // det(D), forced positive
};

/// Builds D with exact integer entries and solves it twice: scaled
/// back-substitution and independent fraction-free determinants of D_j.
/// Throws std::invalid_argument unless 1 <= t <= k and p >= 2, and
/// std::logic_error if the two solution routes disagree.
DecodingSystem build_decoding_system(const BigInt& p, unsigned t, unsigned k);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt bareiss_determinant(BigMatrix a);

/// True when D f = (0,...,0,m)^T holds exactly.
bool solves_system(const DecodingSystem& system);

/// gamma_V(U) = f(dim(U cap V)) if U <= W, else 0. Throws
/// std::invalid_argument when dim V != t, dim W != k+t, V is not inside W or
/// dim U != k.
BigInt gamma_value(const DecodingSystem& system, const FieldTable& field, const Subspace& v, const Subspace& w,
                   const Subspace& u);

/// sum over k-subspaces U of a (k+t)-space of |f(dim(U cap V))|, from the
/// closed-form count of k-spaces meeting V in each dimension.
BigInt gamma_l1_closed_form(const DecodingSystem& system);

struct DeterminantBoundReport {
  BigInt bound;                        // p^{k(t+1)^2}
  bool ok = true;
  BigInt det_margin;                   // bound - |det D|
  std::vector<BigInt> det_j_margins;   // bound - |det D_j|
};

DeterminantBoundReport determinant_bound_check(const DecodingSystem& system);

struct LocalDecodabilityReport {
  bool verified = true;
  BigInt m;
  BigInt gamma_l1;
  BigInt c4;
  BigInt t_space_count;        // |A|
  BigInt c3_bound;             // 2 c2 c4 |A| with c2 = 1
  BigInt gamma_l1_bound;       // [k+t k]_p p^{k(t+1)^2}
  bool gamma_bound_ok = true;
  std::size_t w_subspaces = 0; // k-subspaces of W
  std::optional<Subspace> failing_t_space;
  BigInt failing_sum;
  Subspace v;
  Subspace w;
};

/// Checks sum_U gamma_V(U) phi_{V'}(U) = m delta_{V,V'} against every
/// isotropic t-space V'. When w is empty the lexicographically least
/// isotropic (k+t)-space through v is used. Requires t + k <= n.
LocalDecodabilityReport verify_local_decodability(const PolarSpace& space, unsigned t, unsigned k, const Subspace& v,
                                                  std::optional<Subspace> w = std::nullopt, unsigned threads = 1,
                                                  std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace polar
