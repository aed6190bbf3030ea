#pragma once

#include <cstdint>
#include <optional>

#include "polardesign/bigint.hpp"
#include "polardesign/counting.hpp"
#include "polardesign/geometry.hpp"

namespace polar {

/// Constants not fixed by the existence argument; all default to 1.
struct KlpConstants {
  Rational C = 1;        // KLP threshold constant
  Rational c_prime = 1;  // constant of the compressed threshold c' c2 c3^3 (dim L)^7
  Rational c = 1;        // constant of the closed-form right-hand side
};

/// Every constant of the existence bound chain, exact where the rank allows
/// and alongside the closed-form bounds it must satisfy.
struct KlpBudget {
  PolarSpaceDescriptor space;
  unsigned t = 0;
  unsigned k = 0;
  KlpConstants constants;

  BigInt t_space_count;       // |A|
  BigInt t_space_bound;       // 10 p^{2nt}
  BigInt block_count;         // |X|
  BigInt block_lower_bound;   // p^{2nk - ceil(3k^2/2)}
  BigInt block_product_bound; // p^{k(n-k) + k(n+e) - binom(k,2)}, before e is dropped
  BigInt det;                 // det D
  BigInt m;

  BigInt c1_witness;          // m [n t]_p prod(p^{n-i+e}+1), an upper witness, not the minimal c1
  BigInt c1_det_bound;        // |det D| |A|
  BigInt c1_closed_bound;      // 10 p^{2nt+k(t+1)^2}
  BigInt c2 = 1;
  BigInt gamma_l1;            // exact ||gamma_V||_1
  BigInt c4;                  // max(m, ||gamma_V||_1)
  BigInt c4_closed_bound;      // 4 p^{kt+k(t+1)^2}
  BigInt c3_bound;            // 2 c2 c4 |A|
  BigInt c3_closed_bound;      // 80 p^{2nt+kt+k(t+1)^2}
  BigInt dim_l_bound;         // |A|

  std::uint64_t log_term = 0; // ceil(log2(2 c3 dim L))
  BigInt n_threshold;         // ceil(C c2 c3^2 (dim L)^6 log^6)
  BigInt relaxed_threshold;   // ceil(c' c2 c3^3 (dim L)^7)
  BigInt closed_form_rhs;     // ceil(c p^{20nt+3kt+3k(t+1)^2})
  BigInt theorem_cap;         // p^{21nt}

  bool c1_chain_ok = false;       // c1_witness <= c1_det_bound <= c1_closed_bound
  bool c3_chain_ok = false;       // c3_bound <= c3_closed_bound
  bool c4_bound_ok = false;       // c4 <= c4_closed_bound
  bool t_space_bound_ok = false;  // |A| <= 10 p^{2nt}
  bool block_bound_ok = false;    // |X| >= p^{2nk - ceil(3k^2/2)}
  bool block_product_bound_ok = false;

  bool all_bounds_ok() const noexcept {
    return c1_chain_ok && c3_chain_ok && c4_bound_ok && t_space_bound_ok && block_bound_ok;
  }
};

/// ceil(C c2 c3^2 dimL^6 ceil(log2(2 c3 dimL))^6).
BigInt klp_threshold(const Rational& C, const BigInt& c2, const BigInt& c3, const BigInt& dim_l);

/// Throws std::invalid_argument unless 1 <= t <= k, t + k <= n and C > 0.
KlpBudget klp_budget(const PolarSpaceDescriptor& space, unsigned t, unsigned k, const KlpConstants& constants = {});

/// 2k > 21t.
inline bool exceeds_size_threshold(unsigned t, unsigned k) { return 2 * k > 21 * t; }

/// What the existence theorem guarantees for these parameters. Nothing here
/// constructs a design.
struct FeasibilityReport {
  KlpBudget budget;
  bool size_threshold = false;     // 2k > 21t
  BigInt block_target;             // least multiple of c1_witness that is >= n_threshold
  bool fits_in_space = false;      // block_target <= |X| - n_threshold
  bool within_theorem_cap = false; // block_target <= p^{21nt}
  LambdaRatio lambda;              // lambda implied by block_target
};

FeasibilityReport feasibility_report(const PolarSpaceDescriptor& space, unsigned t, unsigned k,
                                     const KlpConstants& constants = {});

struct DivisibilityIdentityReport {
  bool ok = true;
  std::size_t t_spaces = 0;
  std::optional<Subspace> failing_t_space;
};

/// Checks |A| * (#k-spaces through V) / |X| = [k t]_p with exact rationals
/// for every isotropic t-space V, counting by enumeration.
DivisibilityIdentityReport divisibility_identity_check(const PolarSpace& space, unsigned t, unsigned k,
                                                       unsigned threads = 1,
                                                       std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace polar
