#include "polardesign/klp.hpp"

#include <stdexcept>

#include "polardesign/decode.hpp"
#include "polardesign/incidence.hpp"

namespace polar {

BigInt klp_threshold(const Rational& C, const BigInt& c2, const BigInt& c3, const BigInt& dim_l) {
  const std::uint64_t log_term = ceil_log2(2 * c3 * dim_l);
  const BigInt log6 = pow_big(BigInt(log_term), 6);
  return ceil_rational(C * Rational(c2 * c3 * c3 * pow_big(dim_l, 6) * log6));
}

KlpBudget klp_budget(const PolarSpaceDescriptor& space, unsigned t, unsigned k, const KlpConstants& constants) {
  if (t < 1 || t > k || t + k > space.rank)
    throw std::invalid_argument("bound chain needs 1 <= t <= k and t + k <= n");
  if (constants.C <= 0 || constants.c_prime <= 0 || constants.c <= 0)
    throw std::invalid_argument("constants must be positive");

  KlpBudget b;
  b.space = space;
  b.t = t;
  b.k = k;
  b.constants = constants;
  const BigInt p(space.order);
  const std::uint64_t n = space.rank;
  const std::uint64_t tt = t;
  const std::uint64_t kk = k;
  const std::uint64_t square = kk * (tt + 1) * (tt + 1);  // k(t+1)^2

  b.t_space_count = polar_count(space, t);
  b.t_space_bound = 10 * pow_big(p, 2 * n * tt);
  b.block_count = polar_count(space, k);
  b.block_lower_bound = pow_big(p, 2 * n * kk - (3 * kk * kk + 1) / 2);
  const long twice_product_exponent = static_cast<long>(2 * kk * (n - kk)) +
                                      static_cast<long>(kk) * (2 * static_cast<long>(n) + space.twice_e) -
                                      static_cast<long>(kk * (kk - 1));
  b.block_product_bound = half_power(space, twice_product_exponent);

  const DecodingSystem system = build_decoding_system(p, t, k);
  b.det = system.det;
  b.m = system.m;

  b.c1_witness = b.m * b.t_space_count;
  b.c1_det_bound = abs(b.det) * b.t_space_count;
  b.c1_closed_bound = 10 * pow_big(p, 2 * n * tt + square);

  b.gamma_l1 = gamma_l1_closed_form(system);
  b.c4 = b.m > b.gamma_l1 ? b.m : b.gamma_l1;
  b.c4_closed_bound = 4 * pow_big(p, kk * tt + square);
  b.c3_bound = 2 * b.c2 * b.c4 * b.t_space_count;
  b.c3_closed_bound = 80 * pow_big(p, 2 * n * tt + kk * tt + square);
  b.dim_l_bound = b.t_space_count;

  b.log_term = ceil_log2(2 * b.c3_bound * b.dim_l_bound);
  b.n_threshold = klp_threshold(constants.C, b.c2, b.c3_bound, b.dim_l_bound);
  b.relaxed_threshold = ceil_rational(
      constants.c_prime * Rational(b.c2 * pow_big(b.c3_bound, 3) * pow_big(b.dim_l_bound, 7)));
  b.closed_form_rhs = ceil_rational(constants.c * Rational(pow_big(p, 20 * n * tt + 3 * kk * tt + 3 * square)));
  b.theorem_cap = pow_big(p, 21 * n * tt);

  b.c1_chain_ok = b.c1_witness <= b.c1_det_bound && b.c1_det_bound <= b.c1_closed_bound;
  b.c3_chain_ok = b.c3_bound <= b.c3_closed_bound;
  b.c4_bound_ok = b.c4 <= b.c4_closed_bound;
  b.t_space_bound_ok = b.t_space_count <= b.t_space_bound;
  b.block_bound_ok = b.block_count >= b.block_lower_bound;
  b.block_product_bound_ok = b.block_count >= b.block_product_bound;
  return b;
}

FeasibilityReport feasibility_report(const PolarSpaceDescriptor& space, unsigned t, unsigned k,
                                     const KlpConstants& constants) {
  FeasibilityReport r;
  r.budget = klp_budget(space, t, k, constants);
  const KlpBudget& b = r.budget;
  r.size_threshold = exceeds_size_threshold(t, k);
  BigInt multiples = b.n_threshold / b.c1_witness;
  if (multiples * b.c1_witness < b.n_threshold) ++multiples;
  if (multiples == 0) multiples = 1;
  r.block_target = multiples * b.c1_witness;
  r.fits_in_space = b.block_count >= b.n_threshold && r.block_target <= b.block_count - b.n_threshold;
  r.within_theorem_cap = r.block_target <= b.theorem_cap;
  r.lambda = lambda_ratio(space, t, k, r.block_target);
  return r;
}

DivisibilityIdentityReport divisibility_identity_check(const PolarSpace& space, unsigned t, unsigned k,
                                                       unsigned threads, std::uint64_t budget) {
  const auto t_spaces = enumerate_isotropic_kspaces(space, t, budget);
  const auto blocks = enumerate_isotropic_kspaces(space, k, budget);
  const auto through = cover_counts(space, t_spaces, blocks, t, threads);
  const BigInt p(space.descriptor.order);
  const Rational target(gaussian_binomial(k, t, p));
  const BigInt a = polar_count(space.descriptor, t);

  DivisibilityIdentityReport r;
  r.t_spaces = t_spaces.size();
  for (std::size_t i = 0; i < t_spaces.size(); ++i) {
    if (Rational(a * through[i], BigInt(blocks.size())) != target) {
      r.ok = false;
      r.failing_t_space = t_spaces[i];
      break;
    }
  }
  return r;
}

}  // namespace polar
