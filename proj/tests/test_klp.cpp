#include <doctest.h>

#include "polardesign/decode.hpp"
#include "polardesign/klp.hpp"

using namespace polar;

namespace {

std::vector<PolarSpaceDescriptor> descriptors_with_order(std::uint64_t p, unsigned n) {
  std::vector<PolarSpaceDescriptor> out;
  for (Family fam : kAllFamilies) {
    const bool herm = fam == Family::HermitianOdd || fam == Family::HermitianEven;
    if (herm) {
      if (p == 4) out.push_back(describe(fam, n, 2));
    } else {
      out.push_back(describe(fam, n, p));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("bound chain holds across the formula-level grid") {
  for (std::uint64_t p : {2, 3, 4})
    for (unsigned n = 2; n <= 12; ++n)
      for (const auto& desc : descriptors_with_order(p, n))
        for (unsigned t = 1; t <= 2; ++t)
          for (unsigned k = t; k <= 6 && t + k <= n; ++k) {
            CAPTURE(family_name(desc.family));
            CAPTURE(p);
            CAPTURE(n);
            CAPTURE(t);
            CAPTURE(k);
            const KlpBudget b = klp_budget(desc, t, k);
            CHECK(b.c1_chain_ok);
            CHECK(b.c3_chain_ok);
            CHECK(b.c4_bound_ok);
            CHECK(b.t_space_bound_ok);
            CHECK(b.block_product_bound_ok);
            if (desc.twice_e >= -1) CHECK(b.block_bound_ok);
            CHECK(b.c1_witness == b.m * b.t_space_count);
            CHECK(b.c3_bound == 2 * b.c4 * b.t_space_count);
          }
}

TEST_CASE("the simplified block bound fails on the hyperbolic quadric") {
  // [6 4]_2 (2^5+1)(2^4+1)(2^3+1)(2^2+1) = 651 * 25245 < 2^{48-24}
  const KlpBudget b = klp_budget(describe(Family::Hyperbolic, 6, 2), 1, 4);
  CHECK(b.block_count == 16434495);
  CHECK(b.block_lower_bound == BigInt(1) << 24);
  CHECK_FALSE(b.block_bound_ok);
  CHECK(b.block_product_bound_ok);
  CHECK_FALSE(b.all_bounds_ok());
}

TEST_CASE("c4 at the small symplectic instance") {
  const KlpBudget b = klp_budget(describe(Family::Symplectic, 3, 2), 1, 2);
  CHECK(b.t_space_count == 63);
  CHECK(b.m == 6);
  CHECK(b.gamma_l1 == 10);
  CHECK(b.c4 == 10);
  CHECK(b.c1_witness == 378);
  CHECK(b.c3_bound == 1260);
}

TEST_CASE("threshold formula") {
  // c3 = 3, dimL = 5: log term ceil(log2 30) = 5
  const BigInt expected = BigInt(2) * 9 * pow_big(5, 6) * pow_big(5, 6);
  CHECK(klp_threshold(Rational(1), 2, 3, 5) == expected);
  CHECK(klp_threshold(Rational(1, 3), 2, 3, 5) == expected / 3 + (expected % 3 != 0));
  CHECK(ceil_log2(BigInt(1)) == 0);
  CHECK(ceil_log2(BigInt(2)) == 1);
  CHECK(ceil_log2(BigInt(1024)) == 10);
  CHECK(ceil_log2(BigInt(1025)) == 11);
}

TEST_CASE("threshold is nondecreasing in C and c3") {
  BigInt previous = 0;
  for (int c3 = 1; c3 <= 200; ++c3) {
    const BigInt value = klp_threshold(Rational(1), 1, c3, 63);
    CHECK(value >= previous);
    previous = value;
  }
  previous = 0;
  for (int num = 1; num <= 50; ++num) {
    const BigInt value = klp_threshold(Rational(num, 7), 1, 1260, 63);
    CHECK(value >= previous);
    previous = value;
  }
}

TEST_CASE("size threshold flips between k = 10 and k = 11") {
  CHECK_FALSE(exceeds_size_threshold(1, 10));
  CHECK(exceeds_size_threshold(1, 11));
  CHECK_FALSE(exceeds_size_threshold(2, 21));
  CHECK(exceeds_size_threshold(2, 22));
}

TEST_CASE("feasibility target is a multiple of c1") {
  const auto r = feasibility_report(describe(Family::Symplectic, 3, 2), 1, 2);
  CHECK(r.block_target % r.budget.c1_witness == 0);
  CHECK(r.block_target >= r.budget.n_threshold);
  CHECK(r.block_target - r.budget.c1_witness < r.budget.n_threshold);
  CHECK_FALSE(r.fits_in_space);
  CHECK(r.lambda.equal);
}

TEST_CASE("divisibility identity on enumerable spaces") {
  const struct {
    Family fam;
    unsigned n;
    std::uint64_t q;
  } cases[] = {{Family::Symplectic, 3, 2}, {Family::Hyperbolic, 3, 2},    {Family::Parabolic, 3, 2},
               {Family::Elliptic, 3, 2},   {Family::HermitianOdd, 2, 2}, {Family::Parabolic, 2, 3}};
  for (const auto& c : cases) {
    const PolarSpace space = standard_polar_space(c.fam, c.n, c.q);
    for (unsigned t = 1; t <= c.n; ++t)
      for (unsigned k = t; k <= c.n; ++k) {
        const auto r = divisibility_identity_check(space, t, k, 2);
        CHECK(r.ok);
        CHECK(BigInt(r.t_spaces) == polar_count(space.descriptor, t));
      }
  }
}

TEST_CASE("klp parameters are validated") {
  const auto desc = describe(Family::Symplectic, 3, 2);
  CHECK_THROWS_AS(klp_budget(desc, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(klp_budget(desc, 2, 2), std::invalid_argument);
  KlpConstants bad;
  bad.C = 0;
  CHECK_THROWS_AS(klp_budget(desc, 1, 2, bad), std::invalid_argument);
}
