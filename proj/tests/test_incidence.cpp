#include <doctest.h>

#include <random>

#include "polardesign/certificate.hpp"
#include "polardesign/incidence.hpp"

using namespace polar;

namespace {

DesignInstance full_design(Family fam, unsigned n, std::uint64_t q, unsigned t, unsigned k) {
  const PolarSpace space = standard_polar_space(fam, n, q);
  DesignInstance d;
  d.space = space.descriptor;
  d.t = t;
  d.k = k;
  d.lambda = polar_count_through(space.descriptor, t, k);
  d.blocks = enumerate_isotropic_kspaces(space, k);
  return d;
}

}  // namespace

TEST_CASE("phi is containment") {
  const FieldTable f = make_field(2);
  const Subspace line = subspace_from_rows(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}, 4);
  const Subspace inside = subspace_from_rows(f, {{1, 1, 0, 0}}, 4);
  const Subspace outside = subspace_from_rows(f, {{1, 0, 1, 0}}, 4);
  CHECK(phi(f, inside, line) == 1);
  CHECK(phi(f, outside, line) == 0);
  CHECK(phi(f, line, line) == 1);
}

TEST_CASE("row sums equal [k t]_p") {
  for (Family fam : kAllFamilies) {
    const bool herm = fam == Family::HermitianOdd || fam == Family::HermitianEven;
    const unsigned n = herm ? 2 : 3;
    const PolarSpace space = standard_polar_space(fam, n, 2);
    for (unsigned t = 1; t < n; ++t)
      for (unsigned k = t + 1; k <= n; ++k) {
        const auto r = constant_row_sum_check(space, t, k, 2);
        CHECK(r.ok);
        CHECK(r.expected == gaussian_binomial(k, t, space.descriptor.order));
        CHECK(BigInt(r.t_spaces) == polar_count(space.descriptor, t));
      }
  }
}

TEST_CASE("cover counts equal explicit phi sums for random block sets") {
  const PolarSpace space = standard_polar_space(Family::Symplectic, 3, 2);
  const auto points = enumerate_isotropic_kspaces(space, 1);
  const auto planes = enumerate_isotropic_kspaces(space, 3);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Subspace> blocks;
    for (const auto& u : planes)
      if (rng() % 4 == 0) blocks.push_back(u);
    const auto counts = cover_counts(space, points, blocks, 1, 3);
    for (std::size_t i = 0; i < points.size(); ++i) {
      long direct = 0;
      for (const auto& u : blocks) direct += phi(*space.field, points[i], u);
      CHECK(counts[i] == direct);
    }
  }
}

TEST_CASE("the complete design has lambda = polar_count_through") {
  const struct {
    Family fam;
    unsigned n;
    std::uint64_t q;
  } cases[] = {{Family::Symplectic, 3, 2}, {Family::Parabolic, 2, 3}, {Family::Elliptic, 2, 2},
               {Family::HermitianEven, 2, 2}};
  for (const auto& c : cases)
    for (unsigned t = 1; t <= c.n; ++t)
      for (unsigned k = t; k <= c.n; ++k) {
        const auto d = full_design(c.fam, c.n, c.q, t, k);
        const auto r = verify_design(d, 2);
        CHECK(r.verified);
        REQUIRE(r.lambda);
        CHECK(*r.lambda == d.lambda);
        CHECK(r.ratio.value == Rational(*r.lambda));
        CHECK(r.ratio.equal);
      }
}

TEST_CASE("verification is independent of the thread count") {
  auto d = full_design(Family::Symplectic, 3, 2, 1, 3);
  d.blocks.resize(40);
  d.lambda = 1;
  const auto a = verify_design(d, 1);
  const auto b = verify_design(d, 4);
  CHECK_FALSE(a.verified);
  CHECK(a.violation == b.violation);
  CHECK(a.t_space == b.t_space);
  CHECK(a.count == b.count);
}

TEST_CASE("violations are classified") {
  const PolarSpace space = standard_polar_space(Family::Symplectic, 2, 2);
  auto d = full_design(Family::Symplectic, 2, 2, 1, 2);

  SUBCASE("duplicate block") {
    d.blocks.push_back(d.blocks.front());
    const auto r = verify_design(d);
    CHECK(r.violation == ViolationKind::DuplicateBlock);
    CHECK(r.block_index == d.blocks.size() - 1);
  }
  SUBCASE("non-isotropic block") {
    d.blocks[2] = subspace_from_rows(*space.field, {{1, 0, 0, 0}, {0, 1, 0, 0}}, 4);
    const auto r = verify_design(d);
    CHECK(r.violation == ViolationKind::IllFormedBlock);
    CHECK(r.block_index == 2);
  }
  SUBCASE("wrong dimension") {
    d.blocks[0] = subspace_from_rows(*space.field, {{1, 0, 0, 0}}, 4);
    const auto r = verify_design(d);
    CHECK(r.violation == ViolationKind::IllFormedBlock);
  }
  SUBCASE("claimed lambda differs") {
    d.lambda = 2;
    const auto r = verify_design(d);
    CHECK(r.violation == ViolationKind::CoverMismatch);
    REQUIRE(r.t_space);
    CHECK(*r.t_space == enumerate_isotropic_kspaces(space, 1).front());
    CHECK(*r.count == 3);
  }
}

TEST_CASE("certificates round trip byte for byte") {
  auto d = full_design(Family::Elliptic, 2, 2, 1, 2);
  d.provenance = Provenance{"exact-cover", 42, 1234};
  const std::string text = write_certificate(d);
  const DesignInstance back = read_certificate(text);
  CHECK(back.blocks == d.blocks);
  CHECK(back.lambda == d.lambda);
  CHECK(write_certificate(back) == text);

  d.provenance.reset();
  d.lambda = BigInt(1) << 80;
  const std::string big = write_certificate(d);
  CHECK(big.find("\"1208925819614629174706176\"") != std::string::npos);
  CHECK(write_certificate(read_certificate(big)) == big);
}

TEST_CASE("malformed certificates are rejected") {
  CHECK_THROWS_AS(read_certificate("not json"), CertificateError);
  CHECK_THROWS_AS(read_certificate("[]"), CertificateError);
  CHECK_THROWS_AS(read_certificate(R"({"family":"C","q":2,"n":2,"t":1,"k":2,"blocks":[]})"), CertificateError);
  CHECK_THROWS_AS(read_certificate(R"({"family":"X","q":2,"n":2,"t":1,"k":2,"lambda":1,"blocks":[]})"),
                  CertificateError);
  CHECK_THROWS_AS(
      read_certificate(R"({"family":"C","q":2,"n":2,"t":1,"k":2,"lambda":1,"blocks":[[[1,0,0,0],[2,0,0,0]]]})"),
      CertificateError);
  CHECK_THROWS_AS(
      read_certificate(R"({"family":"C","q":2,"n":2,"t":1,"k":2,"lambda":1,"blocks":[[[1,0,0,0],[1,0,0,0]]]})"),
      CertificateError);
}
