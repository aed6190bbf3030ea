#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polardesign/bigint.hpp"
#include "polardesign/counting.hpp"
#include "polardesign/geometry.hpp"

namespace polar {

/// phi_V(U): 1 iff V is contained in U.
int phi(const FieldTable& field, const Subspace& v, const Subspace& u);

struct RowSumReport {
  bool ok = true;
  BigInt expected;                  // [k t]_p
  std::size_t blocks_checked = 0;   // |X|
  std::size_t t_spaces = 0;         // |A|
  std::optional<Subspace> first_violation;
  BigInt violation_count;
};

/// For every isotropic k-space U, counts the isotropic t-spaces V with
/// phi_V(U) = 1 and compares against [k t]_p. Stops at the first violation
/// (in enumeration order).
RowSumReport constant_row_sum_check(const PolarSpace& space, unsigned t, unsigned k, unsigned threads = 1,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

struct Provenance {
  std::string method;
  std::uint64_t seed = 0;
  std::uint64_t nodes = 0;
};

/// A claimed t-(n,k,lambda) design: block list plus the lambda it claims.
struct DesignInstance {
  PolarSpaceDescriptor space;
  unsigned t = 1;
  unsigned k = 1;
  BigInt lambda;
  std::vector<Subspace> blocks;
  std::optional<Provenance> provenance;
};

enum class ViolationKind { IllFormedBlock, DuplicateBlock, CoverMismatch, RatioMismatch };

std::string_view violation_name(ViolationKind kind);

struct DesignReport {
  bool verified = false;
  /// Common cover count when every t-space is covered equally often.
  std::optional<BigInt> lambda;
  std::optional<ViolationKind> violation;
  std::optional<std::size_t> block_index;
  /// Lexicographically least t-space whose cover count differs from the
  /// claimed lambda, with its count.
  std::optional<Subspace> t_space;
  std::optional<BigInt> count;
  std::size_t t_spaces_checked = 0;
  LambdaRatio ratio;
  std::string message;
};

/// Certifies a design: blocks must be distinct totally isotropic k-spaces and
/// every isotropic t-space must lie in exactly `lambda` blocks. The result is
/// cross-checked against lambda_ratio(space, t, k, |Y|). Independent of the
/// thread count.
DesignReport verify_design(const DesignInstance& instance, unsigned threads = 1,
                           std::uint64_t budget = kDefaultEnumerationBudget);

/// Cover count of every isotropic t-space (in enumeration order of
/// enumerate_isotropic_kspaces(space, t)) by the given blocks.
std::vector<BigInt> cover_counts(const PolarSpace& space, const std::vector<Subspace>& t_spaces,
                                 const std::vector<Subspace>& blocks, unsigned t, unsigned threads = 1);

}  // namespace polar
