#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "polardesign/fields.hpp"

namespace polar {

using Vector = std::vector<Element>;

/// Dense row-major matrix over a FieldTable (the table is passed to the
/// operations, not stored).
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Element> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Element& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Element at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<Element> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const Element> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

  void append_row(std::span<const Element> values);

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
};

/// In-place reduction to reduced row echelon form; returns the rank. Zero
/// rows end up at the bottom.
std::size_t row_reduce(const FieldTable& field, Matrix& m);

std::size_t rank(const FieldTable& field, Matrix m);

/// A k-dimensional subspace of F_p^d stored as its unique RREF basis.
///
/// Ordering is lexicographic on (dim, ambient, entries), which is the order
/// all enumerations emit.
class Subspace {
 public:
  Subspace() = default;

  /// The zero subspace of F_p^ambient.
  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    return s;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::span<const Element> row(std::size_t r) const { return {entries_.data() + r * ambient_, ambient_}; }
  const std::vector<Element>& entries() const noexcept { return entries_; }
  Matrix matrix() const;

  /// Pivot column of each row.
  std::vector<std::size_t> pivots() const;

  std::vector<std::vector<int>> to_rows() const;

  auto operator<=>(const Subspace&) const = default;
  bool operator==(const Subspace&) const = default;

 private:
  friend Subspace rref_canonicalize(const FieldTable& field, Matrix m);
  friend Subspace span_of(const FieldTable& field, Matrix m);

  std::size_t dim_ = 0;
  std::size_t ambient_ = 0;
  std::vector<Element> entries_;
};

/// Canonical RREF representative of the row space. Throws
/// std::invalid_argument when the rows are linearly dependent.
Subspace rref_canonicalize(const FieldTable& field, Matrix m);

/// Row space of m; dependent rows are allowed and dropped.
Subspace span_of(const FieldTable& field, Matrix m);

/// Builds a subspace from integer row codes, validating each code against the
/// field. Rows must be independent.
Subspace subspace_from_rows(const FieldTable& field, const std::vector<std::vector<int>>& rows,
                            std::size_t ambient);

Subspace subspace_sum(const FieldTable& field, const Subspace& a, const Subspace& b);
std::size_t sum_dimension(const FieldTable& field, const Subspace& a, const Subspace& b);
std::size_t intersection_dimension(const FieldTable& field, const Subspace& a, const Subspace& b);
/// True iff inner is contained in outer.
bool contains(const FieldTable& field, const Subspace& outer, const Subspace& inner);
bool contains_vector(const FieldTable& field, const Subspace& space, std::span<const Element> v);

/// Reduces v modulo the row space of an RREF subspace (clears pivot columns).
Vector reduce_modulo(const FieldTable& field, const Subspace& space, std::span<const Element> v);

/// Scales v so that its first nonzero entry is 1. Zero vectors are unchanged.
void normalize(const FieldTable& field, std::span<Element> v);

/// All k-dimensional subspaces of the row space of host, in lexicographic
/// order. The count is the Gaussian binomial [host.dim() k]_p.
std::vector<Subspace> subspaces_of(const FieldTable& field, const Subspace& host, std::size_t k);

}  // namespace polar
