#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "polardesign/subspace.hpp"

namespace polar {

void Matrix::append_row(std::span<const Element> values) {
  if (values.size() != cols) throw std::invalid_argument("row length mismatch");
  data.insert(data.end(), values.begin(), values.end());
  ++rows;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::size_t row_reduce(const FieldTable& field, Matrix& m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(rank).begin());
    const Element scale = field.inv(m.at(rank, col));
    for (auto& x : m.row(rank)) x = field.mul(x, scale);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      const Element factor = m.at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(const FieldTable& field, Matrix m) { return row_reduce(field, m); }

Matrix Subspace::matrix() const {
  Matrix m(dim_, ambient_);
  m.data = entries_;
  return m;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    const auto rw = row(r);
    out.push_back(static_cast<std::size_t>(std::find_if(rw.begin(), rw.end(), [](Element x) { return x != 0; }) -
                                           rw.begin()));
  }
  return out;
}

std::vector<std::vector<int>> Subspace::to_rows() const {
  std::vector<std::vector<int>> out;
  for (std::size_t r = 0; r < dim_; ++r) {
    const auto rw = row(r);
    out.emplace_back(rw.begin(), rw.end());
  }
  return out;
}

Subspace span_of(const FieldTable& field, Matrix m) {
  const std::size_t r = row_reduce(field, m);
  Subspace s;
  s.dim_ = r;
  s.ambient_ = m.cols;
  s.entries_.assign(m.data.begin(), m.data.begin() + static_cast<std::ptrdiff_t>(r * m.cols));
  return s;
}

Subspace rref_canonicalize(const FieldTable& field, Matrix m) {
  const std::size_t rows = m.rows;
  Subspace s = span_of(field, std::move(m));
  if (s.dim() != rows)
    throw std::invalid_argument("rank-deficient matrix: " + std::to_string(rows) + " rows span dimension " +
                                std::to_string(s.dim()));
  return s;
}

Subspace subspace_from_rows(const FieldTable& field, const std::vector<std::vector<int>>& rows,
                            std::size_t ambient) {
  Matrix m(0, ambient);
  for (const auto& r : rows) {
    if (r.size() != ambient)
      throw std::invalid_argument("row has length " + std::to_string(r.size()) + ", expected " +
                                  std::to_string(ambient));
    Vector v;
    for (int code : r) {
      if (code < 0 || !field.contains(static_cast<unsigned>(code)))
        throw std::invalid_argument("element code " + std::to_string(code) + " outside F_" +
                                    std::to_string(field.order()));
      v.push_back(static_cast<Element>(code));
    }
    m.append_row(v);
  }
  return rref_canonicalize(field, std::move(m));
}

Subspace subspace_sum(const FieldTable& field, const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
  Matrix m = a.matrix();
  m.data.insert(m.data.end(), b.entries().begin(), b.entries().end());
  m.rows += b.dim();
  return span_of(field, std::move(m));
}

std::size_t sum_dimension(const FieldTable& field, const Subspace& a, const Subspace& b) {
  return subspace_sum(field, a, b).dim();
}

std::size_t intersection_dimension(const FieldTable& field, const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - sum_dimension(field, a, b);
}

bool contains(const FieldTable& field, const Subspace& outer, const Subspace& inner) {
  if (inner.dim() > outer.dim()) return false;
  return sum_dimension(field, outer, inner) == outer.dim();
}

Vector reduce_modulo(const FieldTable& field, const Subspace& space, std::span<const Element> v) {
  Vector out(v.begin(), v.end());
  const auto piv = space.pivots();
  for (std::size_t r = 0; r < space.dim(); ++r) {
    const Element factor = out[piv[r]];
    if (factor == 0) continue;
    const auto rw = space.row(r);
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = field.sub(out[c], field.mul(factor, rw[c]));
  }
  return out;
}

bool contains_vector(const FieldTable& field, const Subspace& space, std::span<const Element> v) {
  const Vector r = reduce_modulo(field, space, v);
  return std::all_of(r.begin(), r.end(), [](Element x) { return x == 0; });
}

void normalize(const FieldTable& field, std::span<Element> v) {
  const auto it = std::find_if(v.begin(), v.end(), [](Element x) { return x != 0; });
  if (it == v.end() || *it == 1) return;
  const Element scale = field.inv(*it);
  for (auto& x : v) x = field.mul(x, scale);
}

namespace {

// Visits every k x m RREF matrix over the field, pivot sets in lexicographic
// order and free entries odometer-style.
template <typename Visit>
void for_each_rref(const FieldTable& field, std::size_t m, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  const unsigned p = field.order();
  while (true) {
    // free positions: row r, columns c > piv[r] that are not pivots
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < m; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
    Matrix mat(k, m);
    for (std::size_t r = 0; r < k; ++r) mat.at(r, piv[r]) = 1;
    std::vector<unsigned> digits(free.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free.size(); ++i)
        mat.at(free[i].first, free[i].second) = static_cast<Element>(digits[i]);
      visit(std::as_const(mat));
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    // next k-combination of {0..m-1}
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

}  // namespace

std::vector<Subspace> subspaces_of(const FieldTable& field, const Subspace& host, std::size_t k) {
  const std::size_t m = host.dim();
  if (k > m) return {};
  if (k == 0) return {Subspace::zero(host.ambient())};
  std::set<Subspace> found;
  const Matrix basis = host.matrix();
  for_each_rref(field, m, k, [&](const Matrix& coeffs) {
    Matrix image(k, host.ambient());
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t i = 0; i < m; ++i) {
        const Element c = coeffs.at(r, i);
        if (c == 0) continue;
        for (std::size_t col = 0; col < host.ambient(); ++col)
          image.at(r, col) = field.add(image.at(r, col), field.mul(c, basis.at(i, col)));
      }
    found.insert(rref_canonicalize(field, std::move(image)));
  });
  return {found.begin(), found.end()};
}

}  // namespace polar
