#include "polardesign/geometry.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace polar {

namespace {

std::string group_name(Family family, unsigned n, std::uint64_t q) {
  const auto s = [](auto x) { return std::to_string(x); };
  switch (family) {
    case Family::HermitianOdd: return "U(" + s(2 * n) + "," + s(q) + "^2)";
    case Family::HermitianEven: return "U(" + s(2 * n + 1) + "," + s(q) + "^2)";
    case Family::Symplectic: return "Sp(" + s(2 * n) + "," + s(q) + ")";
    case Family::Hyperbolic: return "O+(" + s(2 * n) + "," + s(q) + ")";
    case Family::Parabolic: return "O(" + s(2 * n + 1) + "," + s(q) + ")";
    case Family::Elliptic: return "O-(" + s(2 * n + 2) + "," + s(q) + ")";
  }
  return {};
}

// Basis of {v : v^T m = 0}.
std::vector<Vector> left_nullspace(const FieldTable& field, const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  const std::size_t rk = row_reduce(field, t);
  std::vector<std::size_t> pivot_cols;
  for (std::size_t r = 0; r < rk; ++r) {
    std::size_t c = 0;
    while (t.at(r, c) == 0) ++c;
    pivot_cols.push_back(c);
  }
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < t.cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    Vector v(t.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rk; ++r) v[pivot_cols[r]] = field.neg(t.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t checked_power(std::uint64_t base, unsigned exp, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (result > cap / base) return cap + 1;
    result *= base;
  }
  return result;
}

bool perpendicular_to_all(const FormEvaluator& form, const Subspace& s, std::span<const Element> v) {
  for (std::size_t r = 0; r < s.dim(); ++r)
    if (form.bilinear(s.row(r), v) != 0) return false;
  return true;
}

// Grows every level by one isotropic point in the perp until dimension k.
std::vector<Subspace> grow(const PolarSpace& space, std::set<Subspace> level, unsigned from, unsigned k,
                           std::uint64_t budget) {
  if (from == k) return {level.begin(), level.end()};
  const auto points = isotropic_points(space, budget);
  const FieldTable& field = *space.field;
  for (unsigned dim = from; dim < k; ++dim) {
    std::set<Subspace> next;
    for (const Subspace& s : level) {
      for (const Vector& v : points) {
        if (!perpendicular_to_all(space.form, s, v)) continue;
        if (contains_vector(field, s, v)) continue;
        Matrix m = s.matrix();
        m.append_row(v);
        next.insert(rref_canonicalize(field, std::move(m)));
        if (next.size() > budget)
          throw BudgetExceeded("enumeration of isotropic " + std::to_string(dim + 1) +
                               "-spaces exceeds budget of " + std::to_string(budget));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::HermitianOdd: return "2A-odd";
    case Family::HermitianEven: return "2A-even";
    case Family::Symplectic: return "C";
    case Family::Hyperbolic: return "D";
    case Family::Parabolic: return "B";
    case Family::Elliptic: return "2D";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

PolarSpaceDescriptor describe(Family family, unsigned n, std::uint64_t q) {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  if (!prime_power_decompose(q, prime, exponent))
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  if (q > (std::uint64_t{1} << 31)) throw std::invalid_argument("q too large");

  PolarSpaceDescriptor d;
  d.family = family;
  d.rank = n;
  d.q = q;
  d.order = q;
  d.group = group_name(family, n, q);
  switch (family) {
    case Family::HermitianOdd:
      d.order = q * q;
      d.dimension = 2 * n;
      d.twice_e = -1;
      break;
    case Family::HermitianEven:
      d.order = q * q;
      d.dimension = 2 * n + 1;
      d.twice_e = 1;
      break;
    case Family::Symplectic:
      d.dimension = 2 * n;
      d.twice_e = 0;
      break;
    case Family::Hyperbolic:
      d.dimension = 2 * n;
      d.twice_e = -2;
      break;
    case Family::Parabolic:
      d.dimension = 2 * n + 1;
      d.twice_e = 0;
      break;
    case Family::Elliptic:
      d.dimension = 2 * n + 2;
      d.twice_e = 2;
      break;
  }
  return d;
}

FormEvaluator::FormEvaluator(std::shared_ptr<const FieldTable> field, FormKind kind, Matrix coefficients)
    : field_(std::move(field)), kind_(kind), coeffs_(std::move(coefficients)) {
  if (coeffs_.rows != coeffs_.cols) throw std::invalid_argument("form coefficient matrix must be square");
  if (kind_ == FormKind::Hermitian && !field_->has_conjugation())
    throw std::invalid_argument("Hermitian forms need a field of square order");
}

void FormEvaluator::check(std::span<const Element> v) const {
  if (v.size() != coeffs_.rows)
    throw std::invalid_argument("vector of dimension " + std::to_string(v.size()) + " for a form on dimension " +
                                std::to_string(coeffs_.rows));
}

Element FormEvaluator::bilinear(std::span<const Element> u, std::span<const Element> w) const {
  check(u);
  check(w);
  const FieldTable& f = *field_;
  const std::size_t d = coeffs_.rows;
  Element acc = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (kind_ == FormKind::Quadratic) {
      for (std::size_t j = i; j < d; ++j) {
        const Element c = coeffs_.at(i, j);
        if (c == 0) continue;
        const Element term = f.add(f.mul(u[i], w[j]), f.mul(u[j], w[i]));
        acc = f.add(acc, f.mul(c, term));
      }
      continue;
    }
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      const Element c = coeffs_.at(i, j);
      if (c == 0) continue;
      const Element wj = kind_ == FormKind::Hermitian ? conjugate(w[j], f) : w[j];
      acc = f.add(acc, f.mul(f.mul(u[i], c), wj));
    }
  }
  return acc;
}

Element FormEvaluator::quadratic(std::span<const Element> u) const {
  if (kind_ != FormKind::Quadratic) return bilinear(u, u);
  check(u);
  const FieldTable& f = *field_;
  Element acc = 0;
  for (std::size_t i = 0; i < coeffs_.rows; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = i; j < coeffs_.cols; ++j) {
      const Element c = coeffs_.at(i, j);
      if (c != 0) acc = f.add(acc, f.mul(c, f.mul(u[i], u[j])));
    }
  }
  return acc;
}

bool FormEvaluator::is_nondegenerate() const {
  const std::size_t d = coeffs_.rows;
  const FieldTable& f = *field_;
  Matrix gram(d, d);
  Vector ei(d, 0), ej(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    ei.assign(d, 0);
    ei[i] = 1;
    for (std::size_t j = 0; j < d; ++j) {
      ej.assign(d, 0);
      ej[j] = 1;
      gram.at(i, j) = bilinear(ei, ej);
    }
  }
  const auto radical = left_nullspace(f, gram);
  if (radical.empty()) return true;
  if (kind_ != FormKind::Quadratic) return false;
  // every nonzero radical vector must be nonsingular
  const std::size_t r = radical.size();
  std::vector<unsigned> digits(r, 0);
  while (true) {
    std::size_t i = 0;
    while (i < r && ++digits[i] == f.order()) digits[i++] = 0;
    if (i == r) break;
    Vector v(d, 0);
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < d; ++c)
        v[c] = f.add(v[c], f.mul(static_cast<Element>(digits[b]), radical[b][c]));
    if (quadratic(v) == 0) return false;
  }
  return true;
}

PolarSpace standard_polar_space(Family family, unsigned n, std::uint64_t q) {
  const PolarSpaceDescriptor desc = describe(family, n, q);
  if (desc.order > FieldTable::kMaxOrder)
    throw std::invalid_argument("working order p = " + std::to_string(desc.order) + " exceeds the field cap of " +
                                std::to_string(FieldTable::kMaxOrder));
  auto field = std::make_shared<const FieldTable>(make_field(static_cast<unsigned>(desc.order)));
  const std::size_t d = desc.dimension;
  Matrix c(d, d);
  FormKind kind = FormKind::Quadratic;
  switch (family) {
    case Family::HermitianOdd:
    case Family::HermitianEven:
      kind = FormKind::Hermitian;
      for (std::size_t i = 0; i < d; ++i) c.at(i, i) = 1;
      break;
    case Family::Symplectic:
      kind = FormKind::Alternating;
      for (std::size_t i = 0; i < n; ++i) {
        c.at(2 * i, 2 * i + 1) = 1;
        c.at(2 * i + 1, 2 * i) = field->neg(1);
      }
      break;
    case Family::Hyperbolic:
      for (std::size_t i = 0; i < n; ++i) c.at(2 * i, 2 * i + 1) = 1;
      break;
    case Family::Parabolic:
      c.at(0, 0) = 1;
      for (std::size_t i = 0; i < n; ++i) c.at(2 * i + 1, 2 * i + 2) = 1;
      break;
    case Family::Elliptic: {
      for (std::size_t i = 0; i < n; ++i) c.at(2 * i, 2 * i + 1) = 1;
      Element a = 0;
      for (unsigned code = 0; code < field->order(); ++code) {
        bool has_root = false;
        for (unsigned x = 0; x < field->order() && !has_root; ++x) {
          const auto e = static_cast<Element>(x);
          has_root = field->add(field->add(field->mul(e, e), e), static_cast<Element>(code)) == 0;
        }
        if (!has_root) {
          a = static_cast<Element>(code);
          break;
        }
      }
      c.at(2 * n, 2 * n) = 1;
      c.at(2 * n, 2 * n + 1) = 1;
      c.at(2 * n + 1, 2 * n + 1) = a;
      break;
    }
  }
  FormEvaluator form(field, kind, std::move(c));
  return PolarSpace{desc, std::move(field), std::move(form)};
}

Element evaluate(const FormEvaluator& form, std::span<const Element> u, std::span<const Element> w) {
  return form.bilinear(u, w);
}

bool is_totally_isotropic(const FormEvaluator& form, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!form.is_singular(s.row(i))) return false;
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (form.bilinear(s.row(i), s.row(j)) != 0) return false;
  }
  return true;
}

std::vector<Vector> isotropic_points(const PolarSpace& space, std::uint64_t budget) {
  const FieldTable& field = *space.field;
  const std::size_t d = space.dimension();
  const std::uint64_t total = checked_power(field.order(), static_cast<unsigned>(d), budget);
  if (total > budget)
    throw BudgetExceeded("ambient space F_" + std::to_string(field.order()) + "^" + std::to_string(d) +
                         " exceeds enumeration budget of " + std::to_string(budget));
  std::vector<Vector> points;
  Vector v(d, 0);
  // odometer with index 0 most significant gives lexicographic order
  while (true) {
    std::size_t i = d;
    while (i > 0 && ++v[i - 1] == field.order()) v[--i] = 0;
    if (i == 0) break;
    const auto lead = std::find_if(v.begin(), v.end(), [](Element x) { return x != 0; });
    if (*lead == 1 && space.form.is_singular(v)) points.push_back(v);
  }
  return points;
}

std::vector<Subspace> enumerate_isotropic_kspaces(const PolarSpace& space, unsigned k, std::uint64_t budget) {
  if (k > space.rank())
    throw std::invalid_argument("k = " + std::to_string(k) + " exceeds the rank " + std::to_string(space.rank()));
  std::set<Subspace> start{Subspace::zero(space.dimension())};
  return grow(space, std::move(start), 0, k, budget);
}

std::vector<Subspace> enumerate_extensions(const PolarSpace& space, const Subspace& base, unsigned k,
                                           std::uint64_t budget) {
  if (base.ambient() != space.dimension()) throw std::invalid_argument("base subspace has wrong ambient dimension");
  if (!is_totally_isotropic(space.form, base)) throw std::invalid_argument("base subspace is not totally isotropic");
  if (k > space.rank() || base.dim() > k)
    throw std::invalid_argument("need dim(base) <= k <= rank, got dim(base) = " + std::to_string(base.dim()) +
                                ", k = " + std::to_string(k));
  std::set<Subspace> start{base};
  return grow(space, std::move(start), static_cast<unsigned>(base.dim()), k, budget);
}

}  // namespace polar
