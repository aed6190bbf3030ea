#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polardesign/fields.hpp"
#include "polardesign/subspace.hpp"

namespace polar {

/// The six finite classical polar space families.
enum class Family {
  HermitianOdd,   // 2A_{2n-1}, U(2n, q^2)
  HermitianEven,  // 2A_{2n},   U(2n+1, q^2)
  Symplectic,     // C_n,       Sp(2n, q)
  Hyperbolic,     // D_n,       O+(2n, q)
  Parabolic,      // B_n,       O(2n+1, q)
  Elliptic,       // 2D_{n+1},  O-(2n+2, q)
};

inline constexpr Family kAllFamilies[] = {Family::HermitianOdd, Family::HermitianEven, Family::Symplectic,
                                          Family::Hyperbolic,   Family::Parabolic,     Family::Elliptic};

/// ASCII names used on the command line and in certificates:
/// 2A-odd, 2A-even, C, D, B, 2D.
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Thrown when an enumeration would exceed its budget. Enumerations never
/// truncate silently.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct PolarSpaceDescriptor {
  Family family = Family::Symplectic;
  unsigned rank = 1;           // n
  std::uint64_t q = 2;         // base order
  std::uint64_t order = 2;     // p: q^2 for Hermitian families, q otherwise
  unsigned dimension = 2;      // d
  int twice_e = 0;             // 2e
  std::string group;           // e.g. "Sp(4,2)", metadata only

  bool hermitian() const noexcept {
    return family == Family::HermitianOdd || family == Family::HermitianEven;
  }
};

/// Descriptor for a family without building any field. q must be a prime
/// power and n >= 1; throws std::invalid_argument otherwise.
PolarSpaceDescriptor describe(Family family, unsigned n, std::uint64_t q);

enum class FormKind { Hermitian, Alternating, Quadratic };

/// A reflexive sesquilinear, alternating or quadratic form on F_p^d.
///
/// For the quadratic kind `coefficients` is upper triangular with
/// Q(x) = sum_{i<=j} c_ij x_i x_j and `bilinear` returns the polar form
/// B(u,w) = Q(u+w) - Q(u) - Q(w). For the other kinds it is the Gram matrix
/// and f(u,w) = sum u_i g_ij w_j (with w_j conjugated in the Hermitian case).
class FormEvaluator {
 public:
  FormEvaluator(std::shared_ptr<const FieldTable> field, FormKind kind, Matrix coefficients);

  FormKind kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return coeffs_.rows; }
  const Matrix& coefficients() const noexcept { return coeffs_; }
  const FieldTable& field() const noexcept { return *field_; }

  /// f(u, w), or the polar form for the quadratic kind. Throws
  /// std::invalid_argument on dimension mismatch.
  Element bilinear(std::span<const Element> u, std::span<const Element> w) const;
  /// Q(u) for the quadratic kind; f(u, u) otherwise.
  Element quadratic(std::span<const Element> u) const;

  /// Q(u) = 0 (quadratic kind) or f(u, u) = 0.
  bool is_singular(std::span<const Element> u) const { return quadratic(u) == 0; }

  /// Nondegeneracy: trivial radical for sesquilinear/alternating forms; for
  /// quadratic forms no nonzero singular vector in the radical of the polar form.
  bool is_nondegenerate() const;

 private:
  void check(std::span<const Element> v) const;

  std::shared_ptr<const FieldTable> field_;
  FormKind kind_;
  Matrix coeffs_;
};

/// A polar space in its fixed standard coordinates.
struct PolarSpace {
  PolarSpaceDescriptor descriptor;
  std::shared_ptr<const FieldTable> field;
  FormEvaluator form;

  unsigned rank() const noexcept { return descriptor.rank; }
  std::size_t dimension() const noexcept { return descriptor.dimension; }
};

/// Standard forms (0-based coordinates):
///  symplectic  f(u,w) = sum_i u_{2i} w_{2i+1} - u_{2i+1} w_{2i}
///  hyperbolic  Q = sum_{i<n} x_{2i} x_{2i+1}
///  parabolic   Q = x_0^2 + sum_{i<n} x_{2i+1} x_{2i+2}
///  elliptic    Q = sum_{i<n} x_{2i} x_{2i+1} + x_{2n}^2 + x_{2n} x_{2n+1} + a x_{2n+1}^2
///              with a the least code making t^2 + t + a irreducible
///  Hermitian   f(u,w) = sum_i u_i conj(w_i)
/// Throws std::invalid_argument when p exceeds the field cap.
PolarSpace standard_polar_space(Family family, unsigned n, std::uint64_t q);

/// Two-argument form value (polar form for quadratic kind).
Element evaluate(const FormEvaluator& form, std::span<const Element> u, std::span<const Element> w);

bool is_totally_isotropic(const FormEvaluator& form, const Subspace& s);

/// Normalized representatives (first nonzero entry 1) of all singular
/// vectors, i.e. the points of the polar space, in lexicographic order.
std::vector<Vector> isotropic_points(const PolarSpace& space,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

/// Every totally isotropic k-space exactly once, in lexicographic RREF order.
/// Throws BudgetExceeded when the result (or the ambient scan) would exceed
/// the budget, std::invalid_argument when k > n.
std::vector<Subspace> enumerate_isotropic_kspaces(const PolarSpace& space, unsigned k,
                                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// Every totally isotropic k-space containing base, in lexicographic order.
std::vector<Subspace> enumerate_extensions(const PolarSpace& space, const Subspace& base, unsigned k,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace polar
