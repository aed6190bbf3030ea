#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace polar {

/// Field elements are integer codes 0..p-1. For an extension field the code of
/// c_0 + c_1 x + ... + c_{r-1} x^{r-1} is sum c_i * l^i, so 0 and 1 are the
/// additive and multiplicative identities.
using Element = std::uint8_t;

/// Lookup-table arithmetic for a finite field F_p with p = l^r <= 32.
///
/// Extension fields are built over the lexicographically least monic
/// irreducible polynomial of degree r over F_l (ordered by the integer code of
/// the non-leading coefficients), so tables are reproducible.
/// Immutable after construction.
class FieldTable {
 public:
  static constexpr unsigned kMaxOrder = 32;

  unsigned order() const noexcept { return order_; }
  unsigned characteristic() const noexcept { return characteristic_; }
  unsigned degree() const noexcept { return degree_; }

  /// Coefficients c_0..c_r of the defining polynomial (c_r = 1). For prime
  /// fields this is x, i.e. {0, 1}.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const noexcept { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * order_ + b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  /// Multiplicative inverse; throws std::domain_error for 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, unsigned e) const noexcept;

  /// True when p is a square, i.e. the involution x -> x^sqrt(p) exists.
  bool has_conjugation() const noexcept { return degree_ % 2 == 0; }
  /// sqrt(p) for square-order fields, 0 otherwise.
  unsigned conjugation_base() const noexcept { return conj_base_; }

  bool contains(unsigned code) const noexcept { return code < order_; }

 private:
  friend FieldTable make_field(unsigned p);
  FieldTable() = default;

  unsigned order_ = 0;
  unsigned characteristic_ = 0;
  unsigned degree_ = 0;
  unsigned conj_base_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
  std::vector<Element> conj_;

  friend Element conjugate(Element x, const FieldTable& field);
};

/// Builds F_p. Throws std::invalid_argument when p is not a prime power or
/// exceeds FieldTable::kMaxOrder.
FieldTable make_field(unsigned p);

/// x -> x^q where p = q^2. Throws std::invalid_argument for non-square p.
Element conjugate(Element x, const FieldTable& field);

/// Decomposes p = l^r; returns false when p is not a prime power.
bool prime_power_decompose(std::uint64_t p, std::uint64_t& prime, unsigned& exponent);

}  // namespace polar
