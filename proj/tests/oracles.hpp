#pragma once

// Brute-force reference computations shared by the unit and acceptance tests.

#include <map>
#include <tuple>

#include "polardesign/counting.hpp"
#include "polardesign/geometry.hpp"

namespace oracle {

using namespace polar;

/// Basis vectors e_{2i}, i < dim, of the hyperbolic form: a totally isotropic
/// subspace of D_dim.
inline Subspace even_coordinate_space(const FieldTable& f, std::size_t dim, std::size_t ambient) {
  Matrix m(dim, ambient);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, 2 * i) = 1;
  return rref_canonicalize(f, m);
}

inline Subspace span_of_coordinates(const FieldTable& f, const std::vector<std::size_t>& coords, std::size_t ambient) {
  Matrix m(coords.size(), ambient);
  for (std::size_t r = 0; r < coords.size(); ++r) m.at(r, coords[r]) = 1;
  return rref_canonicalize(f, m);
}

/// For W = span(e_0, e_2, ..., e_{2(k+t)-2}) inside the hyperbolic space of
/// rank k+t over F_p, V = first t basis vectors of W and V' sharing the first
/// ell of them: counts k-spaces U with V' <= U <= W by dim(U cap V).
/// Keyed by (ell, j).
inline std::map<std::pair<long, long>, BigInt> pattern_counts(unsigned p, unsigned t, unsigned k) {
  const PolarSpace space = standard_polar_space(Family::Hyperbolic, k + t, p);
  const FieldTable& f = *space.field;
  const std::size_t d = space.dimension();
  const Subspace w = even_coordinate_space(f, k + t, d);
  if (!is_totally_isotropic(space.form, w)) throw std::logic_error("W is not isotropic");

  std::vector<std::size_t> v_coords;
  for (std::size_t i = 0; i < t; ++i) v_coords.push_back(2 * i);
  const Subspace v = span_of_coordinates(f, v_coords, d);

  std::vector<Subspace> v_primes;
  for (unsigned ell = 0; ell < t; ++ell) {
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < ell; ++i) coords.push_back(2 * i);
    for (std::size_t i = t; coords.size() < t; ++i) coords.push_back(2 * i);
    v_primes.push_back(span_of_coordinates(f, coords, d));
    if (intersection_dimension(f, v, v_primes.back()) != ell) throw std::logic_error("bad V'");
  }

  std::map<std::pair<long, long>, BigInt> out;
  for (const Subspace& u : subspaces_of(f, w, k)) {
    const long j = static_cast<long>(intersection_dimension(f, u, v));
    for (unsigned ell = 0; ell < t; ++ell)
      if (contains(f, u, v_primes[ell])) out[{ell, j}] += 1;
  }
  return out;
}

/// sum over k-subspaces U of a (k+t)-space of |f(dim(U cap V))|, by enumeration.
inline BigInt gamma_l1_by_enumeration(unsigned p, unsigned t, unsigned k, const std::vector<BigInt>& f_values) {
  const FieldTable f = make_field(p);
  const std::size_t d = k + t;
  Matrix id(d, d);
  for (std::size_t i = 0; i < d; ++i) id.at(i, i) = 1;
  const Subspace w = rref_canonicalize(f, id);
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < t; ++i) coords.push_back(i);
  const Subspace v = span_of_coordinates(f, coords, d);
  BigInt total = 0;
  for (const Subspace& u : subspaces_of(f, w, k)) total += abs(f_values[intersection_dimension(f, u, v)]);
  return total;
}

}  // namespace oracle
