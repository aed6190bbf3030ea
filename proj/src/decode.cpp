#include "polardesign/decode.hpp"

#include <stdexcept>

#include "polardesign/counting.hpp"
#include "polardesign/incidence.hpp"
#include "polardesign/parallel.hpp"

namespace polar {

BigInt bareiss_determinant(BigMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

DecodingSystem build_decoding_system(const BigInt& p, unsigned t, unsigned k) {
  if (p < 2) throw std::invalid_argument("decoding system needs p >= 2");
  if (t < 1 || t > k)
    throw std::invalid_argument("decoding system needs 1 <= t <= k, got t = " + std::to_string(t) +
                                ", k = " + std::to_string(k));
  DecodingSystem s;
  s.p = p;
  s.t = t;
  s.k = k;
  const std::size_t size = t + 1;
  s.d.assign(size, std::vector<BigInt>(size, 0));
  for (std::size_t ell = 0; ell < size; ++ell)
    for (std::size_t j = 0; j < size; ++j)
      s.d[ell][j] = intersection_pattern_count(p, k, t, static_cast<long>(ell), static_cast<long>(j));

  s.det = 1;
  for (std::size_t i = 0; i < size; ++i) {
    if (s.d[i][i] == 0) throw std::logic_error("decoding matrix has a zero diagonal entry");
    s.det *= s.d[i][i];
  }

  // Back-substitution with right-hand side (0, ..., 0, det D).
  s.f.assign(size, 0);
  for (std::size_t row = size; row-- > 0;) {
    BigInt rhs = row == t ? s.det : BigInt(0);
    for (std::size_t j = row + 1; j < size; ++j) rhs -= s.d[row][j] * s.f[j];
    if (rhs % s.d[row][row] != 0) throw std::logic_error("back-substitution left a non-integral weight");
    s.f[row] = rhs / s.d[row][row];
  }

  s.det_j.resize(size);
  for (std::size_t j = 0; j < size; ++j) {
    BigMatrix dj = s.d;
    for (std::size_t r = 0; r < size; ++r) dj[r][j] = r == t ? 1 : 0;
    s.det_j[j] = bareiss_determinant(std::move(dj));
    if (s.det_j[j] != s.f[j]) throw std::logic_error("Cramer determinant disagrees with back-substitution");
  }

  s.m = s.det;
  if (s.m < 0) {
    s.m = -s.m;
    for (auto& x : s.f) x = -x;
  }
  return s;
}

bool solves_system(const DecodingSystem& system) {
  const std::size_t size = system.t + 1;
  for (std::size_t row = 0; row < size; ++row) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < size; ++j) acc += system.d[row][j] * system.f[j];
    if (acc != (row == system.t ? system.m : BigInt(0))) return false;
  }
  return true;
}

BigInt gamma_value(const DecodingSystem& system, const FieldTable& field, const Subspace& v, const Subspace& w,
                   const Subspace& u) {
  if (v.dim() != system.t) throw std::invalid_argument("V must have dimension t");
  if (w.dim() != system.k + system.t) throw std::invalid_argument("W must have dimension k + t");
  if (u.dim() != system.k) throw std::invalid_argument("U must have dimension k");
  if (!contains(field, w, v)) throw std::invalid_argument("V is not contained in W");
  if (!contains(field, w, u)) return 0;
  return system.f[intersection_dimension(field, u, v)];
}

BigInt gamma_l1_closed_form(const DecodingSystem& system) {
  BigInt total = 0;
  const long t = system.t;
  const long k = system.k;
  for (long j = 0; j <= t; ++j) {
    const BigInt w = meeting_count(system.p, k + t, t, k, j);
    total += w * abs(system.f[static_cast<std::size_t>(j)]);
  }
  return total;
}

DeterminantBoundReport determinant_bound_check(const DecodingSystem& system) {
  DeterminantBoundReport r;
  const std::uint64_t exponent = std::uint64_t{system.k} * (system.t + 1) * (system.t + 1);
  r.bound = pow_big(system.p, exponent);
  r.det_margin = r.bound - abs(system.det);
  r.ok = r.det_margin >= 0;
  for (const auto& dj : system.det_j) {
    r.det_j_margins.push_back(r.bound - abs(dj));
    r.ok = r.ok && r.det_j_margins.back() >= 0;
  }
  return r;
}

LocalDecodabilityReport verify_local_decodability(const PolarSpace& space, unsigned t, unsigned k, const Subspace& v,
                                                  std::optional<Subspace> w, unsigned threads,
                                                  std::uint64_t budget) {
  if (t < 1 || t > k || t + k > space.rank())
    throw std::invalid_argument("local decodability needs 1 <= t <= k and t + k <= n");
  const FieldTable& field = *space.field;
  if (v.ambient() != space.dimension() || v.dim() != t || !is_totally_isotropic(space.form, v))
    throw std::invalid_argument("V must be a totally isotropic t-space");
  if (!w) w = enumerate_extensions(space, v, k + t, budget).front();
  if (w->ambient() != space.dimension() || w->dim() != k + t || !is_totally_isotropic(space.form, *w) ||
      !contains(field, *w, v))
    throw std::invalid_argument("W must be a totally isotropic (k+t)-space containing V");

  const DecodingSystem system = build_decoding_system(BigInt(space.descriptor.order), t, k);
  LocalDecodabilityReport r;
  r.v = v;
  r.w = *w;
  r.m = system.m;

  const auto us = subspaces_of(field, *w, k);
  r.w_subspaces = us.size();
  std::vector<BigInt> gammas;
  gammas.reserve(us.size());
  r.gamma_l1 = 0;
  for (const auto& u : us) {
    gammas.push_back(gamma_value(system, field, v, *w, u));
    r.gamma_l1 += abs(gammas.back());
  }

  const auto t_spaces = enumerate_isotropic_kspaces(space, t, budget);
  std::vector<BigInt> sums(t_spaces.size(), 0);
  parallel_chunks(t_spaces.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t u = 0; u < us.size(); ++u)
        if (phi(field, t_spaces[i], us[u]) == 1) sums[i] += gammas[u];
  });
  for (std::size_t i = 0; i < t_spaces.size(); ++i) {
    const BigInt expected = t_spaces[i] == v ? system.m : BigInt(0);
    if (sums[i] != expected) {
      r.verified = false;
      r.failing_t_space = t_spaces[i];
      r.failing_sum = sums[i];
      break;
    }
  }

  r.t_space_count = t_spaces.size();
  r.c4 = r.m > r.gamma_l1 ? r.m : r.gamma_l1;
  r.c3_bound = 2 * r.c4 * r.t_space_count;
  r.gamma_l1_bound = gaussian_binomial(k + t, k, system.p) * pow_big(system.p, std::uint64_t{k} * (t + 1) * (t + 1));
  r.gamma_bound_ok = r.gamma_l1 <= r.gamma_l1_bound;
  return r;
}

}  // namespace polar
