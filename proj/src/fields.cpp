#include "polardesign/fields.hpp"

#include <stdexcept>
#include <string>

namespace polar {

namespace {

using Poly = std::vector<unsigned>;  // coefficients, lowest degree first

Poly decode_poly(unsigned code, unsigned prime, unsigned len) {
  Poly out(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    out[i] = code % prime;
    code /= prime;
  }
  return out;
}

unsigned encode_poly(const Poly& poly, unsigned prime) {
  unsigned code = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) code = code * prime + *it;
  return code;
}

// Remainder of num modulo a monic divisor, coefficients in F_prime.
Poly poly_mod(Poly num, const Poly& divisor, unsigned prime) {
  const std::size_t dd = divisor.size() - 1;
  for (std::size_t i = num.size(); i-- > dd;) {
    const unsigned lead = num[i] % prime;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      const std::size_t pos = i - dd + j;
      num[pos] = (num[pos] + prime * prime - lead * divisor[j] % prime) % prime;
    }
  }
  num.resize(dd);
  return num;
}

bool is_irreducible(const Poly& poly, unsigned prime) {
  const unsigned degree = static_cast<unsigned>(poly.size() - 1);
  for (unsigned d = 1; 2 * d <= degree; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= prime;
    for (unsigned code = 0; code < count; ++code) {
      Poly divisor = decode_poly(code, prime, d);
      divisor.push_back(1);
      const Poly rem = poly_mod(poly, divisor, prime);
      bool zero = true;
      for (unsigned c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

Poly least_irreducible(unsigned prime, unsigned degree) {
  unsigned count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= prime;
  for (unsigned code = 0; code < count; ++code) {
    Poly poly = decode_poly(code, prime, degree);
    poly.push_back(1);
    if (is_irreducible(poly, prime)) return poly;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

bool prime_power_decompose(std::uint64_t p, std::uint64_t& prime, unsigned& exponent) {
  if (p < 2) return false;
  std::uint64_t l = 2;
  while (l * l <= p && p % l != 0) ++l;
  if (p % l != 0) l = p;
  unsigned r = 0;
  while (p % l == 0) {
    p /= l;
    ++r;
  }
  if (p != 1) return false;
  prime = l;
  exponent = r;
  return true;
}

FieldTable make_field(unsigned p) {
  std::uint64_t prime64 = 0;
  unsigned degree = 0;
  if (!prime_power_decompose(p, prime64, degree))
    throw std::invalid_argument("field order " + std::to_string(p) + " is not a prime power");
  if (p > FieldTable::kMaxOrder)
    throw std::invalid_argument("field order " + std::to_string(p) + " exceeds the cap of " +
                                std::to_string(FieldTable::kMaxOrder));
  const auto prime = static_cast<unsigned>(prime64);

  FieldTable f;
  f.order_ = p;
  f.characteristic_ = prime;
  f.degree_ = degree;
  f.modulus_ = degree == 1 ? Poly{0, 1} : least_irreducible(prime, degree);

  f.add_.resize(p * p);
  f.mul_.resize(p * p);
  f.neg_.resize(p);
  f.inv_.assign(p, 0);
  for (unsigned a = 0; a < p; ++a) {
    const Poly pa = decode_poly(a, prime, degree);
    for (unsigned b = 0; b < p; ++b) {
      const Poly pb = decode_poly(b, prime, degree);
      Poly sum(degree);
      for (unsigned i = 0; i < degree; ++i) sum[i] = (pa[i] + pb[i]) % prime;
      f.add_[a * p + b] = static_cast<Element>(encode_poly(sum, prime));

      Poly prod(2 * degree - 1, 0);
      for (unsigned i = 0; i < degree; ++i)
        for (unsigned j = 0; j < degree; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % prime;
      const Poly reduced = degree == 1 ? prod : poly_mod(prod, f.modulus_, prime);
      f.mul_[a * p + b] = static_cast<Element>(encode_poly(reduced, prime));
    }
  }
  for (unsigned a = 0; a < p; ++a) {
    for (unsigned b = 0; b < p; ++b) {
      if (f.add_[a * p + b] == 0) f.neg_[a] = static_cast<Element>(b);
      if (f.mul_[a * p + b] == 1) f.inv_[a] = static_cast<Element>(b);
    }
  }
  if (degree % 2 == 0) {
    unsigned q = 1;
    for (unsigned i = 0; i < degree / 2; ++i) q *= prime;
    f.conj_base_ = q;
    f.conj_.resize(p);
    for (unsigned a = 0; a < p; ++a) f.conj_[a] = f.pow(static_cast<Element>(a), q);
  }
  return f;
}

Element FieldTable::inv(Element a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  return inv_[a];
}

Element FieldTable::pow(Element a, unsigned e) const noexcept {
  Element result = 1;
  Element base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element conjugate(Element x, const FieldTable& field) {
  if (!field.has_conjugation())
    throw std::invalid_argument("conjugation requires a field of square order, got " +
                                std::to_string(field.order()));
  return field.conj_[x];
}

}  // namespace polar
