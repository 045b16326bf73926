#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "qcpc/field.hpp"
#include "qcpc/linalg.hpp"
#include "qcpc/polynomial.hpp"

namespace qcpc {

// Smallest s >= 1 with q^s = 1 mod n; requires gcd(q, n) = 1.
inline std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
  if (n == 0) throw DomainError("order modulo zero");
  if (n == 1) return 1;
  if (std::gcd(q, n) != 1) throw DomainError("q and n are not coprime");
  std::uint64_t x = q % n, s = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * q % n);
    ++s;
  }
  return s;
}

// Lowest monic irreducible of degree s over F_p, comparing coefficient
// vectors from the highest degree down.
inline std::vector<std::uint64_t> lowest_irreducible(std::uint64_t p, std::uint32_t s) {
  std::vector<std::uint64_t> f(s + 1, 0);
  f[s] = 1;
  while (true) {
    if (detail::raw_is_irreducible(f, p)) return f;
    std::size_t i = 0;
    while (i < s && ++f[i] == p) f[i++] = 0;
    if (i == s) throw DomainError("no irreducible polynomial found");
  }
}

// Default defining polynomial for F_{p^s}. F_{2^12} uses
// X^12 + X^7 + X^6 + X^5 + X^3 + X + 1, for which X is primitive.
inline std::vector<std::uint64_t> default_modulus(std::uint64_t p, std::uint32_t s) {
  if (s == 1) return {0, 1};
  if (p == 2 && s == 12) return {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1};
  return lowest_irreducible(p, s);
}

inline Field extension_field(std::uint64_t p, std::uint32_t s) {
  if (s == 0) throw DomainError("extension degree must be positive");
  return Field::from_modulus(p, default_modulus(p, s));
}

// Smallest extension of F_q containing the n-th roots of unity.
inline Field field_extend(std::uint64_t q, std::uint64_t n) {
  if (!detail::is_prime(q)) throw OutOfScope("only prime alphabets are supported");
  if (n == 0 || std::gcd(q, n) != 1) throw DomainError("n must be positive and coprime to q");
  return extension_field(q, static_cast<std::uint32_t>(multiplicative_order(q, n)));
}

// xi^((|F|-1)/n) for the field's primitive element xi.
inline Element root_of_unity(const Field& f, std::uint64_t n) {
  if (n == 0 || (f.size() - 1) % n != 0) throw DomainError("n does not divide |F| - 1");
  return f.primitive_element().pow(static_cast<std::int64_t>((f.size() - 1) / n));
}

struct CyclotomicCoset {
  std::uint64_t representative;
  std::uint64_t modulus;
  std::uint64_t q;
  std::vector<std::uint64_t> members;  // i, iq, iq^2, ... mod modulus

  bool contains(std::uint64_t x) const {
    return std::find(members.begin(), members.end(), x % modulus) != members.end();
  }
};

inline CyclotomicCoset cyclotomic_coset(std::uint64_t i, std::uint64_t m, std::uint64_t q) {
  if (m == 0 || std::gcd(q, m) != 1) throw DomainError("coset modulus must be coprime to q");
  CyclotomicCoset c{i % m, m, q, {}};
  std::uint64_t x = i % m;
  do {
    c.members.push_back(x);
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * q % m);
  } while (x != i % m);
  return c;
}

// All cosets of Z_m, ordered by smallest member; representative is the smallest member.
inline std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint64_t m, std::uint64_t q) {
  std::vector<bool> seen(m, false);
  std::vector<CyclotomicCoset> out;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (seen[i]) continue;
    auto c = cyclotomic_coset(i, m, q);
    for (auto x : c.members) seen[x] = true;
    out.push_back(std::move(c));
  }
  return out;
}

// Minimal polynomial over the prime subfield of alpha^i, where alpha has order m.
inline Polynomial minimal_polynomial(const Element& alpha, std::uint64_t m, std::uint64_t i) {
  const Field& ext = alpha.field();
  if (!alpha.pow(static_cast<std::int64_t>(m)).is_one()) throw DomainError("alpha^m != 1");
  const auto coset = cyclotomic_coset(i, m, ext.characteristic());
  Polynomial acc = Polynomial::constant(ext, 1);
  for (auto j : coset.members) {
    const Element r = alpha.pow(static_cast<std::int64_t>(j));
    acc = acc * Polynomial(ext, {ext.neg(r.value()), 1});
  }
  return restrict_to_prime(acc);
}

// Irreducible factors of X^m - 1 over F_q, one per cyclotomic coset.
inline std::vector<Polynomial> xm1_factors(std::uint64_t q, std::uint64_t m) {
  const Field ext = field_extend(q, m);
  const Element alpha = root_of_unity(ext, m);
  std::vector<Polynomial> out;
  for (const auto& c : cyclotomic_cosets(m, q)) out.push_back(minimal_polynomial(alpha, m, c.representative));
  return out;
}

// Exponents z in [m) with g(alpha^z) = 0.
inline std::vector<std::uint64_t> root_exponents(const Polynomial& g, const Element& alpha, std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t z = 0; z < m; ++z)
    if (evaluate(g, alpha.pow(static_cast<std::int64_t>(z))).is_zero()) out.push_back(z);
  return out;
}

// Coordinates of x over F_p in the given F_p-basis of the extension.
inline std::vector<Value> subfield_coordinates(const Element& x, std::span<const Element> basis) {
  const Field& ext = x.field();
  const std::uint32_t s = ext.degree();
  if (basis.size() != s) throw DomainError("basis must have s elements");
  const Field base = Field::prime(ext.characteristic());
  Matrix a(base, s, s);
  for (std::size_t j = 0; j < s; ++j) {
    if (!(basis[j].field() == ext)) throw FieldMismatch("basis element in another field");
    const auto d = basis[j].digits();
    for (std::size_t i = 0; i < s; ++i) a(i, j) = d[i];
  }
  const auto rhs = x.digits();
  auto sol = solve(a, rhs);
  if (sol.status != Solution::Status::unique) throw DomainError("basis is linearly dependent");
  return sol.x;
}

}  // namespace qcpc
