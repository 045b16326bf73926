#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qcpc/galois.hpp"
#include "qcpc/product.hpp"
#include "qcpc/qcc.hpp"

// Seeded generators of random codes for property tests and sweeps.
namespace qcpc::random {

inline Polynomial random_poly(Field f, std::size_t max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<Value> sym(0, f.size() - 1);
  std::vector<Value> c(max_len);
  for (auto& v : c) v = sym(rng);
  return Polynomial(f, std::move(c));
}

// Random monic divisor of X^m - 1 (product of a random subset of its
// irreducible factors).
inline Polynomial random_divisor(Field f, std::size_t m, std::mt19937_64& rng) {
  Polynomial d = Polynomial::constant(f, 1);
  for (const auto& fac : xm1_factors(f.characteristic(), m))
    if (rng() & 1) d *= fac;
  return d;
}

// Reduced basis of a random l-QC code: triangular generators with divisor
// diagonals and mixed off-diagonal entries.
inline PolyMatrix random_rgb(Field f, std::size_t ell, std::size_t m, std::mt19937_64& rng) {
  PolyMatrix gens(f, 0, ell);
  for (std::size_t j = 0; j < ell; ++j) {
    std::vector<Polynomial> row(ell, Polynomial(f));
    row[j] = random_divisor(f, m, rng);
    for (std::size_t k = j + 1; k < ell; ++k) {
      switch (rng() % 3) {
        case 0:
          break;
        case 1:
          row[k] = mul_mod_xm1(row[j], random_poly(f, m, rng), m);
          break;
        default:
          row[k] = random_poly(f, m, rng);
      }
    }
    gens.append_row(row);
  }
  return QuasiCyclicCode(gens, m).rgb();
}

// Reduced basis of a random 1-level l-QC code (g, g f_1, ..., g f_{l-1}) with
// g a proper divisor of X^m - 1.
inline PolyMatrix random_one_level(Field f, std::size_t ell, std::size_t m, std::mt19937_64& rng) {
  const Polynomial xm1 = Polynomial::x_pow_minus_one(f, m);
  Polynomial g = random_divisor(f, m, rng);
  if (g == xm1) g = Polynomial::constant(f, 1);
  std::vector<Polynomial> row{g};
  for (std::size_t k = 1; k < ell; ++k) row.push_back(mul_mod_xm1(g, random_poly(f, m, rng), m));
  return QuasiCyclicCode(PolyMatrix::from_rows(f, ell, {row}), m).rgb();
}

struct ProductInstance {
  ProductSpec spec;
  PolyMatrix ga, gb;
};

// Random (l_A, m_A, l_B, m_B) with coprime lengths and m coprime to q, and
// random component codes. `one_level` makes A 1-level.
inline ProductInstance random_product(Field f, std::size_t ell_a, std::size_t ell_b, std::size_t ma_max,
                                      std::size_t mb_max, std::mt19937_64& rng, bool one_level = false) {
  const std::uint64_t q = f.characteristic();
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (std::size_t ma = 1; ma <= ma_max; ++ma)
    for (std::size_t mb = 1; mb <= mb_max; ++mb)
      if (std::gcd(ell_a * ma, ell_b * mb) == 1 && std::gcd<std::uint64_t>(ma * mb, q) == 1) shapes.emplace_back(ma, mb);
  if (shapes.empty()) throw DomainError("no admissible co-index pair");
  const auto [ma, mb] = shapes[rng() % shapes.size()];
  const ProductSpec s = make_product_spec(ell_a, ma, ell_b, mb);
  PolyMatrix ga = one_level ? random_one_level(f, ell_a, ma, rng) : random_rgb(f, ell_a, ma, rng);
  PolyMatrix gb = random_rgb(f, ell_b, mb, rng);
  return {s, std::move(ga), std::move(gb)};
}

}  // namespace qcpc::random
