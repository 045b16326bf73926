#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcpc/linalg.hpp"
#include "qcpc/qcc.hpp"

namespace qcpc {

// Shape of a product A (x) B of an l_A-QC code of co-index m_A (the row code)
// and an l_B-QC code of co-index m_B (the column code), with a n_A + b n_B = 1.
struct ProductSpec {
  std::size_t ell_a = 1, m_a = 1, ell_b = 1, m_b = 1;
  std::int64_t a = 0, b = 0;

  std::size_t n_a() const { return ell_a * m_a; }
  std::size_t n_b() const { return ell_b * m_b; }
  std::size_t ell() const { return ell_a * ell_b; }
  std::size_t m() const { return m_a * m_b; }
  std::size_t n() const { return n_a() * n_b(); }

  friend bool operator==(const ProductSpec&, const ProductSpec&) = default;
};

// Bezout pair (a, b) with a n_a + b n_b = 1 and a in [0, n_b).
inline std::pair<std::int64_t, std::int64_t> bezout_pair(std::uint64_t n_a, std::uint64_t n_b) {
  if (n_a == 0 || n_b == 0 || std::gcd(n_a, n_b) != 1) throw DomainError("lengths must be coprime");
  if (n_b == 1) return {0, 1};
  std::int64_t a = 0;
  while (static_cast<std::uint64_t>(a) * n_a % n_b != 1) ++a;
  const std::int64_t b = (1 - a * static_cast<std::int64_t>(n_a)) / static_cast<std::int64_t>(n_b);
  return {a, b};
}

inline ProductSpec make_product_spec(std::size_t ell_a, std::size_t m_a, std::size_t ell_b, std::size_t m_b,
                                     std::optional<std::pair<std::int64_t, std::int64_t>> ab = std::nullopt) {
  if (!ell_a || !m_a || !ell_b || !m_b) throw DomainError("indices and co-indices must be positive");
  ProductSpec s{ell_a, m_a, ell_b, m_b, 0, 0};
  if (std::gcd(s.n_a(), s.n_b()) != 1) throw DomainError("gcd(n_A, n_B) must be 1");
  if (ab) {
    const auto na = static_cast<std::int64_t>(s.n_a()), nb = static_cast<std::int64_t>(s.n_b());
    if (ab->first * na + ab->second * nb != 1) throw DomainError("a n_A + b n_B != 1");
    s.a = ab->first;
    s.b = ab->second;
  } else {
    std::tie(s.a, s.b) = bezout_pair(s.n_a(), s.n_b());
  }
  return s;
}

namespace detail {
inline std::size_t mod_i128(__int128 x, std::size_t m) {
  const auto mm = static_cast<__int128>(m);
  return static_cast<std::size_t>(((x % mm) + mm) % mm);
}
}  // namespace detail

// Position of array entry (i, j), i < n_B, j < n_A, in the length-n codeword.
inline std::size_t index_map(const ProductSpec& s, std::size_t i, std::size_t j) {
  if (i >= s.n_b() || j >= s.n_a()) throw DomainError("array index out of range");
  const __int128 x = static_cast<__int128>(i) * s.a * static_cast<__int128>(s.n_a() * s.ell_a) +
                     static_cast<__int128>(j) * s.b * static_cast<__int128>(s.n_b() * s.ell_b);
  return detail::mod_i128(x, s.n());
}

// theta(i, j) = i a n_A + j b n_B mod m.
inline std::size_t submatrix_map(const ProductSpec& s, std::int64_t i, std::int64_t j) {
  const __int128 x = static_cast<__int128>(i) * s.a * static_cast<__int128>(s.n_a()) +
                     static_cast<__int128>(j) * s.b * static_cast<__int128>(s.n_b());
  return detail::mod_i128(x, s.m());
}

// s(g, h) = -g b m_B - h a m_A mod m.
inline std::size_t shift_term(const ProductSpec& s, std::size_t g, std::size_t h) {
  const __int128 x = -static_cast<__int128>(g) * s.b * static_cast<__int128>(s.m_b) -
                     static_cast<__int128>(h) * s.a * static_cast<__int128>(s.m_a);
  return detail::mod_i128(x, s.m());
}

// Column (g, h) of the product vector, g < l_B, h < l_A, sits at g + h l_B.
inline std::size_t product_column(const ProductSpec& s, std::size_t g, std::size_t h) { return g + h * s.ell_b; }

// Array (n_B x n_A, rows in A, columns in B) to l polynomials c_{g,h}.
inline QcWord matrix_to_polys(const ProductSpec& s, const Matrix& arr) {
  if (arr.rows() != s.n_b() || arr.cols() != s.n_a()) throw DomainError("array must be n_B x n_A");
  const Field& f = arr.field();
  QcWord out(s.ell(), Polynomial(f));
  for (std::size_t g = 0; g < s.ell_b; ++g)
    for (std::size_t h = 0; h < s.ell_a; ++h) {
      std::vector<Value> c(s.m(), 0);
      const std::size_t sh = shift_term(s, g, h);
      for (std::size_t i = 0; i < s.m_b; ++i)
        for (std::size_t j = 0; j < s.m_a; ++j) {
          const Value v = arr(i * s.ell_b + g, j * s.ell_a + h);
          if (!v) continue;
          const std::size_t e = (submatrix_map(s, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)) + sh) % s.m();
          c[e] = f.add(c[e], v);
        }
      out[product_column(s, g, h)] = Polynomial(f, std::move(c));
    }
  return out;
}

inline Matrix polys_to_matrix(const ProductSpec& s, const QcWord& w) {
  if (w.size() != s.ell()) throw DomainError("word must have l_A l_B components");
  const Field& f = w[0].field();
  Matrix arr(f, s.n_b(), s.n_a());
  for (std::size_t g = 0; g < s.ell_b; ++g)
    for (std::size_t h = 0; h < s.ell_a; ++h) {
      const Polynomial& c = w[product_column(s, g, h)];
      const std::size_t sh = shift_term(s, g, h);
      for (std::size_t i = 0; i < s.m_b; ++i)
        for (std::size_t j = 0; j < s.m_a; ++j) {
          const std::size_t e = (submatrix_map(s, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)) + sh) % s.m();
          arr(i * s.ell_b + g, j * s.ell_a + h) = c.coeff(e);
        }
    }
  return arr;
}

// c(X) = sum_{g,h} c_{g,h}(X^l) X^{g l_A + h l_B} mod X^n - 1.
inline Polynomial polys_to_univariate(const ProductSpec& s, const QcWord& w) {
  if (w.size() != s.ell()) throw DomainError("word must have l_A l_B components");
  const Field& f = w[0].field();
  std::vector<Value> c(s.n(), 0);
  for (std::size_t g = 0; g < s.ell_b; ++g)
    for (std::size_t h = 0; h < s.ell_a; ++h) {
      const Polynomial& p = w[product_column(s, g, h)];
      for (std::size_t e = 0; e < p.size(); ++e) {
        const std::size_t pos = (e * s.ell() + g * s.ell_a + h * s.ell_b) % s.n();
        c[pos] = f.add(c[pos], p.coeff(e));
      }
    }
  return Polynomial(f, std::move(c));
}

// c(X) = sum_{i,j} m_{i,j} X^{mu(i,j)}.
inline Polynomial matrix_to_univariate(const ProductSpec& s, const Matrix& arr) {
  if (arr.rows() != s.n_b() || arr.cols() != s.n_a()) throw DomainError("array must be n_B x n_A");
  const Field& f = arr.field();
  std::vector<Value> c(s.n(), 0);
  for (std::size_t i = 0; i < s.n_b(); ++i)
    for (std::size_t j = 0; j < s.n_a(); ++j) c[index_map(s, i, j)] = arr(i, j);
  return Polynomial(f, std::move(c));
}

// Generator matrix of a product code: a core matrix whose columns are then
// multiplied by X^shift mod X^m - 1.
struct ProductBasis {
  std::string method;
  ProductSpec spec;
  PolyMatrix core;
  std::vector<std::size_t> shifts;
  bool verified = true;

  // core * diag(X^shifts) mod X^m - 1; entries equal to X^m - 1 are kept.
  PolyMatrix generators() const {
    const std::size_t m = spec.m();
    const Polynomial xm1 = Polynomial::x_pow_minus_one(core.field(), m);
    PolyMatrix out = core;
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t j = 0; j < out.cols(); ++j) {
        Polynomial& e = out(i, j);
        if (e.is_zero() || e == xm1) continue;
        e = shift_mod_xm1(e, static_cast<std::int64_t>(shifts[j]), m);
      }
    return out;
  }

  QuasiCyclicCode code() const { return QuasiCyclicCode(generators(), spec.m()); }
  // Code generated by the core alone, before the column shifts.
  QuasiCyclicCode core_code() const { return QuasiCyclicCode(core, spec.m()); }
};

namespace detail {

inline std::vector<std::size_t> product_shifts(const ProductSpec& s) {
  std::vector<std::size_t> sh(s.ell());
  for (std::size_t g = 0; g < s.ell_b; ++g)
    for (std::size_t h = 0; h < s.ell_a; ++h) sh[product_column(s, g, h)] = shift_term(s, g, h);
  return sh;
}

inline void check_factors(const ProductSpec& s, const PolyMatrix& ga, const PolyMatrix& gb) {
  if (!(ga.field() == gb.field())) throw FieldMismatch("component codes over different fields");
  if (ga.rows() != s.ell_a || ga.cols() != s.ell_a || gb.rows() != s.ell_b || gb.cols() != s.ell_b)
    throw DomainError("component matrices do not match the product shape");
  if (!satisfies_rgb_conditions(ga, s.m_a) || !satisfies_rgb_conditions(gb, s.m_b))
    throw DomainError("component matrices must be in RGB/POT form");
}

// g^A_{h,h'}(X^{b n_B}) g^B_{g,g'}(X^{a n_A}) mod X^m - 1.
inline Polynomial product_entry(const ProductSpec& s, const PolyMatrix& ga, const PolyMatrix& gb, std::size_t g,
                                std::size_t h, std::size_t g2, std::size_t h2) {
  const std::size_t m = s.m();
  const auto ya = static_cast<std::int64_t>(detail::mod_i128(static_cast<__int128>(s.b) * s.n_b(), m));
  const auto zb = static_cast<std::int64_t>(detail::mod_i128(static_cast<__int128>(s.a) * s.n_a(), m));
  return mul_mod_xm1(substitute_power(ga(h, h2), ya, m), substitute_power(gb(g, g2), zb, m), m);
}

}  // namespace detail

// Unreduced generator matrix: the upper-triangular core U0, (X^m - 1) I implied.
inline ProductBasis unreduced_basis(const ProductSpec& s, const PolyMatrix& ga, const PolyMatrix& gb) {
  detail::check_factors(s, ga, gb);
  PolyMatrix u(ga.field(), s.ell(), s.ell());
  for (std::size_t g = 0; g < s.ell_b; ++g)
    for (std::size_t h = 0; h < s.ell_a; ++h)
      for (std::size_t g2 = g; g2 < s.ell_b; ++g2)
        for (std::size_t h2 = h; h2 < s.ell_a; ++h2)
          u(product_column(s, g, h), product_column(s, g2, h2)) = detail::product_entry(s, ga, gb, g, h, g2, h2);
  return {"unreduced", s, std::move(u), detail::product_shifts(s), true};
}

// Diagonal gcd(X^m - 1, p_diag) with cofactor v, and off-diagonals v * p.
inline ProductBasis conjecture_core(const ProductSpec& s, const PolyMatrix& ga, const PolyMatrix& gb) {
  detail::check_factors(s, ga, gb);
  const std::size_t m = s.m();
  const Polynomial xm1 = Polynomial::x_pow_minus_one(ga.field(), m);
  PolyMatrix u(ga.field(), s.ell(), s.ell());
  for (std::size_t g = 0; g < s.ell_b; ++g)
    for (std::size_t h = 0; h < s.ell_a; ++h) {
      const std::size_t r = product_column(s, g, h);
      const auto x = xgcd(xm1, detail::product_entry(s, ga, gb, g, h, g, h));
      u(r, r) = x.gcd;
      for (std::size_t g2 = g; g2 < s.ell_b; ++g2)
        for (std::size_t h2 = h; h2 < s.ell_a; ++h2) {
          if (g2 == g && h2 == h) continue;
          u(r, product_column(s, g2, h2)) = mul_mod_xm1(x.v, detail::product_entry(s, ga, gb, g, h, g2, h2), m);
        }
    }
  return {"conjecture", s, std::move(u), detail::product_shifts(s), true};
}

// Pre-RGB form for l_A = 2, l_B = 1.
inline ProductBasis pre_rgb_2qc(const ProductSpec& s, const PolyMatrix& ga, const PolyMatrix& gb) {
  if (s.ell_a != 2 || s.ell_b != 1) throw DomainError("requires l_A = 2 and l_B = 1");
  detail::check_factors(s, ga, gb);
  const std::size_t m = s.m();
  const Field& f = ga.field();
  const Polynomial xm1 = Polynomial::x_pow_minus_one(f, m);
  const Polynomial p00 = detail::product_entry(s, ga, gb, 0, 0, 0, 0);
  const Polynomial p01 = detail::product_entry(s, ga, gb, 0, 0, 0, 1);
  const Polynomial p11 = detail::product_entry(s, ga, gb, 0, 1, 0, 1);
  const auto x0 = xgcd(xm1, p00);
  PolyMatrix u(f, 2, 2);
  u(0, 0) = x0.gcd;
  u(0, 1) = mul_mod_xm1(x0.v, p01, m);
  u(1, 1) = gcd(xm1, p11);
  return {"thm2", s, std::move(u), {0, shift_term(s, 0, 1)}, true};
}

// Reduced basis when A has level 1 and l_B = 1.
inline ProductBasis rgb_1level(const ProductSpec& s, const PolyMatrix& ga, const PolyMatrix& gb) {
  if (s.ell_b != 1) throw DomainError("requires l_B = 1");
  detail::check_factors(s, ga, gb);
  if (QuasiCyclicCode::from_rgb(ga, s.m_a).level() != 1) throw DomainError("row code must have level 1");
  const std::size_t m = s.m();
  const Field& f = ga.field();
  const Polynomial xm1 = Polynomial::x_pow_minus_one(f, m);
  const auto ya = static_cast<std::int64_t>(detail::mod_i128(static_cast<__int128>(s.b) * s.n_b(), m));
  const Polynomial g = gcd(xm1, detail::product_entry(s, ga, gb, 0, 0, 0, 0));
  PolyMatrix u = PolyMatrix::identity(f, s.ell(), xm1);
  u(0, 0) = g;
  for (std::size_t i = 1; i < s.ell_a; ++i) {
    const Polynomial fi = exact_div(ga(0, i), ga(0, 0));
    u(0, i) = mul_mod_xm1(g, substitute_power(fi, ya, m), m);
  }
  return {"thm3", s, std::move(u), detail::product_shifts(s), true};
}

// Conjectured basis for general l_A, l_B, with a module-equality check
// against the unreduced basis.
inline ProductBasis conjecture_basis(const ProductSpec& s, const PolyMatrix& ga, const PolyMatrix& gb) {
  auto out = conjecture_core(s, ga, gb);
  out.verified = out.code() == unreduced_basis(s, ga, gb).code();
  return out;
}

}  // namespace qcpc
