#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "qcpc/galois.hpp"
#include "qcpc/poly_matrix.hpp"

namespace qcpc {

// A codeword of an l-QC code: l polynomials of degree < m.
using QcWord = std::vector<Polynomial>;

namespace detail {

inline void reduce_row(std::vector<Polynomial>& r, std::size_t from, std::size_t m) {
  for (std::size_t k = from; k < r.size(); ++k) r[k] = reduce_mod_xm1(r[k], m);
}

inline bool all_zero(const std::vector<Polynomial>& r) {
  for (const auto& p : r)
    if (!p.is_zero()) return false;
  return true;
}

}  // namespace detail

// Reduced Groebner basis in position-over-term order (upper-triangular Hermite
// form) of the F_q[X]-module spanned by the rows of `generators` together
// with (X^m - 1) e_j for every j.
inline PolyMatrix reduce_rgb_pot(const PolyMatrix& generators, std::size_t m) {
  const Field& f = generators.field();
  const std::size_t ell = generators.cols();
  if (ell == 0) throw DomainError("code index must be positive");
  if (m == 0) throw DomainError("co-index must be positive");
  if (std::gcd(static_cast<std::uint64_t>(m), f.characteristic()) != 1)
    throw OutOfScope("repeated-root codes (gcd(m, q) > 1) are not supported");
  const Polynomial xm1 = Polynomial::x_pow_minus_one(f, m);

  std::vector<std::vector<Polynomial>> active;
  for (std::size_t i = 0; i < generators.rows(); ++i) {
    auto r = generators.row(i);
    detail::reduce_row(r, 0, m);
    if (!detail::all_zero(r)) active.push_back(std::move(r));
  }

  PolyMatrix g(f, ell, ell);
  for (std::size_t j = 0; j < ell; ++j) {
    std::vector<Polynomial> pivot(ell, Polynomial(f));
    pivot[j] = xm1;
    for (auto& r : active) {
      if (r[j].is_zero()) continue;
      const Polynomial c = r[j];
      const Polynomial pj = pivot[j];
      const auto x = xgcd(pj, c);
      const Polynomial c_d = exact_div(c, x.gcd);
      const Polynomial p_d = exact_div(pj, x.gcd);
      std::vector<Polynomial> np(ell, Polynomial(f)), nr(ell, Polynomial(f));
      for (std::size_t k = j + 1; k < ell; ++k) {
        np[k] = x.u * pivot[k] + x.v * r[k];
        nr[k] = c_d * pivot[k] - p_d * r[k];
      }
      np[j] = x.gcd;
      detail::reduce_row(np, j + 1, m);
      detail::reduce_row(nr, j + 1, m);
      pivot = std::move(np);
      r = std::move(nr);
    }
    std::erase_if(active, [](const auto& r) { return detail::all_zero(r); });
    for (std::size_t k = 0; k < ell; ++k) g(j, k) = pivot[k];
  }

  for (std::size_t i = 1; i < ell; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto [q, rem] = divmod(g(j, i), g(i, i));
      if (q.is_zero()) continue;
      g(j, i) = rem;
      for (std::size_t k = i + 1; k < ell; ++k) g(j, k) = reduce_mod_xm1(g(j, k) - q * g(i, k), m);
    }
  }
  return g;
}

// Checks the four RGB/POT shape conditions: upper triangular, off-diagonal
// degrees below the diagonal degree of their column, monic diagonal entries
// dividing X^m - 1, and rows with diagonal X^m - 1 otherwise zero.
inline bool satisfies_rgb_conditions(const PolyMatrix& g, std::size_t m) {
  if (!g.is_upper_triangular()) return false;
  const Polynomial xm1 = Polynomial::x_pow_minus_one(g.field(), m);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const Polynomial& d = g(i, i);
    if (d.is_zero() || d.lead() != 1 || !divides(d, xm1)) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!(g(j, i).degree() < d.degree())) return false;
    if (d == xm1)
      for (std::size_t k = i + 1; k < g.cols(); ++k)
        if (!g(i, k).is_zero()) return false;
  }
  return true;
}

// c(X) = sum_j c_j(X^l) X^j.
inline Polynomial to_univariate(const QcWord& w, std::size_t ell) {
  if (w.size() != ell || ell == 0) throw DomainError("word length must equal the index");
  const Field& f = w[0].field();
  std::size_t len = 0;
  for (std::size_t j = 0; j < ell; ++j) len = std::max(len, w[j].size() * ell);
  std::vector<Value> c(len, 0);
  for (std::size_t j = 0; j < ell; ++j)
    for (std::size_t i = 0; i < w[j].size(); ++i) c[i * ell + j] = w[j].coeff(i);
  return Polynomial(f, std::move(c));
}

inline QcWord from_univariate(const Polynomial& c, std::size_t ell, std::size_t m) {
  if (c.size() > ell * m) throw DomainError("univariate word longer than l*m");
  const Field& f = c.field();
  QcWord w(ell, Polynomial(f));
  for (std::size_t j = 0; j < ell; ++j) {
    std::vector<Value> v(m, 0);
    for (std::size_t i = 0; i < m; ++i) v[i] = c.coeff(i * ell + j);
    w[j] = Polynomial(f, std::move(v));
  }
  return w;
}

// Scalar vector of length l*m, coefficient i of c_j at position i*l + j.
inline std::vector<Value> flatten(const QcWord& w, std::size_t m) {
  const std::size_t ell = w.size();
  std::vector<Value> out(ell * m, 0);
  for (std::size_t j = 0; j < ell; ++j) {
    if (w[j].size() > m) throw DomainError("component degree not below m");
    for (std::size_t i = 0; i < w[j].size(); ++i) out[i * ell + j] = w[j].coeff(i);
  }
  return out;
}

inline QcWord unflatten(Field f, const std::vector<Value>& v, std::size_t ell, std::size_t m) {
  if (v.size() != ell * m) throw DomainError("vector length must be l*m");
  QcWord w(ell, Polynomial(f));
  for (std::size_t j = 0; j < ell; ++j) {
    std::vector<Value> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = v[i * ell + j];
    w[j] = Polynomial(f, std::move(c));
  }
  return w;
}

class QuasiCyclicCode {
 public:
  // Code spanned by the given generator rows (l columns) and X^m - 1.
  QuasiCyclicCode(const PolyMatrix& generators, std::size_t m)
      : m_(m), g_(reduce_rgb_pot(generators, m)) {}

  // Wrap a matrix that must already be the reduced basis.
  static QuasiCyclicCode from_rgb(const PolyMatrix& g, std::size_t m) {
    if (!satisfies_rgb_conditions(g, m)) throw DomainError("matrix violates the RGB/POT conditions");
    QuasiCyclicCode c(g, m);
    if (!(c.g_ == g)) throw DomainError("matrix is not the reduced basis of its module");
    return c;
  }

  const Field& field() const { return g_.field(); }
  std::size_t index() const { return g_.cols(); }
  std::size_t co_index() const { return m_; }
  std::size_t length() const { return index() * m_; }
  const PolyMatrix& rgb() const { return g_; }

  std::vector<std::size_t> row_dimensions() const {
    std::vector<std::size_t> k(index());
    for (std::size_t j = 0; j < index(); ++j) k[j] = m_ - g_(j, j).degree().value();
    return k;
  }

  std::size_t dimension() const {
    const auto k = row_dimensions();
    return std::accumulate(k.begin(), k.end(), std::size_t{0});
  }

  // Number of leading rows before the trailing run of X^m - 1 diagonals.
  std::size_t level() const {
    std::size_t r = index();
    while (r > 0 && g_(r - 1, r - 1).degree().value() == m_) --r;
    return r;
  }

  // sum_j msg_j * G_j mod X^m - 1, with deg msg_j < k_j.
  QcWord encode(const std::vector<Polynomial>& msg) const {
    if (msg.size() != index()) throw DomainError("message must have one polynomial per row");
    const auto k = row_dimensions();
    QcWord c(index(), Polynomial(field()));
    for (std::size_t j = 0; j < index(); ++j) {
      if (msg[j].is_zero()) continue;
      if (msg[j].size() > k[j]) throw DomainError("message part exceeds row dimension");
      for (std::size_t t = j; t < index(); ++t) c[t] += msg[j] * g_(j, t);
    }
    for (auto& p : c) p = reduce_mod_xm1(p, m_);
    return c;
  }

  bool contains(QcWord w) const {
    if (w.size() != index()) return false;
    for (std::size_t j = 0; j < index(); ++j) {
      if (!(w[j].field() == field())) throw FieldMismatch("word over another field");
      if (w[j].size() > m_) return false;
    }
    for (std::size_t j = 0; j < index(); ++j) {
      if (w[j].is_zero()) continue;
      auto [q, r] = divmod(w[j], g_(j, j));
      if (!r.is_zero()) return false;
      for (std::size_t t = j + 1; t < index(); ++t) w[t] = reduce_mod_xm1(w[t] - q * g_(j, t), m_);
    }
    return true;
  }

  // F_q basis of the code: X^t G_j for t < k_j, flattened.
  std::vector<std::vector<Value>> scalar_basis() const {
    std::vector<std::vector<Value>> out;
    const auto k = row_dimensions();
    for (std::size_t j = 0; j < index(); ++j)
      for (std::size_t t = 0; t < k[j]; ++t) {
        QcWord w(index(), Polynomial(field()));
        for (std::size_t c = j; c < index(); ++c) w[c] = shift_mod_xm1(g_(j, c), static_cast<std::int64_t>(t), m_);
        out.push_back(flatten(w, m_));
      }
    return out;
  }

  friend bool operator==(const QuasiCyclicCode& a, const QuasiCyclicCode& b) {
    return a.m_ == b.m_ && a.g_ == b.g_;
  }

 private:
  std::size_t m_;
  PolyMatrix g_;
};

// Remove a row the caller claims is dependent on the remaining ones; throws if
// the claim is false.
inline PolyMatrix delete_dependent_row(const PolyMatrix& g, std::size_t row, std::size_t m) {
  PolyMatrix rest = apply_row_op(g, DeleteRow{row});
  QuasiCyclicCode c(rest, m);
  QcWord w = g.row(row);
  for (auto& p : w) p = reduce_mod_xm1(p, m);
  if (!c.contains(w)) throw DomainError("deleted row is not dependent on the others");
  return rest;
}

}  // namespace qcpc
