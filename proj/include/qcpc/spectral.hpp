#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "qcpc/enumerate.hpp"
#include "qcpc/galois.hpp"
#include "qcpc/linalg.hpp"
#include "qcpc/parallel.hpp"
#include "qcpc/poly_matrix.hpp"

namespace qcpc {

// Minimum distance extended by +infinity (the distance of the zero code).
class ExtendedDistance {
 public:
  static ExtendedDistance infinite() { return ExtendedDistance(); }
  explicit ExtendedDistance(std::size_t d) : d_(d) {}

  bool is_infinite() const { return !d_.has_value(); }
  std::size_t value() const {
    if (!d_) throw DomainError("infinite distance has no finite value");
    return *d_;
  }
  std::size_t min_with(std::size_t x) const { return d_ ? std::min(*d_, x) : x; }

  friend bool operator==(const ExtendedDistance&, const ExtendedDistance&) = default;

 private:
  ExtendedDistance() = default;
  std::optional<std::size_t> d_;
};

using EigenVector = std::vector<Element>;

struct EigenRecord {
  std::size_t exponent = 0;
  std::size_t algebraic = 0;
  std::size_t geometric = 0;
  std::vector<EigenVector> basis;  // right kernel of G(alpha^z)
  Matrix evaluated;                // G(alpha^z)
};

struct SpectralReport {
  Element root;
  std::size_t m = 0;
  std::size_t ell = 0;
  std::vector<EigenRecord> records;  // indexed by exponent

  const EigenRecord& at(std::size_t z) const { return records.at(z % m); }

  // Exponents whose multiplicity equals r.
  std::vector<std::size_t> exponents_with(std::size_t r) const {
    std::vector<std::size_t> out;
    for (const auto& rec : records)
      if (rec.algebraic == r) out.push_back(rec.exponent);
    return out;
  }

  std::size_t total_multiplicity() const {
    std::size_t t = 0;
    for (const auto& rec : records) t += rec.algebraic;
    return t;
  }
};

inline Matrix evaluate_matrix(const PolyMatrix& g, const Element& x) {
  Matrix out(x.field(), g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = evaluate(g(i, j), x).value();
  return out;
}

namespace detail {
inline std::vector<EigenVector> to_elements(Field f, const std::vector<std::vector<Value>>& vs) {
  std::vector<EigenVector> out;
  for (const auto& v : vs) {
    EigenVector e;
    for (auto x : v) e.emplace_back(f, x);
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<std::vector<Value>> to_values(const std::vector<EigenVector>& vs) {
  std::vector<std::vector<Value>> out;
  for (const auto& v : vs) {
    std::vector<Value> r;
    for (const auto& x : v) r.push_back(x.value());
    out.push_back(std::move(r));
  }
  return out;
}
}  // namespace detail

// Eigenvalues alpha^z, z in [m), of an upper-triangular G with their
// multiplicities and right-kernel eigenspaces.
inline SpectralReport analyze(const PolyMatrix& g, const Element& alpha, std::size_t m, unsigned threads = 1) {
  if (!g.is_upper_triangular()) throw DomainError("spectral analysis needs a square upper-triangular matrix");
  if (!alpha.pow(static_cast<std::int64_t>(m)).is_one()) throw DomainError("alpha^m != 1");
  SpectralReport rep{alpha, m, g.rows(), std::vector<EigenRecord>(m)};
  parallel_for(m, threads, [&](std::size_t z) {
    const Element x = alpha.pow(static_cast<std::int64_t>(z));
    EigenRecord& rec = rep.records[z];
    rec.exponent = z;
    rec.evaluated = evaluate_matrix(g, x);
    for (std::size_t i = 0; i < g.rows(); ++i) rec.algebraic += rec.evaluated(i, i) == 0;
    rec.basis = detail::to_elements(x.field(), kernel_basis(rec.evaluated));
    rec.geometric = rec.basis.size();
  });
  return rep;
}

struct Eigencode {
  std::size_t ell = 0;
  std::vector<std::vector<Value>> basis;  // over the prime field
  ExtendedDistance distance = ExtendedDistance::infinite();
};

// Words c over F_q with sum_j v_j c_j = 0 for every v in the eigenspace basis.
inline Eigencode eigencode(const std::vector<EigenVector>& space, std::size_t ell, Field base) {
  if (!base.is_prime_field()) throw DomainError("eigencodes are defined over a prime field");
  Matrix cons(base, 0, ell);
  for (const auto& v : space) {
    if (v.size() != ell) throw DomainError("eigenvector length mismatch");
    const std::uint32_t s = v[0].field().degree();
    std::vector<std::vector<std::uint64_t>> d;
    for (const auto& x : v) {
      if (x.field().characteristic() != base.characteristic()) throw FieldMismatch("eigenvector in foreign field");
      d.push_back(x.digits());
    }
    for (std::uint32_t t = 0; t < s; ++t) {
      std::vector<Value> row(ell);
      for (std::size_t j = 0; j < ell; ++j) row[j] = d[j][t];
      cons.append_row(row);
    }
  }
  Eigencode ec;
  ec.ell = ell;
  ec.basis = kernel_basis(cons);
  if (ec.basis.empty()) return ec;
  ec.distance = ExtendedDistance(min_weight_word(base, ec.basis, ell).weight);
  return ec;
}

// Common eigenspace of the given exponents: kernel of the stacked G(alpha^j).
inline std::vector<EigenVector> common_eigenspace(const SpectralReport& rep, const std::vector<std::size_t>& exps) {
  const Field f = rep.root.field();
  Matrix stacked(f, 0, rep.ell);
  for (auto z : exps) {
    const Matrix& e = rep.at(z).evaluated;
    for (std::size_t i = 0; i < e.rows(); ++i) stacked.append_row(e.row(i));
  }
  return detail::to_elements(f, kernel_basis(stacked));
}

// Exponent sets of A (x) B by multiplicity r in [0, l_A], from A's report and
// the defining set of the cyclic code B.
inline std::vector<std::set<std::size_t>> product_eigen_sets(const SpectralReport& a,
                                                            const std::vector<std::size_t>& b_defining,
                                                            std::size_t m_a, std::size_t m_b) {
  if (std::gcd(m_a, m_b) != 1) throw DomainError("co-indices must be coprime");
  if (a.m != m_a) throw DomainError("report co-index mismatch");
  const std::size_t m = m_a * m_b;
  std::vector<bool> in_b(m_b, false);
  for (auto z : b_defining) in_b.at(z % m_b) = true;
  std::vector<std::set<std::size_t>> out(a.ell + 1);
  for (std::size_t z = 0; z < m; ++z) {
    if (in_b[z % m_b])
      out[a.ell].insert(z);
    else
      out[a.at(z % m_a).algebraic].insert(z);
  }
  return out;
}

// Cyclic code B together with what the embedding bound needs from it.
struct ColumnCode {
  QuasiCyclicCode code;
  Element beta;
  std::vector<std::size_t> defining_set;
  std::size_t distance = 0;
  Polynomial min_weight_word;
};

inline ColumnCode make_column_code(const QuasiCyclicCode& b, const Element& beta, const OracleBudget& budget = {}) {
  if (b.index() != 1) throw DomainError("column code must be cyclic");
  const std::size_t m = b.co_index();
  const auto roots = root_exponents(b.rgb()(0, 0), beta, m);
  const auto mw = min_weight_word(b.field(), b.scalar_basis(), m, budget);
  return {b, beta, {roots.begin(), roots.end()}, mw.weight, Polynomial(b.field(), mw.word)};
}

enum class BoundKind { st, generalized };

struct BoundCertificate {
  BoundKind kind = BoundKind::st;
  std::size_t f1 = 0, f2 = 0, z1 = 1, z2 = 1, delta = 2;
  std::vector<std::size_t> indices;  // i in [delta-1) whose A-exponent is constrained
  std::vector<std::size_t> D;        // distinct constrained exponents mod m_A, sorted
  std::vector<EigenVector> eigenspace;
  ExtendedDistance d_ec = ExtendedDistance::infinite();
  std::size_t d_b = 1;
  std::size_t bound = 0;
};

namespace detail {

inline bool admissible_step(std::size_t z, std::size_t m) { return z >= 1 && std::gcd(z, m) == 1; }

inline std::vector<std::size_t> admissible_steps(std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t z = 1; z < std::max<std::size_t>(m, 2); ++z)
    if (admissible_step(z, m)) out.push_back(z);
  return out;
}

inline std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline void finish_certificate(BoundCertificate& c, const SpectralReport& rep, Field base) {
  c.D = sorted_unique([&] {
    std::vector<std::size_t> e;
    for (auto i : c.indices) e.push_back((c.f1 + i * c.z1) % rep.m);
    return e;
  }());
  c.eigenspace = common_eigenspace(rep, c.D);
  if (c.eigenspace.empty()) throw NoCertificate("the eigenspaces have trivial intersection");
  c.d_ec = eigencode(c.eigenspace, rep.ell, base).distance;
  c.bound = (c.d_ec.min_with(c.delta) + c.d_b - 1) / c.d_b;
}

}  // namespace detail

// Bound min(delta, d_ec) from eigenvalues alpha^{f + i z}, i in [delta-1).
inline BoundCertificate st_bound(const SpectralReport& rep, std::size_t f, std::size_t z, std::size_t delta,
                                 Field base) {
  if (delta < 2) throw DomainError("delta must be at least 2");
  if (!detail::admissible_step(z, rep.m)) throw DomainError("gcd(z, m) must be 1");
  BoundCertificate c;
  c.kind = BoundKind::st;
  c.f1 = f % rep.m;
  c.z1 = z;
  c.f2 = 0;
  c.z2 = 0;
  c.delta = delta;
  for (std::size_t i = 0; i + 1 < delta; ++i) {
    if (rep.at(c.f1 + i * z).geometric == 0) throw NoCertificate("exponent in the sequence is not an eigenvalue");
    c.indices.push_back(i);
  }
  detail::finish_certificate(c, rep, base);
  return c;
}

// Bound ceil(min(delta, d_ec) / d_B) obtained by embedding A into A (x) B.
inline BoundCertificate generalized_bound(const SpectralReport& rep, const ColumnCode& b, std::size_t f1,
                                          std::size_t f2, std::size_t z1, std::size_t z2, std::size_t delta) {
  const std::size_t m_b = b.code.co_index();
  if (delta < 2) throw DomainError("delta must be at least 2");
  if (!detail::admissible_step(z1, rep.m) || !detail::admissible_step(z2, m_b))
    throw DomainError("steps must be coprime to the co-indices");
  std::vector<bool> in_b(m_b, false);
  for (auto z : b.defining_set) in_b[z] = true;
  BoundCertificate c;
  c.kind = BoundKind::generalized;
  c.f1 = f1 % rep.m;
  c.f2 = f2 % m_b;
  c.z1 = z1;
  c.z2 = z2;
  c.delta = delta;
  c.d_b = b.distance;
  for (std::size_t i = 0; i + 1 < delta; ++i) {
    if (in_b[(c.f2 + i * z2) % m_b]) continue;
    if (rep.at(c.f1 + i * z1).geometric == 0)
      throw NoCertificate("index is neither a zero of B nor an eigenvalue of A");
    c.indices.push_back(i);
  }
  detail::finish_certificate(c, rep, Field::prime(rep.root.field().characteristic()));
  return c;
}

namespace detail {

// Order: larger bound, then larger min(delta, d_ec), then smaller
// (delta, f1, f2, z1, z2).
inline bool better(const BoundCertificate& x, const BoundCertificate& y) {
  const std::size_t rx = x.d_ec.min_with(x.delta), ry = y.d_ec.min_with(y.delta);
  if (x.bound != y.bound) return x.bound > y.bound;
  if (rx != ry) return rx > ry;
  return std::tie(x.delta, x.f1, x.f2, x.z1, x.z2) < std::tie(y.delta, y.f1, y.f2, y.z1, y.z2);
}

// Grows delta for one parameter tuple; `constrained(i)` is false when index i
// needs no eigenvalue (B vanishes there).
template <class Make, class Constrained>
std::optional<BoundCertificate> best_for_tuple(const SpectralReport& rep, std::size_t f1, std::size_t z1,
                                               std::size_t delta_max, Constrained constrained, Make make) {
  std::optional<BoundCertificate> best;
  std::vector<std::size_t> exps;
  std::size_t last_size = 0;
  std::optional<BoundCertificate> cached;
  for (std::size_t delta = 2; delta <= delta_max; ++delta) {
    const std::size_t i = delta - 2;
    if (constrained(i)) {
      const std::size_t e = (f1 + i * z1) % rep.m;
      if (rep.at(e).geometric == 0) break;
      exps.push_back(e);
    }
    if (delta < 3) continue;
    BoundCertificate c;
    const auto D = sorted_unique(exps);
    if (cached && D.size() == last_size) {
      c = *cached;
      c.delta = delta;
      c.bound = (c.d_ec.min_with(delta) + c.d_b - 1) / c.d_b;
      c.indices.clear();
      for (std::size_t t = 0; t + 1 < delta; ++t)
        if (constrained(t)) c.indices.push_back(t);
    } else {
      try {
        c = make(delta);
      } catch (const NoCertificate&) {
        break;
      }
      cached = c;
      last_size = D.size();
    }
    if (!best || better(c, *best)) best = c;
  }
  return best;
}

}  // namespace detail

// Best Semenov-Trifonov style certificate over all (f, z, delta <= delta_max).
inline std::optional<BoundCertificate> search_st_params(const SpectralReport& rep, std::size_t delta_max,
                                                        unsigned threads = 1) {
  if (delta_max < 3) throw DomainError("delta_max must be at least 3");
  const Field base = Field::prime(rep.root.field().characteristic());
  const auto zs = detail::admissible_steps(rep.m);
  std::vector<std::optional<BoundCertificate>> per_f(rep.m);
  parallel_for(rep.m, threads, [&](std::size_t f) {
    for (auto z : zs) {
      auto c = detail::best_for_tuple(
          rep, f, z, delta_max, [](std::size_t) { return true; },
          [&](std::size_t d) { return st_bound(rep, f, z, d, base); });
      if (c && (!per_f[f] || detail::better(*c, *per_f[f]))) per_f[f] = c;
    }
  });
  std::optional<BoundCertificate> best;
  for (auto& c : per_f)
    if (c && (!best || detail::better(*c, *best))) best = c;
  return best;
}

// Best embedding certificate over all (f1, f2, z1, z2, delta <= delta_max).
inline std::optional<BoundCertificate> search_bound_params(const SpectralReport& rep, const ColumnCode& b,
                                                           std::size_t delta_max, unsigned threads = 1) {
  if (delta_max < 3) throw DomainError("delta_max must be at least 3");
  const std::size_t m_b = b.code.co_index();
  std::vector<bool> in_b(m_b, false);
  for (auto z : b.defining_set) in_b[z] = true;
  const auto z1s = detail::admissible_steps(rep.m);
  const auto z2s = detail::admissible_steps(m_b);
  std::vector<std::optional<BoundCertificate>> per_f(rep.m);
  parallel_for(rep.m, threads, [&](std::size_t f1) {
    for (std::size_t f2 = 0; f2 < m_b; ++f2)
      for (auto z1 : z1s)
        for (auto z2 : z2s) {
          auto c = detail::best_for_tuple(
              rep, f1, z1, delta_max, [&](std::size_t i) { return !in_b[(f2 + i * z2) % m_b]; },
              [&](std::size_t d) { return generalized_bound(rep, b, f1, f2, z1, z2, d); });
          if (c && (!per_f[f1] || detail::better(*c, *per_f[f1]))) per_f[f1] = c;
        }
  });
  std::optional<BoundCertificate> best;
  for (auto& c : per_f)
    if (c && (!best || detail::better(*c, *best))) best = c;
  return best;
}

}  // namespace qcpc
