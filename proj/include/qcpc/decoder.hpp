#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcpc/qcc.hpp"
#include "qcpc/spectral.hpp"

namespace qcpc {

// Everything Algorithm-1 style burst decoding of A needs, precomputed once.
struct DecoderSetup {
  QuasiCyclicCode code;
  ColumnCode column;
  BoundCertificate certificate;
  Element alpha;
  EigenVector v;                              // F_q-independent entries
  std::vector<std::size_t> support;           // W, support of the column word b
  std::size_t locator_j = 0;                  // min W
  std::vector<Element> locators;              // gamma_i, i in [m_A)
  std::vector<Element> b_values;              // b(beta^{f2 + i z2}), i in [delta-1)
  std::vector<std::vector<Element>> powers;   // alpha^{(f1 + i z1) p}
  std::size_t tau = 0;

  std::size_t ell() const { return code.index(); }
  std::size_t m_a() const { return code.co_index(); }
  std::size_t syndrome_length() const { return certificate.delta - 1; }
};

// True when the entries of v are linearly independent over the prime field.
inline bool independent_entries(const EigenVector& v) {
  if (v.empty()) return false;
  return eigencode({v}, v.size(), Field::prime(v[0].field().characteristic())).basis.empty();
}

namespace detail {

// A vector of the space with F_q-independent entries: basis vectors first,
// then seeded random combinations.
inline std::optional<EigenVector> pick_independent(const std::vector<EigenVector>& space) {
  for (const auto& v : space)
    if (independent_entries(v)) return v;
  if (space.size() < 2) return std::nullopt;
  const Field f = space[0][0].field();
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<Value> pick(0, f.size() - 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    EigenVector v(space[0].size(), f.zero());
    for (const auto& b : space) {
      const Element c(f, pick(rng));
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * b[j];
    }
    if (independent_entries(v)) return v;
  }
  return std::nullopt;
}

}  // namespace detail

inline DecoderSetup make_decoder_setup(const QuasiCyclicCode& a, const ColumnCode& b, const BoundCertificate& cert,
                                       const Element& alpha) {
  if (!(alpha.field() == b.beta.field())) throw FieldMismatch("alpha and beta in different fields");
  if (!alpha.pow(static_cast<std::int64_t>(a.co_index())).is_one()) throw DomainError("alpha^m_A != 1");
  if (cert.kind != BoundKind::generalized) throw DomainError("decoder needs an embedding certificate");
  auto v = detail::pick_independent(cert.eigenspace);
  if (!v) throw NoCertificate("no eigenvector with F_q-independent entries in the common eigenspace");

  DecoderSetup s{a, b, cert, alpha, *v, {}, 0, {}, {}, {}, 0};
  for (std::size_t w = 0; w < b.min_weight_word.size(); ++w)
    if (b.min_weight_word.coeff(w)) s.support.push_back(w);
  s.locator_j = s.support.front();
  const Element& beta = b.beta;
  const auto jz2 = static_cast<std::int64_t>(s.locator_j * cert.z2);
  for (std::size_t i = 0; i < a.co_index(); ++i)
    s.locators.push_back(beta.pow(-jz2) * alpha.pow(-static_cast<std::int64_t>(i * cert.z1)));
  const Polynomial bw = lift(b.min_weight_word, alpha.field());
  for (std::size_t i = 0; i + 1 < cert.delta; ++i) {
    s.b_values.push_back(evaluate(bw, beta.pow(static_cast<std::int64_t>(cert.f2 + i * cert.z2))));
    const Element x = alpha.pow(static_cast<std::int64_t>(cert.f1 + i * cert.z1));
    std::vector<Element> row;
    Element acc = alpha.field().one();
    for (std::size_t p = 0; p < a.co_index(); ++p, acc *= x) row.push_back(acc);
    s.powers.push_back(std::move(row));
  }
  s.tau = cert.bound >= 1 ? (cert.bound - 1) / 2 : 0;
  return s;
}

// S_i = sum_j r_j(alpha^{f1 + i z1}) b(beta^{f2 + i z2}) v_j, i in [delta-1).
inline Polynomial syndrome(const DecoderSetup& s, const QcWord& r) {
  if (r.size() != s.ell()) throw DomainError("received word has the wrong index");
  const Field& ext = s.alpha.field();
  std::vector<Element> w(s.m_a(), ext.zero());
  for (std::size_t j = 0; j < s.ell(); ++j) {
    if (r[j].size() > s.m_a()) throw DomainError("received component degree too large");
    for (std::size_t p = 0; p < r[j].size(); ++p) {
      const Value c = r[j].coeff(p);
      if (c) w[p] += Element(ext, c) * s.v[j];
    }
  }
  std::vector<Value> out(s.syndrome_length(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (s.b_values[i].is_zero()) continue;
    Element acc = ext.zero();
    for (std::size_t p = 0; p < s.m_a(); ++p)
      if (!w[p].is_zero()) acc += w[p] * s.powers[i][p];
    out[i] = (acc * s.b_values[i]).value();
  }
  return Polynomial(ext, std::move(out));
}

struct KeyEquation {
  Polynomial locator;    // Lambda, Lambda(0) = 1
  Polynomial evaluator;  // Omega
};

// EEA on (X^{delta-1}, S) stopped at the first remainder of degree below
// (delta-1)/2. Returns nothing when the locator has Lambda(0) = 0.
inline std::optional<KeyEquation> solve_key_equation(const Polynomial& syn, std::size_t delta) {
  const Field& f = syn.field();
  if (delta < 2) throw DomainError("delta must be at least 2");
  const std::size_t len = delta - 1;
  if (syn.size() > len) throw DomainError("syndrome degree must be below delta - 1");
  if (syn.is_zero()) return KeyEquation{Polynomial::constant(f, 1), Polynomial(f)};
  Polynomial r0 = Polynomial::monomial(f, len), r1 = syn;
  Polynomial t0(f), t1 = Polynomial::constant(f, 1);
  while (!r1.is_zero() && 2 * r1.degree().value() >= len) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1.coeff(0) == 0) return std::nullopt;
  const Value inv = f.inv(t1.coeff(0));
  return KeyEquation{t1.scaled(inv), r1.scaled(inv)};
}

// Positions i with Lambda(gamma_i) = 0.
inline std::vector<std::size_t> find_positions(const DecoderSetup& s, const Polynomial& locator) {
  std::vector<std::size_t> e;
  for (std::size_t i = 0; i < s.locators.size(); ++i)
    if (evaluate(locator, s.locators[i]).is_zero()) e.push_back(i);
  return e;
}

// Error columns (one F_q value per component) at each position of E, from
// the (delta-1) s scalar equations of the syndrome. Nothing if the system is
// inconsistent, not uniquely solvable, or yields an all-zero column.
inline std::optional<std::vector<std::vector<Value>>> evaluate_errors(const DecoderSetup& s, const Polynomial& syn,
                                                                    const std::vector<std::size_t>& e) {
  const Field base = s.code.field();
  const Field& ext = s.alpha.field();
  const std::size_t ell = s.ell(), sdeg = ext.degree();
  if (e.empty()) {
    if (!syn.is_zero()) return std::nullopt;
    return std::vector<std::vector<Value>>{};
  }
  const std::size_t unknowns = e.size() * ell;
  Matrix a(base, s.syndrome_length() * sdeg, unknowns);
  std::vector<Value> rhs(a.rows(), 0);
  for (std::size_t i = 0; i < s.syndrome_length(); ++i) {
    const auto sd = ext.digits(syn.coeff(i));
    for (std::size_t t = 0; t < sdeg; ++t) rhs[i * sdeg + t] = sd[t];
    for (std::size_t k = 0; k < e.size(); ++k)
      for (std::size_t j = 0; j < ell; ++j) {
        const auto d = (s.b_values[i] * s.powers[i][e[k]] * s.v[j]).digits();
        for (std::size_t t = 0; t < sdeg; ++t) a(i * sdeg + t, k * ell + j) = d[t];
      }
  }
  const auto sol = solve(a, rhs);
  if (sol.status != Solution::Status::unique) return std::nullopt;
  std::vector<std::vector<Value>> cols(e.size(), std::vector<Value>(ell, 0));
  for (std::size_t k = 0; k < e.size(); ++k) {
    bool nonzero = false;
    for (std::size_t j = 0; j < ell; ++j) {
      cols[k][j] = sol.x[k * ell + j];
      nonzero |= cols[k][j] != 0;
    }
    if (!nonzero) return std::nullopt;
  }
  return cols;
}

struct DecodeResult {
  bool success = false;
  std::string reason;  // set on failure
  std::vector<std::size_t> positions;
  std::vector<std::vector<Value>> columns;
  QcWord corrected;
  Polynomial locator;
};

inline DecodeResult decode(const DecoderSetup& s, const QcWord& r) {
  DecodeResult out;
  auto fail = [&](std::string why) {
    out.success = false;
    out.reason = std::move(why);
    out.corrected.clear();
    return out;
  };
  const Polynomial syn = syndrome(s, r);
  const auto key = solve_key_equation(syn, s.certificate.delta);
  if (!key) return fail("locator has a zero constant term");
  out.locator = key->locator;
  out.positions = find_positions(s, key->locator);
  if (out.positions.size() * s.column.distance != key->locator.degree().value())
    return fail("number of located bursts does not match the locator degree");
  auto cols = evaluate_errors(s, syn, out.positions);
  if (!cols) return fail("error values are not uniquely determined");
  out.columns = *cols;
  out.corrected = r;
  const Field& f = s.code.field();
  for (std::size_t k = 0; k < out.positions.size(); ++k)
    for (std::size_t j = 0; j < s.ell(); ++j) {
      const std::size_t p = out.positions[k];
      out.corrected[j].set_coeff(p, f.sub(out.corrected[j].coeff(p), out.columns[k][j]));
    }
  if (!s.code.contains(out.corrected)) return fail("corrected word is not a codeword");
  out.success = true;
  return out;
}

}  // namespace qcpc
