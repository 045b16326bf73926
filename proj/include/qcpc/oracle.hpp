#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <random>
#include <vector>

#include "qcpc/decoder.hpp"
#include "qcpc/enumerate.hpp"
#include "qcpc/product.hpp"

namespace qcpc {

// Whether the rows of u1 and u2 (each with (X^m - 1) I adjoined) generate the
// same module, checked by membership of every row in the other code.
inline bool module_equal(const PolyMatrix& u1, const PolyMatrix& u2, std::size_t m) {
  if (!(u1.field() == u2.field()) || u1.cols() != u2.cols()) return false;
  const QuasiCyclicCode c1(u1, m), c2(u2, m);
  auto rows_in = [m](const PolyMatrix& u, const QuasiCyclicCode& c) {
    for (std::size_t i = 0; i < u.rows(); ++i) {
      QcWord w = u.row(i);
      for (auto& p : w) p = reduce_mod_xm1(p, m);
      if (!c.contains(w)) return false;
    }
    return true;
  };
  return rows_in(u1, c2) && rows_in(u2, c1);
}

// Kronecker cross-check: the product code's scalar row space equals the span
// of all arrays a (x) b over scalar bases of A and B, serialized by the
// product index maps.
inline bool kronecker_row_space_equal(const ProductSpec& s, const QuasiCyclicCode& a, const QuasiCyclicCode& b,
                                      const QuasiCyclicCode& product) {
  const Field f = a.field();
  const auto ba = a.scalar_basis();
  const auto bb = b.scalar_basis();
  std::vector<std::vector<Value>> kron;
  for (const auto& rb : bb)
    for (const auto& ra : ba) {
      Matrix arr(f, s.n_b(), s.n_a());
      for (std::size_t i = 0; i < s.n_b(); ++i)
        for (std::size_t j = 0; j < s.n_a(); ++j) arr(i, j) = f.mul(rb[i], ra[j]);
      kron.push_back(flatten(matrix_to_polys(s, arr), s.m()));
    }
  return same_span(f, s.n(), kron, product.scalar_basis());
}

struct SweepFailure {
  std::vector<std::size_t> positions;
  std::vector<std::vector<Value>> columns;
  std::string reason;
};

struct SweepReport {
  bool exhaustive = true;
  std::size_t attempted = 0;
  std::size_t succeeded = 0;
  std::vector<SweepFailure> failures;  // first failures, in pattern order
  double ratio() const { return attempted ? static_cast<double>(succeeded) / static_cast<double>(attempted) : 1.0; }
};

namespace detail {

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(t);
  for (std::size_t i = 0; i < t; ++i) c[i] = i;
  if (t > n) return out;
  while (true) {
    out.push_back(c);
    std::size_t i = t;
    while (i > 0 && c[i - 1] == n - t + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < t; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

inline std::vector<QcWord> codeword_pool(const QuasiCyclicCode& code, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  const Field f = code.field();
  std::uniform_int_distribution<Value> sym(0, f.size() - 1);
  const auto k = code.row_dimensions();
  std::vector<QcWord> pool;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Polynomial> msg;
    for (auto kj : k) {
      std::vector<Value> v(kj);
      for (auto& x : v) x = sym(rng);
      msg.emplace_back(f, std::move(v));
    }
    pool.push_back(code.encode(msg));
  }
  return pool;
}

// Column pattern number `idx` in [ (q^l - 1)^t ): digit per position, each a
// nonzero column written in base q.
inline std::vector<std::vector<Value>> column_pattern(std::uint64_t idx, std::size_t t, std::size_t ell,
                                                      std::uint64_t q) {
  std::uint64_t ncol = 1;
  for (std::size_t j = 0; j < ell; ++j) ncol *= q;
  --ncol;
  std::vector<std::vector<Value>> cols(t, std::vector<Value>(ell));
  for (std::size_t k = 0; k < t; ++k) {
    std::uint64_t c = idx % ncol + 1;
    idx /= ncol;
    for (std::size_t j = 0; j < ell; ++j) {
      cols[k][j] = c % q;
      c /= q;
    }
  }
  return cols;
}

}  // namespace detail

// Decodes every l-phased burst pattern with at most tau bursts (all position
// sets, all nonzero columns) added to pooled random codewords. Above
// `max_patterns` it samples each burst count with a fixed seed instead and
// marks the report non-exhaustive.
inline SweepReport exhaustive_burst_sweep(const DecoderSetup& s, std::size_t tau, std::uint64_t seed = 1,
                                          unsigned threads = 1, std::uint64_t max_patterns = 1000000,
                                          std::size_t max_failures = 16) {
  const Field f = s.code.field();
  const std::uint64_t q = f.size();
  const std::size_t ell = s.ell(), m = s.m_a();
  std::uint64_t ncol = 1;
  for (std::size_t j = 0; j < ell; ++j) ncol *= q;
  --ncol;

  std::vector<std::uint64_t> per_t(tau + 1, 0);
  std::uint64_t total = 0;
  bool exhaustive = true;
  for (std::size_t t = 0; t <= tau && exhaustive; ++t) {
    long double cnt = 1;
    for (std::size_t i = 0; i < t; ++i) cnt = cnt * static_cast<long double>(m - i) / static_cast<long double>(i + 1);
    for (std::size_t i = 0; i < t; ++i) cnt *= static_cast<long double>(ncol);
    if (t > m || cnt + static_cast<long double>(total) > static_cast<long double>(max_patterns)) exhaustive = false;
    per_t[t] = t > m ? 0 : static_cast<std::uint64_t>(cnt + 0.5L);
    total += per_t[t];
  }

  struct Task {
    std::vector<std::size_t> positions;
    std::vector<std::vector<Value>> cols;
  };
  std::vector<Task> tasks;
  if (exhaustive) {
    for (std::size_t t = 0; t <= tau; ++t) {
      std::uint64_t npat = 1;
      for (std::size_t i = 0; i < t; ++i) npat *= ncol;
      for (const auto& comb : detail::combinations(m, t))
        for (std::uint64_t idx = 0; idx < npat; ++idx) tasks.push_back({comb, detail::column_pattern(idx, t, ell, q)});
    }
  } else {
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    const std::uint64_t per = max_patterns / (tau + 1);
    for (std::size_t t = 0; t <= std::min(tau, m); ++t)
      for (std::uint64_t n = 0; n < per; ++n) {
        std::vector<std::size_t> all(m);
        for (std::size_t i = 0; i < m; ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<std::size_t> comb(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(t));
        std::sort(comb.begin(), comb.end());
        std::uniform_int_distribution<std::uint64_t> col(0, ncol - 1);
        std::vector<std::vector<Value>> cols;
        for (std::size_t k = 0; k < t; ++k) cols.push_back(detail::column_pattern(col(rng), 1, ell, q)[0]);
        tasks.push_back({std::move(comb), std::move(cols)});
      }
  }

  const auto pool = detail::codeword_pool(s.code, seed, 16);
  std::vector<char> ok(tasks.size(), 0);
  std::vector<std::string> why(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t n) {
    const auto& task = tasks[n];
    const QcWord& c = pool[n % pool.size()];
    QcWord r = c;
    for (std::size_t k = 0; k < task.positions.size(); ++k)
      for (std::size_t j = 0; j < ell; ++j) {
        const std::size_t p = task.positions[k];
        r[j].set_coeff(p, f.add(r[j].coeff(p), task.cols[k][j]));
      }
    const auto res = decode(s, r);
    ok[n] = res.success && res.corrected == c;
    if (!ok[n]) why[n] = res.success ? "decoded to a different codeword" : res.reason;
  });

  SweepReport rep;
  rep.exhaustive = exhaustive;
  rep.attempted = tasks.size();
  for (std::size_t n = 0; n < tasks.size(); ++n) {
    if (ok[n]) {
      ++rep.succeeded;
    } else if (rep.failures.size() < max_failures) {
      rep.failures.push_back({tasks[n].positions, tasks[n].cols, why[n]});
    }
  }
  return rep;
}

}  // namespace qcpc
