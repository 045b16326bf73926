#pragma once

#include <cstdint>
#include <limits>
#include <mutex>
#include <vector>

#include "qcpc/parallel.hpp"
#include "qcpc/qcc.hpp"

namespace qcpc {

// Enumeration limit: at most 2^max_dimension codewords.
struct OracleBudget {
  std::size_t max_dimension = 20;
};

// q^k, or throws BudgetExceeded when it is above the budget.
inline std::uint64_t enumeration_size(std::uint64_t q, std::size_t k, const OracleBudget& budget) {
  const std::uint64_t cap = budget.max_dimension >= 63 ? std::numeric_limits<std::uint64_t>::max()
                                                       : (std::uint64_t{1} << budget.max_dimension);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > cap / q) throw BudgetExceeded("enumeration of q^k codewords exceeds the budget");
    total *= q;
  }
  return total;
}

struct MinWeightResult {
  std::size_t weight = 0;
  std::vector<Value> word;
};

// Minimum-weight nonzero vector in the F_p-span of `basis` (rows assumed
// linearly independent). Messages are walked in modular Gray-code order so
// each step adds one basis row; ties resolve to the smallest message index.
inline MinWeightResult min_weight_word(Field base, const std::vector<std::vector<Value>>& basis, std::size_t n,
                                       const OracleBudget& budget = {}, unsigned threads = 1) {
  if (!base.is_prime_field()) throw DomainError("enumeration needs a prime field");
  const std::size_t k = basis.size();
  if (k == 0) throw DomainError("minimum distance of the zero code is undefined");
  const std::uint64_t q = base.characteristic();
  const std::uint64_t total = enumeration_size(q, k, budget);

  auto gray = [&](std::uint64_t x) {
    std::vector<std::uint64_t> d(k + 1, 0), g(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = x % q;
      x /= q;
    }
    for (std::size_t i = 0; i < k; ++i) g[i] = (d[i] + q - d[i + 1]) % q;
    return g;
  };
  auto word_of = [&](std::uint64_t x) {
    const auto g = gray(x);
    std::vector<Value> w(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::uint64_t t = 0; t < g[i]; ++t)
        for (std::size_t j = 0; j < n; ++j) w[j] = base.add(w[j], basis[i][j]);
    return w;
  };

  std::mutex mu;
  std::size_t best_w = std::numeric_limits<std::size_t>::max();
  std::uint64_t best_x = 0;
  parallel_chunks(static_cast<std::size_t>(total - 1), threads, [&](std::size_t lo, std::size_t hi) {
    std::uint64_t x = lo + 1;
    std::vector<Value> w = word_of(x);
    std::size_t weight = 0;
    for (auto v : w) weight += v != 0;
    std::size_t lw = weight;
    std::uint64_t lx = x;
    for (++x; x <= hi; ++x) {
      std::uint64_t t = x, pos = 0;
      while (t % q == 0) {
        t /= q;
        ++pos;
      }
      const auto& row = basis[pos];
      for (std::size_t j = 0; j < n; ++j) {
        if (!row[j]) continue;
        const Value before = w[j];
        w[j] = base.add(w[j], row[j]);
        weight += (w[j] != 0) - (before != 0);
      }
      if (weight < lw) {
        lw = weight;
        lx = x;
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    if (lw < best_w || (lw == best_w && lx < best_x)) {
      best_w = lw;
      best_x = lx;
    }
  });
  return {best_w, word_of(best_x)};
}

inline std::size_t brute_min_distance(const QuasiCyclicCode& code, const OracleBudget& budget = {},
                                      unsigned threads = 1) {
  if (code.dimension() == 0) throw DomainError("minimum distance of the zero code is undefined");
  return min_weight_word(code.field(), code.scalar_basis(), code.length(), budget, threads).weight;
}

}  // namespace qcpc
