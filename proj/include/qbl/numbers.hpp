#pragma once

#include <mutex>
#include <vector>

#include "qbl/rational.hpp"

namespace qbl {

namespace detail {
inline std::mutex& numbers_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

// Bernoulli numbers with B_1 = -1/2, computed from
// sum_{j=0}^{n} binom(n+1, j) B_j = 0 for n >= 1. Memoized.
inline Rational bernoulli(long k) {
  if (k < 0) throw std::invalid_argument("bernoulli index must be >= 0");
  std::lock_guard<std::mutex> lock(detail::numbers_mutex());
  static std::vector<Rational> table{Rational(1)};
  while (static_cast<long>(table.size()) <= k) {
    long n = static_cast<long>(table.size());
    Rational s = 0;
    for (long j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * table[j];
    table.push_back(-s / Rational(binomial(n + 1, n)));
  }
  return table[k];
}

// Stirling numbers of the second kind: set partitions of [n] into j blocks.
inline Integer stirling2(long n, long j) {
  if (n < 0 || j < 0) return 0;
  if (n == 0) return j == 0 ? 1 : 0;
  if (j == 0 || j > n) return 0;
  std::lock_guard<std::mutex> lock(detail::numbers_mutex());
  static std::vector<std::vector<Integer>> table{{Integer(1)}};  // row n: S(n, 0..n)
  while (static_cast<long>(table.size()) <= n) {
    long m = static_cast<long>(table.size());
    std::vector<Integer> row(m + 1);
    row[0] = 0;
    for (long i = 1; i <= m; ++i) {
      Integer above = (i <= m - 1) ? table[m - 1][i] : Integer(0);
      row[i] = Integer(i) * above + table[m - 1][i - 1];
    }
    table.push_back(std::move(row));
  }
  return table[n][j];
}

inline Integer bell_number(long n) {
  Integer s = 0;
  for (long j = 0; j <= n; ++j) s += stirling2(n, j);
  return s;
}

// zeta(1 - i) = (-1)^{i+1} B_i / i for i >= 1.
inline Rational zeta_one_minus(long i) {
  if (i < 1) throw std::invalid_argument("zeta_one_minus needs i >= 1");
  Rational v = bernoulli(i) / Rational(i);
  return (i % 2 == 0) ? -v : v;
}

}  // namespace qbl
