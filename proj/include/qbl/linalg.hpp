#pragma once

#include <vector>

#include "qbl/rational.hpp"

namespace qbl {

using Mat = std::vector<std::vector<Rational>>;

// Exact determinant by Gaussian elimination with the first nonzero pivot in
// column order. No magnitude heuristics: pivot choice is deterministic, so
// repeated runs produce identical eliminations.
inline Rational determinant(Mat a) {
  size_t n = a.size();
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rational inv = Rational(1) / a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] * inv;
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

struct LinearSolution {
  bool ok = false;
  std::vector<Rational> x;  // free variables pinned to zero
  long rank = 0;
  bool unique = false;
  long bad_row = -1;  // first equation the echelon solution fails to satisfy
};

// Solves A x = b exactly over Q. The system may be overdetermined; the
// echelon solution (free variables = 0) is verified against every equation,
// and the first violated row is reported on failure.
inline LinearSolution solve_exact(const Mat& a_in, const std::vector<Rational>& b_in) {
  Mat a = a_in;
  std::vector<Rational> b = b_in;
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  if (b.size() != rows) throw std::invalid_argument("solve_exact: size mismatch");

  std::vector<long> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    Rational inv = Rational(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(static_cast<long>(c));
    ++r;
  }

  LinearSolution sol;
  sol.rank = static_cast<long>(r);
  sol.unique = (r == cols);
  sol.x.assign(cols, Rational(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) sol.x[pivot_col[i]] = b[i];

  for (size_t i = 0; i < rows; ++i) {
    Rational lhs = 0;
    for (size_t j = 0; j < cols; ++j) lhs += a_in[i][j] * sol.x[j];
    if (lhs != b_in[i]) {
      sol.ok = false;
      sol.bad_row = static_cast<long>(i);
      return sol;
    }
  }
  sol.ok = true;
  return sol;
}

// Exact rank (deterministic elimination).
inline long rank_exact(Mat a) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<long>(r);
}

}  // namespace qbl
