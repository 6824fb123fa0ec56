#pragma once

#include <string>
#include <vector>

#include "qbl/numbers.hpp"
#include "qbl/partition.hpp"
#include "qbl/rational.hpp"

namespace qbl {

// Truncated power series in q with exact rational coefficients, carrying
// coefficients for q^0 .. q^order. Arithmetic truncates to the smaller
// order of the operands; equality means coefficient-wise equality through
// the common order.
class QSeries {
 public:
  QSeries() : order_(-1) {}
  explicit QSeries(int order) : order_(order), c_(order + 1) {
    if (order < 0) throw std::invalid_argument("negative series order");
  }
  QSeries(int order, std::vector<Rational> coeffs)
      : order_(order), c_(std::move(coeffs)) {
    c_.resize(order + 1);
  }
  static QSeries constant(const Rational& v, int order) {
    QSeries s(order);
    s.c_[0] = v;
    return s;
  }

  int order() const { return order_; }
  const Rational& coeff(int n) const { return c_.at(n); }
  Rational& coeff(int n) { return c_.at(n); }

  QSeries truncated(int order) const {
    if (order >= order_) return *this;
    return QSeries(order, std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order_, b.order_);
    QSeries out(n);
    for (int i = 0; i <= n; ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order_, b.order_);
    QSeries out(n);
    for (int i = 0; i <= n; ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
  }
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order_, b.order_);
    QSeries out(n);
    for (int i = 0; i <= n; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b.c_[j] == 0) continue;
        out.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }
  friend QSeries operator*(const Rational& s, QSeries a) {
    for (auto& v : a.c_) v *= s;
    return a;
  }
  friend bool operator==(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order_, b.order_);
    for (int i = 0; i <= n; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

  // Reciprocal; requires a nonzero constant term.
  QSeries inverse() const {
    if (order_ < 0 || c_[0] == 0)
      throw std::invalid_argument("series inverse needs a unit constant term");
    QSeries out(order_);
    Rational u = Rational(1) / c_[0];
    out.c_[0] = u;
    for (int n = 1; n <= order_; ++n) {
      Rational s = 0;
      for (int k = 1; k <= n; ++k) s += c_[k] * out.c_[n - k];
      out.c_[n] = -u * s;
    }
    return out;
  }

  // Exact division; requires divisor with nonzero constant term, and then
  // (a / b) * b == a through the common truncation order.
  friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

  // First index where the two series disagree, or -1 if equal through the
  // common order.
  friend int first_mismatch(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order_, b.order_);
    for (int i = 0; i <= n; ++i)
      if (a.c_[i] != b.c_[i]) return i;
    return -1;
  }

  std::string to_string() const {
    if (order_ < 0) return "0";
    std::string s;
    bool first = true;
    for (int i = 0; i <= order_; ++i) {
      if (c_[i] == 0) continue;
      Rational v = c_[i];
      if (first) {
        if (v < 0) {
          s += "-";
          v = -v;
        }
        first = false;
      } else {
        s += (v < 0) ? " - " : " + ";
        if (v < 0) v = -v;
      }
      std::string coeff = rat_str(v);
      if (i == 0) {
        s += coeff;
      } else {
        if (coeff != "1") s += coeff + "*";
        s += (i == 1) ? "q" : "q^" + std::to_string(i);
      }
    }
    return first ? "0" : s;
  }

 private:
  int order_;
  std::vector<Rational> c_;
};

// D = q d/dq on truncated series: a_n -> n a_n.
inline QSeries d_series(const QSeries& s) {
  QSeries out(s.order());
  for (int n = 0; n <= s.order(); ++n) out.coeff(n) = Rational(n) * s.coeff(n);
  return out;
}

inline QSeries d_series_pow(QSeries s, int r) {
  for (int i = 0; i < r; ++i) s = d_series(s);
  return s;
}

// Eisenstein series -B_k/2k + sum_{n <= N} sigma_{k-1}(n) q^n. Odd k is
// permitted; those series span the combinatorial extension of the
// quasimodular algebra.
inline QSeries eisenstein(long k, int order) {
  if (k < 1) throw std::invalid_argument("eisenstein weight must be >= 1");
  QSeries out(order);
  out.coeff(0) = -bernoulli(k) / Rational(2 * k);
  for (long d = 1; d <= order; ++d) {
    Integer dk = pow_int(d, k - 1);
    for (long n = d; n <= order; n += d) out.coeff(n) += Rational(dk);
  }
  return out;
}

// prod_{n <= N} (1 - q^n) and its reciprocal, whose coefficients count
// partitions.
inline std::pair<QSeries, QSeries> euler_factor(int order) {
  QSeries e = QSeries::constant(1, order);
  for (int n = 1; n <= order; ++n) {
    QSeries f = QSeries::constant(1, order);
    f.coeff(n) = -1;
    e = e * f;
  }
  return {e, e.inverse()};
}

}  // namespace qbl
