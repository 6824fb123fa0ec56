#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qbl/numbers.hpp"
#include "qbl/rational.hpp"

namespace qbl {

// Dense univariate polynomial over Q. Trailing zeros are trimmed; the zero
// polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& v) { return Poly(std::vector<Rational>{v}); }
  static Poly identity() { return Poly({Rational(0), Rational(1)}); }  // x
  static Poly monomial(long deg, const Rational& v = Rational(1)) {
    std::vector<Rational> c(deg + 1);
    c[deg] = v;
    return Poly(std::move(c));
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[i] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Rational& s, Poly p) {
    for (auto& v : p.c_) v *= s;
    p.trim();
    return p;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // p(x + t), by exact Taylor shift.
  Poly shift(const Rational& t) const {
    Poly acc;
    Poly power = constant(1);
    Poly lin({t, Rational(1)});
    for (size_t i = 0; i < c_.size(); ++i) {
      acc += c_[i] * power;
      power = power * lin;
    }
    return acc;
  }

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Polynomial in the basis binom(x, j), j >= 0. Conversion to and from the
// monomial basis is an exact bijection.
class BinomPoly {
 public:
  BinomPoly() = default;
  explicit BinomPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(long j) const {
    return (j >= 0 && j < static_cast<long>(c_.size())) ? c_[j] : Rational(0);
  }

  // binom(x, j) = x(x-1)...(x-j+1)/j!
  static Poly binom_basis_poly(long j) {
    Poly p = Poly::constant(1);
    for (long i = 0; i < j; ++i) p = p * Poly({Rational(-i), Rational(1)});
    return (Rational(1) / Rational(factorial(j))) * p;
  }

  Poly to_poly() const {
    Poly p;
    for (size_t j = 0; j < c_.size(); ++j)
      if (c_[j] != 0) p += c_[j] * binom_basis_poly(static_cast<long>(j));
    return p;
  }

  // Coefficients are the forward differences at 0: p = sum_j (Delta^j p)(0) binom(x, j).
  static BinomPoly from_poly(const Poly& p) {
    long d = p.degree();
    if (d < 0) return BinomPoly();
    std::vector<Rational> vals(d + 1);
    for (long i = 0; i <= d; ++i) vals[i] = p(Rational(i));
    std::vector<Rational> out(d + 1);
    for (long j = 0; j <= d; ++j) {
      out[j] = vals[0];
      for (long i = 0; i + 1 < static_cast<long>(vals.size()); ++i)
        vals[i] = vals[i + 1] - vals[i];
      vals.pop_back();
    }
    return BinomPoly(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Discrete derivative: (del p)(x) = p(x) - p(x - 1).
inline Poly disc_derivative(const Poly& p) { return p - p.shift(Rational(-1)); }

// Discrete convolution (f * g)(n) = sum_{i=1}^{n-1} f(i) g(n-i), extended to
// the unique polynomial agreeing with those values for every n >= 1.
// Computed in the binomial basis through the Vandermonde identity
//   sum_{m=0}^{x} binom(m,i) binom(x-m,j) = binom(x+1, i+j+1),
// then corrected for the two boundary terms (i = 0 and i = n) that the
// full-range sum includes but the convolution does not.
inline Poly disc_convolution(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  BinomPoly a = BinomPoly::from_poly(p);
  BinomPoly b = BinomPoly::from_poly(q);
  // Coefficients over binom(x+1, n).
  std::vector<Rational> shifted(a.coeffs().size() + b.coeffs().size());
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      shifted[i + j + 1] += a.coeff(i) * b.coeff(j);
  }
  // binom(x+1, n) = binom(x, n) + binom(x, n-1).
  std::vector<Rational> out(shifted.size());
  for (size_t n = 1; n < shifted.size(); ++n) {
    out[n] += shifted[n];
    out[n - 1] += shifted[n];
  }
  Poly full = BinomPoly(std::move(out)).to_poly();
  return full - p(Rational(0)) * q - q(Rational(0)) * p;
}

// Faulhaber polynomial: the unique constant-free polynomial with
// F_l(n) = sum_{i=1}^{n} i^{l-1}. Built exactly in the binomial basis,
// F_l = sum_j S(l, j) (j-1)! binom(x, j).
inline Poly faulhaber(long l) {
  if (l < 1) throw std::invalid_argument("faulhaber index must be >= 1");
  std::vector<Rational> c(l + 1);
  for (long j = 1; j <= l; ++j) c[j] = Rational(stirling2(l, j) * factorial(j - 1));
  return BinomPoly(std::move(c)).to_poly();
}

// Expands p (which must have zero constant term) in the Faulhaber basis:
// p = sum_d out[d] * F_d. Throws if no such expansion exists.
inline std::vector<Rational> faulhaber_expand(Poly p) {
  if (p(Rational(0)) != 0)
    throw std::invalid_argument("faulhaber_expand needs zero constant term");
  std::vector<Rational> out(std::max<long>(p.degree() + 1, 1));
  for (long d = p.degree(); d >= 1; d = p.degree()) {
    Rational c = p.coeff(d) * Rational(d);  // F_d is monic of degree d up to 1/d
    out[d] = c;
    p -= c * faulhaber(d);
    if (p.degree() >= d) throw std::runtime_error("faulhaber_expand failed to reduce");
  }
  if (!p.is_zero()) throw std::invalid_argument("no Faulhaber expansion (constant left)");
  return out;
}

inline std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (long i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (!s.empty()) {
      s += (v < 0) ? " - " : " + ";
      if (v < 0) v = -v;
    }
    std::string coeff = rat_str(v);
    if (i == 0) {
      s += coeff;
    } else {
      if (coeff != "1") s += coeff + "*";
      s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace qbl
