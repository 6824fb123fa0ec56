#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qbl {

// All scalar arithmetic in this library is exact. Rational is GMP's
// canonical fraction type: gcd(num, den) = 1 and den > 0 are maintained
// by every operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Guard for deliberately bounded computations (set partitions of large
// sets, high-order connected products, deep monomial expansions).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Renders "num/den", or just "num" for integers.
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational rat_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// binom(n, k) for arbitrary integer n (upper index may be negative),
// zero for k < 0.
inline Integer binomial(long n, long k) {
  if (k < 0) return 0;
  Integer b = 1;
  for (long i = 0; i < k; ++i) b *= (n - i);
  for (long i = 2; i <= k; ++i) b /= i;
  return b;
}

inline Rational pow_rat(const Rational& x, long e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Rational acc = 1, base = x;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline Integer pow_int(long base, long e) {
  Integer b = base;
  Integer acc = 1;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace qbl
