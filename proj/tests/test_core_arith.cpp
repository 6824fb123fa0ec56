#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qbl/numbers.hpp"
#include "qbl/poly.hpp"
#include "qbl/qseries.hpp"
#include "qbl/set_partition.hpp"

using namespace qbl;

namespace {

// Independent oracle: Bernoulli numbers straight from the defining recursion,
// recomputed here without the library's memo table.
Rational bernoulli_oracle(long k) {
  std::vector<Rational> b(k + 1);
  b[0] = 1;
  for (long n = 1; n <= k; ++n) {
    Rational s = 0;
    for (long j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * b[j];
    b[n] = -s / Rational(n + 1);
  }
  return b[k];
}

// Bernoulli polynomial B_n(x) = sum_j binom(n, j) B_j x^{n-j}.
Poly bernoulli_poly(long n) {
  Poly p;
  for (long j = 0; j <= n; ++j)
    p += Rational(binomial(n, j)) * bernoulli(j) * Poly::monomial(n - j);
  return p;
}

Poly random_poly(std::mt19937& rng, int maxdeg) {
  std::uniform_int_distribution<int> deg(0, maxdeg), num(-5, 5), den(1, 4);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& v : c) v = rat(num(rng), den(rng));
  return Poly(std::move(c));
}

// Convolution by direct summation.
Rational conv_oracle(const Poly& f, const Poly& g, long n) {
  Rational s = 0;
  for (long i = 1; i <= n - 1; ++i) s += f(Rational(i)) * g(Rational(n - i));
  return s;
}

}  // namespace

TEST_CASE("bernoulli numbers", "[core]") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == rat(-1, 2));
  CHECK(bernoulli(2) == rat(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == rat(-1, 30));
  for (long k = 0; k <= 20; ++k) CHECK(bernoulli(k) == bernoulli_oracle(k));
}

TEST_CASE("stirling numbers count set partitions by block count", "[core]") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 5) == 1);
  CHECK(stirling2(0, 0) == 1);
  for (int n = 1; n <= 8; ++n) {
    auto all = enumerate_set_partitions(n);
    for (int j = 0; j <= n; ++j) {
      long count = 0;
      for (auto& a : all) count += (a.length() == j);
      CHECK(stirling2(n, j) == count);
    }
  }
}

TEST_CASE("faulhaber polynomials", "[core]") {
  CHECK(faulhaber(1) == Poly::identity());
  // x(x+1)/2
  CHECK(faulhaber(2) == Poly({rat(0), rat(1, 2), rat(1, 2)}));
  CHECK(faulhaber(4)(Rational(3)) == 36);  // 1 + 8 + 27
  for (long l = 1; l <= 8; ++l) {
    Poly fl = faulhaber(l);
    CHECK(fl(Rational(0)) == 0);
    for (long n = 1; n <= 12; ++n) {
      Rational direct = 0;
      for (long i = 1; i <= n; ++i) direct += Rational(pow_int(i, l - 1));
      CHECK(fl(Rational(n)) == direct);
    }
  }
  CHECK_THROWS_AS(faulhaber(0), std::invalid_argument);
}

TEST_CASE("discrete derivative", "[core]") {
  CHECK(disc_derivative(faulhaber(4)) == Poly::monomial(3));
  CHECK(disc_derivative(Poly::constant(rat(7, 3))).is_zero());
  // x^2 -> 2x - 1
  CHECK(disc_derivative(Poly::monomial(2)) == Poly({rat(-1), rat(2)}));
  for (long l = 1; l <= 10; ++l)
    CHECK(disc_derivative(faulhaber(l)) == Poly::monomial(l - 1));
}

TEST_CASE("discrete convolution", "[core]") {
  Poly id = Poly::identity();
  CHECK(disc_convolution(id, id)(Rational(4)) == 10);  // 1*3 + 2*2 + 3*1
  CHECK(disc_convolution(id, Poly()).is_zero());
  std::mt19937 rng(20240801);
  for (int trial = 0; trial < 25; ++trial) {
    Poly f = random_poly(rng, 5), g = random_poly(rng, 5);
    Poly c = disc_convolution(f, g);
    for (long n = 1; n <= 14; ++n) CHECK(c(Rational(n)) == conv_oracle(f, g, n));
  }
}

TEST_CASE("discrete calculus identities", "[core]") {
  std::mt19937 rng(987123);
  Poly id = Poly::identity();
  for (int trial = 0; trial < 20; ++trial) {
    // The calculus acts on functions with f(0) = 0 (the boundary rule
    // del f(1) = f(1) is automatic there), so draw constant-free samples.
    Poly f = random_poly(rng, 6), g = random_poly(rng, 6);
    f -= Poly::constant(f(Rational(0)));
    g -= Poly::constant(g(Rational(0)));
    Poly fg = disc_convolution(f, g);
    // del distributes through the convolution on either side
    CHECK(disc_derivative(fg) == disc_convolution(disc_derivative(f), g));
    CHECK(disc_derivative(fg) == disc_convolution(f, disc_derivative(g)));
    // multiplication by the identity versus convolution
    CHECK(id * fg == disc_convolution(id * f, g) + disc_convolution(f, id * g));
  }
  for (int trial = 0; trial < 20; ++trial) {
    // The product rule holds with no constant-term restriction.
    Poly f = random_poly(rng, 6), g = random_poly(rng, 6);
    CHECK(disc_derivative(f * g) ==
          disc_derivative(f) * g + f * disc_derivative(g) -
              disc_derivative(f) * disc_derivative(g));
  }
  // del^2 (f * id) = f - del f
  Poly f = faulhaber(3);
  CHECK(disc_derivative(disc_derivative(disc_convolution(f, id))) ==
        f - disc_derivative(f));
}

TEST_CASE("faulhaber symmetry and Bernoulli polynomials", "[core]") {
  for (long l = 2; l <= 10; ++l) {
    // F_l(x) = (-1)^l F_l(-x-1)
    Poly fl = faulhaber(l);
    std::vector<Rational> neg(fl.degree() + 1);
    for (long i = 0; i <= fl.degree(); ++i)
      neg[i] = (i % 2 == 0) ? fl.coeff(i) : -fl.coeff(i);
    Poly rhs = Poly(std::move(neg)).shift(Rational(1));  // F_l(-x-1)
    if (l % 2 == 1) rhs = Rational(-1) * rhs;
    CHECK(fl == rhs);
  }
  for (long l = 2; l <= 8; ++l) {
    // l F_l(x) = B_l(x+1) - B_l
    Poly lhs = Rational(l) * faulhaber(l);
    Poly rhs = bernoulli_poly(l).shift(Rational(1)) - Poly::constant(bernoulli(l));
    CHECK(lhs == rhs);
  }
  // At l = 1 the subtracted constant is B_1(1) = +1/2, the opposite sign of
  // our B_1 = -1/2.
  CHECK(faulhaber(1) ==
        bernoulli_poly(1).shift(Rational(1)) - Poly::constant(-bernoulli(1)));
}

TEST_CASE("faulhaber generating series", "[core]") {
  // sum_l F_l(n) z^{l-1}/(l-1)! agrees with e^z (1 - e^{nz})/(1 - e^z)
  // through z^8. The right-hand side is (sum_{j>=1} n^j z^j / j!) / (sum_{j>=1} z^j / j!)
  // after multiplying numerator and denominator by -e^{-z}... computed here
  // directly as exp series ratio with the z^0 pole cancelled.
  const int ord = 8;
  for (long n = 1; n <= 6; ++n) {
    QSeries lhs(ord);
    for (long l = 1; l <= ord + 1; ++l) {
      Rational v = faulhaber(l)(Rational(n)) / Rational(factorial(l - 1));
      lhs.coeff(static_cast<int>(l - 1)) = v;
    }
    // e^z, e^{nz} truncated at ord+1 so the cancelled factor of z keeps ord terms
    QSeries ez(ord + 1), enz(ord + 1);
    for (int j = 0; j <= ord + 1; ++j) {
      ez.coeff(j) = Rational(1) / Rational(factorial(j));
      enz.coeff(j) = Rational(pow_int(n, j)) / Rational(factorial(j));
    }
    QSeries one = QSeries::constant(1, ord + 1);
    QSeries num = ez * (one - enz);  // divisible by z
    QSeries den = one - ez;          // divisible by z
    QSeries num_shift(ord), den_shift(ord);
    for (int j = 0; j <= ord; ++j) {
      num_shift.coeff(j) = num.coeff(j + 1);
      den_shift.coeff(j) = den.coeff(j + 1);
    }
    CHECK(lhs == num_shift / den_shift);
  }
}

TEST_CASE("binomial basis conversion is a bijection", "[core]") {
  std::mt19937 rng(5551212);
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = random_poly(rng, 7);
    CHECK(BinomPoly::from_poly(p).to_poly() == p);
  }
}

TEST_CASE("faulhaber expansion", "[core]") {
  Poly p = rat(5, 6) * faulhaber(4) + rat(1, 6) * faulhaber(2);
  auto c = faulhaber_expand(p);
  CHECK(c[4] == rat(5, 6));
  CHECK(c[2] == rat(1, 6));
  CHECK(c[3] == 0);
  CHECK(c[1] == 0);
}
