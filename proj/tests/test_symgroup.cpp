#include <catch2/catch_amalgamated.hpp>

#include "qbl/quasimodular.hpp"
#include "qbl/symgroup.hpp"

using namespace qbl;

namespace {

std::vector<Partition> partitions_upto(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m)
    for (auto& p : enumerate_partitions(m)) out.push_back(p);
  return out;
}

// Dimension of the irreducible representation by the hook length formula.
Integer dimension_oracle(const Partition& lambda) {
  Integer num = factorial(lambda.size());
  for (int h : hook_lengths(lambda)) num /= h;
  return num;
}

}  // namespace

TEST_CASE("centralizer orders", "[symgroup]") {
  CHECK(z_factor(Partition({1, 1, 1})) == 6);
  CHECK(z_factor(Partition({5})) == 5);
  CHECK(z_factor(Partition({2, 2, 1})) == 8);
  CHECK(z_factor(Partition()) == 1);
}

TEST_CASE("border strip enumeration", "[symgroup]") {
  CHECK(border_strips(Partition({2, 1}), 1).size() == 2);
  auto whole = border_strips(Partition({2, 1}), 3);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].inner == Partition());
  CHECK(whole[0].height == 1);
  // (2,2) minus a 3-strip leaves a single cell; the strip spans both rows
  auto l_shape = border_strips(Partition({2, 2}), 3);
  REQUIRE(l_shape.size() == 1);
  CHECK(l_shape[0].inner == Partition({1}));
  CHECK(l_shape[0].height == 1);
  // hook/strip duality: strip sizes match hook lengths as multisets
  for (auto& lambda : partitions_upto(12)) {
    std::vector<int> strips;
    for (long m = 1; m <= lambda.size(); ++m)
      for (size_t c = 0; c < border_strips(lambda, static_cast<int>(m)).size(); ++c)
        strips.push_back(static_cast<int>(m));
    std::sort(strips.begin(), strips.end());
    CHECK(strips == hook_lengths(lambda));
  }
}

TEST_CASE("characters by strip removal", "[symgroup]") {
  CHECK(character(Partition(), Partition()) == 1);
  CHECK(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(character(Partition({2, 2}), Partition({2, 2})) == 2);
  CHECK(character(Partition({1, 1}), Partition({2})) == -1);
  CHECK_THROWS_AS(character(Partition({2}), Partition({3})), std::invalid_argument);
  // trivial representation: all values 1
  for (int n = 1; n <= 7; ++n)
    for (auto& rho : enumerate_partitions(n))
      CHECK(character(Partition({n}), rho) == 1);
  // dimension at the identity class
  for (int n = 1; n <= 8; ++n) {
    Partition id(std::vector<int>(n, 1));
    for (auto& lambda : enumerate_partitions(n))
      CHECK(character(lambda, id) == dimension_oracle(lambda));
  }
}

TEST_CASE("recursion agrees with direct tableau enumeration", "[symgroup]") {
  for (int n = 1; n <= 8; ++n)
    for (auto& lambda : enumerate_partitions(n))
      for (auto& rho : enumerate_partitions(n))
        CHECK(character(lambda, rho) == character_bst(lambda, rho));
  // tableau types listed in the given order, including non-sorted ones
  CHECK(character_bst_type(Partition({3, 2}), {2, 1, 2}) ==
        character(Partition({3, 2}), Partition({2, 2, 1})));
  CHECK(character_bst_type(Partition({4, 2, 1, 1}), {1, 2, 2, 3}) ==
        character(Partition({4, 2, 1, 1}), Partition({3, 2, 2, 1})));
}

TEST_CASE("tableaux of mixed type within a hook-ish shape", "[symgroup]") {
  // type (2,1,2) within (4,2,1,1): exactly four tableaux
  long count = 0;
  std::function<void(const Partition&, size_t, int)> walk =
      [&](const Partition& shape, size_t idx, int height) {
        std::vector<int> type{2, 1, 2};
        if (idx == type.size()) {
          ++count;
          return;
        }
        for (auto& strip : border_strips(shape, type[idx]))
          walk(strip.inner, idx + 1, height + strip.height);
      };
  walk(Partition({4, 2, 1, 1}), 0, 0);
  CHECK(count == 4);
}

TEST_CASE("column orthogonality", "[symgroup]") {
  for (int n = 1; n <= 8; ++n) {
    auto all = enumerate_partitions(n);
    for (auto& lambda : all) {
      for (auto& mu : all) {
        Rational s = 0;
        for (auto& nu : all)
          s += Rational(character(lambda, nu) * character(mu, nu)) / z_factor(nu);
        CHECK(s == (lambda == mu ? 1 : 0));
      }
    }
  }
}

TEST_CASE("skew characters", "[symgroup]") {
  // single border strip: the skew character of its own size is a sign
  CHECK(skew_character(SkewShape(Partition({2, 2}), Partition({1})), Partition({3})) == -1);
  // reduces to the straight character when the inner shape is empty
  for (int n = 1; n <= 6; ++n)
    for (auto& lambda : enumerate_partitions(n))
      for (auto& rho : enumerate_partitions(n))
        CHECK(skew_character(SkewShape(lambda, Partition()), rho) ==
              character(lambda, rho));
  CHECK_THROWS_AS(SkewShape(Partition({1}), Partition({2})), std::invalid_argument);
}

TEST_CASE("skew composition of characters", "[symgroup]") {
  // chi^lambda(rho) decomposes through skew characters of the first cycle
  for (int n = 3; n <= 7; ++n) {
    for (auto& lambda : enumerate_partitions(n)) {
      for (auto& rho : enumerate_partitions(n)) {
        if (rho.length() < 2) continue;
        std::vector<int> head{rho.parts()[0]};
        Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
        Integer s = 0;
        for (auto& nu : sub_shapes_of_size(lambda, n - head[0])) {
          Integer sk = skew_character_type(SkewShape(lambda, nu), head);
          if (sk != 0) s += sk * character(nu, rest);
        }
        CHECK(s == character(lambda, rho));
      }
    }
  }
}

TEST_CASE("moeller transform", "[symgroup]") {
  PFun one = pf_const(1);
  PFun m_one = moller(one, 10);
  for (auto& p : partitions_upto(8)) CHECK(m_one(p) == 1);
  // hook length moments as transforms of the moment functions
  for (long k : {2L, 4L}) {
    PFun lhs = pf_H_moller(k, 10);
    PFun rhs = pf_H(k);
    for (auto& p : partitions_upto(10)) CHECK(lhs(p) == rhs(p));
  }
  // transform of T_{1,1} against the single-block strip moment
  PFun mt11 = moller(pf_T(1, 1), 10);
  PFun x11 = x_function({{1, 1}});
  for (auto& p : partitions_upto(10))
    CHECK(mt11(p) == x11(p) - rat(1, 24));
}

TEST_CASE("four equivalent hook length moments", "[symgroup]") {
  for (long k : {2L, 4L, 6L}) {
    PFun a = pf_H(k);
    PFun b = pf_H_strip(k);
    PFun c = pf_H_quadratic(k);
    PFun d = pf_H_moller(k, 10);
    for (auto& p : partitions_upto(10)) {
      Rational va = a(p);
      CHECK(va == b(p));
      CHECK(va == c(p));
      CHECK(va == d(p));
    }
  }
}

TEST_CASE("multiplicity binomial moments", "[symgroup]") {
  // single block (1,1): total size
  PFun u = u_function({{1, 1}});
  for (auto& p : partitions_upto(10)) CHECK(u(p) == Rational(p.size()));
  // concatenation under the induced product
  PFun u11 = u_function({{1, 1}});
  PFun u02 = u_function({{0, 2}});
  PFun concat = u_function({{1, 1}, {0, 2}});
  PFun prod = pf_induced(u11, u02);
  for (auto& p : partitions_upto(10)) CHECK(prod(p) == concat(p));
  // Stirling expansion of the double moments
  for (auto [k, l] : std::vector<std::pair<long, long>>{{1, 1}, {0, 2}, {2, 2}, {1, 3}}) {
    PFun t = pf_T(k, l, true);
    std::vector<PFun> us;
    for (long j = 1; j <= l; ++j) us.push_back(u_function({{k, static_cast<int>(j)}}));
    for (auto& p : partitions_upto(12)) {
      Rational s = t_constant(k, l);
      for (long j = 1; j <= l; ++j)
        s += Rational(stirling2(l, j) * factorial(j - 1)) * us[j - 1](p);
      CHECK(s == t(p));
    }
  }
}

TEST_CASE("border strip moments", "[symgroup]") {
  PFun x11 = x_function({{1, 1}});
  CHECK(x11(Partition({2, 1})) == 3);
  CHECK(x11(Partition()) == 0);
  // transform carries binomial moments to strip moments
  for (auto& blocks : std::vector<std::vector<MomentBlock>>{
           {{1, 1}}, {{0, 2}}, {{2, 1}}, {{1, 1}, {1, 1}}, {{0, 1}, {0, 2}}}) {
    PFun mu = moller(u_function(blocks), 9);
    PFun x = x_function(blocks);
    for (auto& p : partitions_upto(9)) CHECK(mu(p) == x(p));
  }
  // hook length moments against single-block strip moments:
  // H_{k+1} = -B_{k+1}/(2(k+1)) + X_{k,1}
  for (long k : {1L, 3L, 5L}) {
    PFun x = x_function({{k, 1}});
    PFun h = pf_H(k + 1);
    for (auto& p : partitions_upto(10))
      CHECK(h(p) == -bernoulli(k + 1) / Rational(2 * (k + 1)) + x(p));
  }
}

TEST_CASE("transform preserves quasimodularity of brackets", "[symgroup]") {
  // The bracket of the transformed fourth moment is again quasimodular of
  // weight 4; recognized at a modest order, the transform being expensive.
  PFun m = pf_H_moller(4, 20);
  QMFit fit = fit_qm(q_bracket(m, 20), 4);
  REQUIRE(fit.ok);
  CHECK(fit.poly == fit_qm(q_bracket(pf_H(4), 20), 4).poly);
}
