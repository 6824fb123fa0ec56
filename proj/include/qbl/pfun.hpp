#pragma once

#include <climits>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qbl/numbers.hpp"
#include "qbl/partition.hpp"
#include "qbl/poly.hpp"
#include "qbl/qseries.hpp"
#include "qbl/set_partition.hpp"

namespace qbl {

// A function on partitions with exact rational values. Generators carry a
// cheap closed-form evaluator; induced and connected products have no cheap
// closed form and are evaluated through a shared memo table, so they carry a
// finite size bound. Memoization is race-free: a mutex guards the table and
// any duplicated computation returns identical values.
class PFun {
 public:
  PFun() = default;
  PFun(std::function<Rational(const Partition&)> eval, int bound = INT_MAX,
       bool memoize = false)
      : eval_(std::move(eval)), bound_(bound) {
    if (memoize) cache_ = std::make_shared<Cache>();
  }

  int bound() const { return bound_; }

  Rational operator()(const Partition& lambda) const {
    if (lambda.size() > bound_)
      throw resource_error("partition exceeds the declared size bound of this function");
    if (!cache_) return eval_(lambda);
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->values.find(lambda);
      if (it != cache_->values.end()) return it->second;
    }
    Rational v = eval_(lambda);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->values.emplace(lambda, v);
    return v;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<Partition, Rational> values;
  };
  std::function<Rational(const Partition&)> eval_;
  int bound_ = INT_MAX;
  std::shared_ptr<Cache> cache_;
};

inline PFun pf_const(const Rational& v) {
  return PFun([v](const Partition&) -> Rational { return v; });
}

inline PFun pf_add(const PFun& f, const PFun& g) {
  int b = std::min(f.bound(), g.bound());
  return PFun([f, g](const Partition& p) -> Rational { return f(p) + g(p); }, b);
}

inline PFun pf_scale(const Rational& s, const PFun& f) {
  return PFun([s, f](const Partition& p) -> Rational { return s * f(p); }, f.bound());
}

inline PFun pf_mul(const PFun& f, const PFun& g) {
  int b = std::min(f.bound(), g.bound());
  return PFun([f, g](const Partition& p) -> Rational { return f(p) * g(p); }, b);
}

// Moebius function of the partition order, as a function on partitions.
inline PFun pf_moebius() {
  return PFun([](const Partition& p) -> Rational { return Rational(moebius_partition(p)); });
}

// Moment function S_k = -B_k/2k + sum_i lambda_i^{k-1}. Even weight unless
// the extended flag admits odd k.
inline PFun pf_S(long k, bool extended = false) {
  if (k < 2) throw std::invalid_argument("moment function needs k >= 2");
  if (k % 2 != 0 && !extended)
    throw std::invalid_argument("odd moment function requires the extended flag");
  Rational c = -bernoulli(k) / Rational(2 * k);
  return PFun([c, k](const Partition& p) -> Rational {
    Integer s = 0;
    for (auto [m, r] : p.multiplicities()) s += Integer(r) * pow_int(m, k - 1);
    return c + Rational(s);
  });
}

// Constant of T_{k,l}: -B_{k+l}/2(k+l) when k = 0 or l = 1, else 0.
inline Rational t_constant(long k, long l) {
  if (k == 0 || l == 1) return -bernoulli(k + l) / Rational(2 * (k + l));
  return 0;
}

// Double moment function T_{k,l} = C_{k,l} + sum_m m^k F_l(r_m(lambda)).
inline PFun pf_T(long k, long l, bool extended = false) {
  if (k < 0 || l < 1) throw std::invalid_argument("double moment needs k >= 0, l >= 1");
  if ((k + l) % 2 != 0 && !extended)
    throw std::invalid_argument("odd-weight double moment requires the extended flag");
  Rational c = t_constant(k, l);
  Poly fl = faulhaber(l);
  return PFun([c, k, fl](const Partition& p) -> Rational {
    Rational s = c;
    for (auto [m, r] : p.multiplicities()) s += Rational(pow_int(m, k)) * fl(Rational(r));
    return s;
  });
}

// The same function evaluated through repetition counts along the parts:
// C_{k,l} + sum_i lambda_i^k c_i(lambda)^{l-1} with c_i = #{j <= i : lambda_j = lambda_i}.
inline PFun pf_T_via_counts(long k, long l, bool extended = false) {
  if (k < 0 || l < 1) throw std::invalid_argument("double moment needs k >= 0, l >= 1");
  if ((k + l) % 2 != 0 && !extended)
    throw std::invalid_argument("odd-weight double moment requires the extended flag");
  Rational c = t_constant(k, l);
  return PFun([c, k, l](const Partition& p) -> Rational {
    Rational s = c;
    const auto& parts = p.parts();
    int run = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
      run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
      s += Rational(pow_int(parts[i], k) * pow_int(run, l - 1));
    }
    return s;
  });
}

// S_{k,g} for a polynomial g with g(0) = 0: the constant term
// -B_{k+1}/2(k+1) appears only when g is the identity.
inline PFun pf_S_kf(long k, const Poly& g) {
  if (g(Rational(0)) != 0)
    throw std::invalid_argument("pf_S_kf needs a polynomial with zero constant term");
  Rational c = (g == Poly::identity()) ? -bernoulli(k + 1) / Rational(2 * (k + 1))
                                       : Rational(0);
  return PFun([c, k, g](const Partition& p) -> Rational {
    Rational s = c;
    for (auto [m, r] : p.multiplicities()) s += Rational(pow_int(m, k)) * g(Rational(r));
    return s;
  });
}

// Laurent coefficients of 1/(2 sinh(x/2)): 1/x + sum_k c_k x^{k-1}/(k-1)!.
// Returns c_k, computed by exact series inversion.
inline Rational shifted_symmetric_constant(long k) {
  if (k < 1) throw std::invalid_argument("constant index must be >= 1");
  static std::mutex mutex;
  static std::vector<Rational> table;  // table[k-1] = c_k
  std::lock_guard<std::mutex> lock(mutex);
  if (static_cast<long>(table.size()) < k) {
    int order = static_cast<int>(k) + 2;
    // h(x) = 2 sinh(x/2)/x = sum_j x^{2j} / (4^j (2j+1)!)
    QSeries h(order);
    for (int j = 0; 2 * j <= order; ++j)
      h.coeff(2 * j) = Rational(1) / Rational(pow_int(4, j) * factorial(2 * j + 1));
    QSeries inv = h.inverse();  // 1/(2 sinh(x/2)) = inv(x)/x
    table.assign(order, Rational(0));
    // inv = 1 + sum_{k >= 1} c_k x^k / (k-1)!  (the constant 1 is the 1/x pole)
    for (long kk = 1; kk <= order; ++kk)
      table[kk - 1] = inv.coeff(static_cast<int>(kk)) * Rational(factorial(kk - 1));
  }
  return table[k - 1];
}

// Shifted symmetric power sum Q_k; all terms beyond the length of the
// partition cancel, so the sum is finite.
inline PFun pf_Q(long k) {
  if (k < 2) throw std::invalid_argument("shifted symmetric power sum needs k >= 2");
  Rational c = shifted_symmetric_constant(k);
  return PFun([c, k](const Partition& p) -> Rational {
    Rational s = c;
    const auto& parts = p.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
      // lambda_i - i + 1/2 and -i + 1/2, with i one-based.
      Rational a(2 * parts[i] - 2 * static_cast<long>(i) - 1, 2);
      Rational b(-2 * static_cast<long>(i) - 1, 2);
      s += pow_rat(a, k - 1) - pow_rat(b, k - 1);
    }
    return s;
  });
}

enum class CellStat { Arm, Content, Hook, ColumnIndex };

// k-th power sum of a cell statistic over the Young diagram. Cells are
// (row j, column i), 1-based; content is i - j.
inline PFun pf_cell_moment(CellStat stat, long k) {
  if (k < 1) throw std::invalid_argument("cell moment needs k >= 1");
  return PFun([stat, k](const Partition& p) -> Rational {
    const auto& parts = p.parts();
    Partition conj = p.conjugate();
    Rational s = 0;
    for (size_t j = 0; j < parts.size(); ++j) {
      for (int i = 1; i <= parts[j]; ++i) {
        long v = 0;
        switch (stat) {
          case CellStat::Arm:
            v = parts[j] - i;
            break;
          case CellStat::Content:
            v = i - static_cast<long>(j) - 1;
            break;
          case CellStat::Hook:
            v = (parts[j] - i) + (conj.parts()[i - 1] - static_cast<long>(j) - 1) + 1;
            break;
          case CellStat::ColumnIndex:
            v = i;
            break;
        }
        Integer pv = pow_int(v >= 0 ? v : -v, k);
        if (v < 0 && k % 2 == 1) pv = -pv;
        s += Rational(pv);
      }
    }
    return s;
  });
}

// Hook-length moment, primary definition: -B_k/2k + sum_cells h(cell)^{k-2}.
inline PFun pf_H(long k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("hook-length moment needs even k >= 2");
  Rational c = -bernoulli(k) / Rational(2 * k);
  if (k == 2)  // h^0 just counts cells
    return PFun([c](const Partition& p) -> Rational { return c + Rational(p.size()); });
  PFun hooks = pf_cell_moment(CellStat::Hook, k - 2);
  return PFun([c, hooks](const Partition& p) -> Rational { return c + hooks(p); });
}

// Hook-length moment as a quadratic in the shifted symmetric power sums:
//   H_k = Q_k/(k-1) + (1/2) sum_{i=2}^{k-2} (-1)^i binom(k-2, i-1) Q_i Q_{k-i}.
// The boundary terms collapse to Q_k/(k-1) under the conventions Q_0 = 1,
// Q_1 = 0 and binom(n, -1) = 2/(n+1).
inline PFun pf_H_quadratic(long k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("hook-length moment needs even k >= 2");
  std::vector<PFun> qs(k + 1);
  for (long i = 2; i <= k; ++i) qs[i] = pf_Q(i);
  return PFun([k, qs](const Partition& p) -> Rational {
    Rational s = qs[k](p) / Rational(k - 1);
    for (long i = 2; i <= k - 2; ++i) {
      Rational term = Rational(binomial(k - 2, i - 1)) * qs[i](p) * qs[k - i](p);
      s += (i % 2 == 0 ? term : -term) / 2;
    }
    return s;
  });
}

// Induced product: (f . g)(lambda) = sum over sub-multiset triples
// alpha, beta, gamma with union lambda and gamma strict of
// f(alpha) g(beta) (-1)^{l(gamma)}. Memoized.
inline PFun pf_induced(const PFun& f, const PFun& g) {
  int b = std::min(f.bound(), g.bound());
  return PFun(
      [f, g](const Partition& p) -> Rational {
        Rational s = 0;
        for_each_decomposition3(
            p, [&](const Partition& a, const Partition& bpart, const Partition& c) {
              Rational t = f(a) * g(bpart);
              s += (c.length() % 2 == 0) ? t : -t;
            });
        return s;
      },
      b, /*memoize=*/true);
}

// Connected product of f_1, ..., f_n: the Moebius-alternating combination of
// induced products of pointwise products over the blocks of set partitions.
inline PFun pf_connected(const std::vector<PFun>& fs) {
  if (fs.empty()) throw std::invalid_argument("connected product of nothing");
  if (fs.size() > 8) throw resource_error("connected product limited to n <= 8");
  if (fs.size() == 1) return fs[0];
  int b = INT_MAX;
  for (auto& f : fs) b = std::min(b, f.bound());
  int n = static_cast<int>(fs.size());
  std::vector<std::pair<Rational, PFun>> terms;
  for (auto& alpha : enumerate_set_partitions(n)) {
    Rational mu = moebius_top(alpha);
    PFun prod;
    bool started = false;
    for (auto& block : alpha.blocks()) {
      PFun blockf = fs[block[0] - 1];
      for (size_t i = 1; i < block.size(); ++i)
        blockf = pf_mul(blockf, fs[block[i] - 1]);
      prod = started ? pf_induced(prod, blockf) : blockf;
      started = true;
    }
    terms.emplace_back(mu, prod);
  }
  return PFun(
      [terms](const Partition& p) -> Rational {
        Rational s = 0;
        for (auto& [mu, f] : terms) s += mu * f(p);
        return s;
      },
      b, /*memoize=*/true);
}

// Derivation on functions of partitions: D f = S_2 f - S_2 . f, matching
// q d/dq under the q-bracket.
inline PFun pf_D(const PFun& f) {
  PFun s2 = pf_S(2);
  return pf_add(pf_mul(s2, f), pf_scale(-1, pf_induced(s2, f)));
}

// q-bracket: (sum_{|lambda| <= N} f(lambda) q^{|lambda|}) * prod (1 - q^n),
// streamed over partitions without materializing them.
inline QSeries q_bracket(const PFun& f, int order) {
  if (f.bound() < order)
    throw std::invalid_argument("function not evaluable through the requested order");
  QSeries num(order);
  for (int n = 0; n <= order; ++n) {
    Rational acc = 0;
    for_each_partition(n, [&](const std::vector<int>& parts) {
      acc += f(Partition(parts));
    });
    num.coeff(n) = acc;
  }
  return num * euler_factor(order).first;
}

// Connected q-bracket of f_1, ..., f_n: Moebius-alternating sum over set
// partitions of products of q-brackets of pointwise products.
inline QSeries connected_q_bracket(const std::vector<PFun>& fs, int order) {
  if (fs.empty()) throw std::invalid_argument("connected bracket of nothing");
  if (fs.size() > 8) throw resource_error("connected bracket limited to n <= 8");
  int n = static_cast<int>(fs.size());
  QSeries out(order);
  for (auto& alpha : enumerate_set_partitions(n)) {
    Rational mu = moebius_top(alpha);
    QSeries prod = QSeries::constant(1, order);
    for (auto& block : alpha.blocks()) {
      PFun blockf = fs[block[0] - 1];
      for (size_t i = 1; i < block.size(); ++i)
        blockf = pf_mul(blockf, fs[block[i] - 1]);
      prod = prod * q_bracket(blockf, order);
    }
    out = out + mu * prod;
  }
  return out;
}

}  // namespace qbl
