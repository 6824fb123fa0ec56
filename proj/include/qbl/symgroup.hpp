#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "qbl/numbers.hpp"
#include "qbl/partition.hpp"
#include "qbl/pfun.hpp"

namespace qbl {

// z_nu = prod_m m^{r_m} r_m!, the centralizer order of the conjugacy class.
inline Rational z_factor(const Partition& nu) {
  Integer z = 1;
  for (auto [m, r] : nu.multiplicities()) z *= pow_int(m, r) * factorial(r);
  return Rational(z);
}

// A border strip removed from the outer rim: the remaining inner shape and
// the strip height (rows spanned minus one).
struct BorderStrip {
  Partition inner;
  int height;
};

// Beta-numbers: first-column hook lengths lambda_i + len - i, strictly
// decreasing. A strip of size m is removable exactly when some beta value b
// has b - m >= 0 outside the beta set; the height counts the beta values
// jumped over.
inline std::vector<BorderStrip> border_strips(const Partition& lambda, int m) {
  std::vector<BorderStrip> out;
  if (m < 1 || lambda.size() < m) return out;
  long len = lambda.length();
  std::vector<long> beta(len);
  for (long i = 0; i < len; ++i) beta[i] = lambda.parts()[i] + (len - 1 - i);
  for (long i = 0; i < len; ++i) {
    long target = beta[i] - m;
    if (target < 0) continue;
    bool clash = false;
    int jumped = 0;
    for (long j = 0; j < len; ++j) {
      if (j == i) continue;
      if (beta[j] == target) clash = true;
      if (beta[j] > target && beta[j] < beta[i]) ++jumped;
    }
    if (clash) continue;
    std::vector<long> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> parts;
    for (long j = 0; j < len; ++j) {
      long part = nb[j] - (len - 1 - j);
      if (part > 0) parts.push_back(static_cast<int>(part));
    }
    out.push_back({Partition(std::move(parts)), jumped});
  }
  return out;
}

// Multiset of hook lengths of the Young diagram, ascending.
inline std::vector<int> hook_lengths(const Partition& lambda) {
  std::vector<int> out;
  Partition conj = lambda.conjugate();
  for (size_t j = 0; j < lambda.parts().size(); ++j)
    for (int i = 1; i <= lambda.parts()[j]; ++i)
      out.push_back(lambda.parts()[j] - i + conj.parts()[i - 1] -
                    static_cast<int>(j));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
inline std::mutex& character_mutex() {
  static std::mutex m;
  return m;
}
inline std::map<std::pair<Partition, Partition>, Integer>& character_cache() {
  static std::map<std::pair<Partition, Partition>, Integer> c;
  return c;
}
}  // namespace detail

// Character of the symmetric group by the strip-removal recursion, removing
// the largest cycle first. Memoized on (lambda, rho); the cache is shared
// and mutex-guarded, duplicated work always lands on the same value.
inline Integer character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("character needs |lambda| = |rho|");
  if (lambda.empty()) return 1;
  {
    std::lock_guard<std::mutex> lock(detail::character_mutex());
    auto it = detail::character_cache().find({lambda, rho});
    if (it != detail::character_cache().end()) return it->second;
  }
  int m = rho.parts()[0];
  Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  Integer s = 0;
  for (auto& strip : border_strips(lambda, m)) {
    Integer v = character(strip.inner, rest);
    s += (strip.height % 2 == 0) ? v : -v;
  }
  std::lock_guard<std::mutex> lock(detail::character_mutex());
  detail::character_cache().emplace(std::make_pair(lambda, rho), s);
  return s;
}

// Signed count over all strip tableaux of a given type, strips removed in
// the order the type lists them. Independent of the recursion above.
inline Integer character_bst_type(const Partition& lambda, const std::vector<int>& type) {
  long total = 0;
  for (int t : type) total += t;
  if (lambda.size() != total)
    throw std::invalid_argument("tableau type must fill the shape");
  std::function<Integer(const Partition&, size_t, int)> rec =
      [&](const Partition& shape, size_t idx, int height) -> Integer {
    if (idx == type.size()) return (height % 2 == 0) ? 1 : -1;
    Integer s = 0;
    for (auto& strip : border_strips(shape, type[idx]))
      s += rec(strip.inner, idx + 1, height + strip.height);
    return s;
  };
  return rec(lambda, 0, 0);
}

inline Integer character_bst(const Partition& lambda, const Partition& rho) {
  if (lambda.size() > 14) throw resource_error("tableau enumeration limited to n <= 14");
  return character_bst_type(lambda, rho.parts());
}

inline bool fits_inside(const Partition& inner, const Partition& outer) {
  const auto& in = inner.parts();
  const auto& out = outer.parts();
  if (in.size() > out.size()) return false;
  for (size_t r = 0; r < in.size(); ++r)
    if (in[r] > out[r]) return false;
  return true;
}

// Skew shape: inner contained in outer row by row.
struct SkewShape {
  Partition outer, inner;
  SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!fits_inside(inner, outer))
      throw std::invalid_argument("inner shape not contained in outer shape");
  }
  long size() const { return outer.size() - inner.size(); }
};

// Skew character: signed count of strip tableaux filling outer/inner, strips
// removed from the outer rim without cutting into the inner shape.
inline Integer skew_character_type(const SkewShape& shape, const std::vector<int>& type) {
  long total = 0;
  for (int t : type) total += t;
  if (shape.size() != total)
    throw std::invalid_argument("skew character needs |shape| = |type|");
  std::function<Integer(const Partition&, size_t, int)> rec =
      [&](const Partition& cur, size_t idx, int height) -> Integer {
    if (idx == type.size())
      return (cur == shape.inner) ? ((height % 2 == 0) ? 1 : -1) : 0;
    Integer s = 0;
    for (auto& strip : border_strips(cur, type[idx])) {
      if (!fits_inside(shape.inner, strip.inner)) continue;
      s += rec(strip.inner, idx + 1, height + strip.height);
    }
    return s;
  };
  return rec(shape.outer, 0, 0);
}

inline Integer skew_character(const SkewShape& shape, const Partition& rho) {
  return skew_character_type(shape, rho.parts());
}

// Moeller transform: average of f over conjugacy classes weighted by the
// squared character column of lambda. Exact for |lambda| <= bound.
inline PFun moller(const PFun& f, int bound) {
  return PFun(
      [f](const Partition& lambda) -> Rational {
        Rational s = 0;
        for (auto& nu : enumerate_partitions(static_cast<int>(lambda.size()))) {
          Integer chi = character(lambda, nu);
          if (chi == 0) continue;
          s += Rational(chi * chi) / z_factor(nu) * f(nu);
        }
        return s;
      },
      std::min(bound, f.bound()), /*memoize=*/true);
}

// Block data for the multiplicity-binomial and border-strip moment families:
// each block carries one repeated value, entering with exponent sum kappa
// and repetition length len.
struct MomentBlock {
  long kappa;
  int len;
};

// U function: sum over assignments of a value m_b >= 1 to each block of
// prod_b m_b^{kappa_b} * prod_a binom(r_a(lambda), r_a(assignment)).
// Binomials vanish unless every assigned value occurs as a part, so the
// value loop runs over the distinct parts only.
inline PFun u_function(const std::vector<MomentBlock>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("u_function needs blocks");
  return PFun([blocks](const Partition& lambda) -> Rational {
    auto mults = lambda.multiplicities();
    size_t nb = blocks.size();
    std::vector<size_t> choice(nb);
    Rational total = 0;
    std::function<void(size_t)> rec = [&](size_t b) {
      if (b == nb) {
        std::map<int, int> used;
        Integer mono = 1;
        for (size_t i = 0; i < nb; ++i) {
          int value = mults[choice[i]].first;
          used[value] += blocks[i].len;
          mono *= pow_int(value, blocks[i].kappa);
        }
        Integer binoms = 1;
        for (auto& [value, need] : used) {
          binoms *= binomial(lambda.mult_of(value), need);
          if (binoms == 0) return;
        }
        total += Rational(mono * binoms);
        return;
      }
      for (size_t i = 0; i < mults.size(); ++i) {
        choice[b] = i;
        rec(b + 1);
      }
    };
    if (!mults.empty()) rec(0);
    return total;
  });
}

// All sub-shapes of lambda (row-wise containment) with the given cell count.
inline std::vector<Partition> sub_shapes_of_size(const Partition& lambda, long size) {
  std::vector<Partition> out;
  if (size == 0) {
    out.push_back(Partition());
    return out;
  }
  const auto& parts = lambda.parts();
  std::vector<int> cur;
  std::function<void(size_t, long, int)> rec = [&](size_t row, long left, int cap) {
    if (left == 0) {
      out.push_back(Partition(cur));
      return;
    }
    if (row == parts.size()) return;
    int maxv = std::min<long>(std::min(cap, parts[row]), left);
    for (int v = maxv; v >= 1; --v) {
      cur.push_back(v);
      rec(row + 1, left - v, v);
      cur.pop_back();
    }
  };
  rec(0, size, parts.empty() ? 0 : parts[0]);
  return out;
}

// Border strip moment: sum over block value assignments and over remaining
// shapes nu inside lambda of chi^{lambda/nu}(type)^2 / z_type * monomial.
// The inner sum runs over distinct shapes, weighting each by the squared
// skew character.
inline PFun x_function(const std::vector<MomentBlock>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("x_function needs blocks");
  return PFun(
      [blocks](const Partition& lambda) -> Rational {
        if (lambda.size() > 12)
          throw resource_error("border strip moments limited to |lambda| <= 12");
        long n = lambda.size();
        size_t nb = blocks.size();
        std::vector<int> values(nb);
        Rational total = 0;
        std::function<void(size_t, long)> rec = [&](size_t b, long budget) {
          if (b == nb) {
            std::vector<int> type;
            Integer mono = 1;
            for (size_t i = 0; i < nb; ++i) {
              for (int t = 0; t < blocks[i].len; ++t) type.push_back(values[i]);
              mono *= pow_int(values[i], blocks[i].kappa);
            }
            long strip_total = 0;
            for (int t : type) strip_total += t;
            if (strip_total == 0) return;
            Rational z = z_factor(Partition(std::vector<int>(type)));
            Rational inner_sum = 0;
            for (auto& nu : sub_shapes_of_size(lambda, n - strip_total)) {
              Integer chi = skew_character_type(SkewShape(lambda, nu), type);
              if (chi != 0) inner_sum += Rational(chi * chi);
            }
            total += Rational(mono) * inner_sum / z;
            return;
          }
          for (int v = 1; static_cast<long>(v) * blocks[b].len <= budget; ++v) {
            values[b] = v;
            rec(b + 1, budget - static_cast<long>(v) * blocks[b].len);
          }
        };
        rec(0, n);
        return total;
      },
      12, /*memoize=*/true);
}

// Strip-count form of the hook length moment.
inline PFun pf_H_strip(long k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("hook-length moment needs even k >= 2");
  Rational c = -bernoulli(k) / Rational(2 * k);
  return PFun([c, k](const Partition& p) -> Rational {
    Rational s = c;
    for (long m = 1; m <= p.size(); ++m) {
      size_t count = border_strips(p, static_cast<int>(m)).size();
      if (count) s += Rational(Integer(count) * pow_int(m, k - 2));
    }
    return s;
  });
}

// Transform form of the hook length moment.
inline PFun pf_H_moller(long k, int bound) { return moller(pf_S(k), bound); }

}  // namespace qbl
