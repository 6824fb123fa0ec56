#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qbl/linalg.hpp"
#include "qbl/qseries.hpp"

namespace qbl {

// Exact polynomial in G2, G4, G6. This is a free polynomial algebra, so the
// representation of a quasimodular form here is unique; the depth of a
// homogeneous element is its degree in G2.
class QMPoly {
 public:
  using Monomial = std::array<int, 3>;  // exponents of G2, G4, G6

  QMPoly() = default;
  static QMPoly constant(const Rational& v) {
    QMPoly p;
    if (v != 0) p.terms_[{0, 0, 0}] = v;
    return p;
  }
  static QMPoly gen(int which) {  // 2, 4 or 6
    QMPoly p;
    Monomial m{0, 0, 0};
    m[which / 2 - 1] = 1;
    p.terms_[m] = 1;
    return p;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  static int weight_of(const Monomial& m) { return 2 * m[0] + 4 * m[1] + 6 * m[2]; }

  void add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c != 0) terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend QMPoly operator+(QMPoly a, const QMPoly& b) {
    for (auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend QMPoly operator-(QMPoly a, const QMPoly& b) {
    for (auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
  }
  friend QMPoly operator*(const Rational& s, const QMPoly& p) {
    QMPoly out;
    if (s == 0) return out;
    for (auto& [m, c] : p.terms_) out.terms_[m] = s * c;
    return out;
  }
  friend QMPoly operator*(const QMPoly& a, const QMPoly& b) {
    QMPoly out;
    for (auto& [m, c] : a.terms_)
      for (auto& [n, d] : b.terms_)
        out.add_term({m[0] + n[0], m[1] + n[1], m[2] + n[2]}, c * d);
    return out;
  }
  friend bool operator==(const QMPoly& a, const QMPoly& b) {
    return a.terms_ == b.terms_;
  }

  // Weights of the homogeneous components, ascending.
  std::vector<int> weights() const {
    std::vector<int> w;
    for (auto& [m, c] : terms_) {
      int k = weight_of(m);
      if (w.empty() || w.back() != k) w.push_back(k);
    }
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
  }
  bool homogeneous() const { return weights().size() <= 1; }

  // Degree in G2; for homogeneous input this is the depth.
  int depth() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m[0]);
    return d;
  }

  std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
};

// All monomials in G2, G4, G6 of weight <= maxweight, in a fixed order:
// weight ascending, then exponent vector descending (so G2^k precedes
// lower-depth monomials of the same weight).
inline std::vector<QMPoly::Monomial> qm_monomials(int maxweight) {
  std::vector<QMPoly::Monomial> out;
  for (int w = 0; w <= maxweight; w += 2)
    for (int a = w / 2; a >= 0; --a)
      for (int b = (w - 2 * a) / 4; b >= 0; --b) {
        int rest = w - 2 * a - 4 * b;
        if (rest % 6 == 0) out.push_back({a, b, rest / 6});
      }
  return out;
}

inline QSeries qm_monomial_series(const QMPoly::Monomial& m, int order) {
  QSeries s = QSeries::constant(1, order);
  for (int i = 0; i < m[0]; ++i) s = s * eisenstein(2, order);
  for (int i = 0; i < m[1]; ++i) s = s * eisenstein(4, order);
  for (int i = 0; i < m[2]; ++i) s = s * eisenstein(6, order);
  return s;
}

// Substitutes truncated Eisenstein series and multiplies out.
inline QSeries qm_expand(const QMPoly& p, int order) {
  QSeries out(order);
  for (auto& [m, c] : p.terms()) out = out + c * qm_monomial_series(m, order);
  return out;
}

struct QMFit {
  bool ok = false;
  QMPoly poly;
  int verified_order = -1;  // the fit is checked coefficient-wise through q^N
  long bad_index = -1;      // first mismatching q-power when not ok
  long dimension = 0;
  std::string error;
};

// Exact recognition of a series as a polynomial in G2, G4, G6 of weight at
// most maxweight. The linear system is solved exactly; the solution is
// verified against every available coefficient. A success means "matches
// through q^N", nothing stronger. Refuses under-determined fits.
inline QMFit fit_qm(const QSeries& s, int maxweight) {
  QMFit fit;
  auto mons = qm_monomials(maxweight);
  fit.dimension = static_cast<long>(mons.size());
  int order = s.order();
  if (order < static_cast<int>(mons.size()) + 10) {
    fit.error = "under-determined: need order >= dimension + 10";
    return fit;
  }
  Mat a(order + 1, std::vector<Rational>(mons.size()));
  std::vector<Rational> b(order + 1);
  for (size_t j = 0; j < mons.size(); ++j) {
    QSeries col = qm_monomial_series(mons[j], order);
    for (int i = 0; i <= order; ++i) a[i][j] = col.coeff(i);
  }
  for (int i = 0; i <= order; ++i) b[i] = s.coeff(i);
  LinearSolution sol = solve_exact(a, b);
  if (!sol.ok) {
    fit.bad_index = sol.bad_row;
    fit.error = "no representation matches coefficient " + std::to_string(sol.bad_row);
    return fit;
  }
  for (size_t j = 0; j < mons.size(); ++j) fit.poly.add_term(mons[j], sol.x[j]);
  fit.ok = true;
  fit.verified_order = order;
  return fit;
}

// Formal monomials in the derivatives D^r G_k of the combinatorial
// Eisenstein series (any k >= 1, including odd). Factors are (k, r) pairs,
// kept sorted; D^r G_k has weight k + 2r. The spanning set is not free, so
// representations are not unique.
class CEExpr {
 public:
  using Factor = std::pair<int, int>;          // (k, r)
  using Monomial = std::vector<Factor>;        // sorted factors

  CEExpr() = default;

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial m, const Rational& c) {
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c != 0) terms_[std::move(m)] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static int weight_of(const Monomial& m) {
    int w = 0;
    for (auto [k, r] : m) w += k + 2 * r;
    return w;
  }

  std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
};

inline QSeries ce_monomial_series(const CEExpr::Monomial& m, int order) {
  QSeries s = QSeries::constant(1, order);
  for (auto [k, r] : m) s = s * d_series_pow(eisenstein(k, order), r);
  return s;
}

inline QSeries ce_expand(const CEExpr& e, int order) {
  QSeries out(order);
  for (auto& [m, c] : e.terms()) out = out + c * ce_monomial_series(m, order);
  return out;
}

// All monomials in the D^r G_k of total weight <= maxweight, deterministic
// order: weight ascending, then lexicographic on the factor list.
inline std::vector<CEExpr::Monomial> ce_monomials(int maxweight) {
  std::vector<CEExpr::Factor> symbols;
  for (int k = 1; k <= maxweight; ++k)
    for (int r = 0; k + 2 * r <= maxweight; ++r) symbols.push_back({k, r});
  std::vector<CEExpr::Monomial> out;
  std::function<void(size_t, int, CEExpr::Monomial&)> rec =
      [&](size_t i, int budget, CEExpr::Monomial& cur) {
        out.push_back(cur);
        for (size_t j = i; j < symbols.size(); ++j) {
          int w = symbols[j].first + 2 * symbols[j].second;
          if (w > budget) continue;
          cur.push_back(symbols[j]);
          rec(j, budget - w, cur);
          cur.pop_back();
        }
      };
  CEExpr::Monomial cur;
  rec(0, maxweight, cur);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int wa = CEExpr::weight_of(a), wb = CEExpr::weight_of(b);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return out;
}

struct CEFit {
  bool ok = false;
  CEExpr expr;
  bool unique = false;  // relations exist among the spanning monomials
  int verified_order = -1;
  long bad_index = -1;
  long dimension = 0;
  std::string error;
};

// Finds some exact representation in the combinatorial Eisenstein span of
// weight <= maxweight. Relations may exist; any exact solution is accepted
// and reported as non-unique.
inline CEFit fit_ce(const QSeries& s, int maxweight) {
  CEFit fit;
  auto mons = ce_monomials(maxweight);
  fit.dimension = static_cast<long>(mons.size());
  int order = s.order();
  if (order < static_cast<int>(mons.size()) + 10) {
    fit.error = "under-determined: need order >= dimension + 10";
    return fit;
  }
  Mat a(order + 1, std::vector<Rational>(mons.size()));
  std::vector<Rational> b(order + 1);
  for (size_t j = 0; j < mons.size(); ++j) {
    QSeries col = ce_monomial_series(mons[j], order);
    for (int i = 0; i <= order; ++i) a[i][j] = col.coeff(i);
  }
  for (int i = 0; i <= order; ++i) b[i] = s.coeff(i);
  LinearSolution sol = solve_exact(a, b);
  if (!sol.ok) {
    fit.bad_index = sol.bad_row;
    fit.error = "no representation matches coefficient " + std::to_string(sol.bad_row);
    return fit;
  }
  for (size_t j = 0; j < mons.size(); ++j)
    if (sol.x[j] != 0) fit.expr.add_term(mons[j], sol.x[j]);
  fit.ok = true;
  fit.unique = sol.unique;
  fit.verified_order = order;
  return fit;
}

// Depth-lowering derivation: d(G2) = -1/2, d annihilates G4 and G6, extended
// by the Leibniz rule.
inline QMPoly d_qm(const QMPoly& p) {
  QMPoly out;
  for (auto& [m, c] : p.terms()) {
    if (m[0] == 0) continue;
    out.add_term({m[0] - 1, m[1], m[2]}, c * Rational(m[0]) * rat(-1, 2));
  }
  return out;
}

// q d/dq on the canonical representation: expand, differentiate the series,
// recognize at weight + 2. Genuine quasimodular input always fits; a failure
// is surfaced, never patched.
inline QMPoly D_qm(const QMPoly& p) {
  int w = p.weights().empty() ? 0 : p.weights().back();
  int target = w + 2;
  int order = static_cast<int>(qm_monomials(target).size()) + 12;
  QMFit fit = fit_qm(d_series(qm_expand(p, order)), target);
  if (!fit.ok)
    throw std::runtime_error("derivative left the quasimodular algebra: " + fit.error);
  return fit.poly;
}

// theta_x = D + 2x G2, defined on homogeneous elements.
inline QMPoly serre_theta(const QMPoly& p, const Rational& x) {
  if (!p.homogeneous())
    throw std::invalid_argument("serre_theta needs homogeneous input");
  return D_qm(p) + (Rational(2) * x) * (QMPoly::gen(2) * p);
}

inline std::string QMPoly::to_string() const {
  if (terms_.empty()) return "0";
  // weight descending, then depth (G2-degree) descending
  std::vector<std::pair<Monomial, Rational>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int wa = weight_of(a.first), wb = weight_of(b.first);
    if (wa != wb) return wa > wb;
    return a.first > b.first;
  });
  std::string s;
  bool first = true;
  for (auto& [m, c] : items) {
    Rational v = c;
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
    std::string mono;
    const char* names[3] = {"G2", "G4", "G6"};
    for (int i = 0; i < 3; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      s += rat_str(v);
    } else {
      if (v != 1) s += rat_str(v) + "*";
      s += mono;
    }
  }
  return s;
}

inline std::string CEExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int wa = weight_of(a.first), wb = weight_of(b.first);
    if (wa != wb) return wa > wb;
    return a.first > b.first;
  });
  std::string s;
  bool first = true;
  for (auto& [m, c] : items) {
    Rational v = c;
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
    std::string mono;
    for (auto [k, r] : m) {
      if (!mono.empty()) mono += "*";
      if (r == 0)
        mono += "G" + std::to_string(k);
      else if (r == 1)
        mono += "DG" + std::to_string(k);
      else
        mono += "D" + std::to_string(r) + "G" + std::to_string(k);
    }
    if (mono.empty()) {
      s += rat_str(v);
    } else {
      if (v != 1) s += rat_str(v) + "*";
      s += mono;
    }
  }
  return s;
}

}  // namespace qbl
