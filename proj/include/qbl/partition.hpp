#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qbl/rational.hpp"

namespace qbl {

// Integer partition: weakly decreasing parts >= 1. The identity of a
// partition is its part multiset; parts are order-normalized on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  }

  const std::vector<int>& parts() const { return parts_; }
  long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }
  long length() const { return static_cast<long>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  int mult_of(int m) const {
    int r = 0;
    for (int p : parts_) r += (p == m);
    return r;
  }

  // (part value, multiplicity) pairs, part values descending.
  std::vector<std::pair<int, int>> multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < parts_.size();) {
      size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      out.emplace_back(parts_[i], static_cast<int>(j - i));
      i = j;
    }
    return out;
  }

  bool is_strict() const {
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
      if (parts_[i] == parts_[i + 1]) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition();
    out.resize(parts_[0]);
    for (int p : parts_)
      for (int i = 0; i < p; ++i) out[i]++;
    return Partition(std::move(out));
  }

  // Multiset containment: r_m(*this) <= r_m(other) for all m.
  bool contained_in(const Partition& other) const {
    auto a = multiplicities(), b = other.multiplicities();
    size_t j = 0;
    for (auto& [m, r] : a) {
      while (j < b.size() && b[j].first > m) ++j;
      if (j >= b.size() || b[j].first != m || b[j].second < r) return false;
    }
    return true;
  }

  Partition multiset_union(const Partition& other) const {
    std::vector<int> out = parts_;
    out.insert(out.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(out));
  }

  // Multiset difference; precondition other ⊆ *this.
  Partition multiset_minus(const Partition& other) const {
    std::vector<int> out = parts_;
    for (int p : other.parts_) {
      auto it = std::find(out.begin(), out.end(), p);
      if (it == out.end()) throw std::invalid_argument("multiset_minus: not contained");
      out.erase(it);
    }
    return Partition(std::move(out));
  }

  // Rendering: comma-separated parts, empty partition as "[]".
  std::string to_string() const {
    if (parts_.empty()) return "[]";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  static Partition parse(const std::string& text) {
    if (text.empty() || text == "[]") return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
      size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      parts.push_back(std::stoi(text.substr(pos, next - pos)));
      pos = next + 1;
    }
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
};

struct PartitionHash {
  size_t operator()(const Partition& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.parts()) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Streams all partitions of n in reverse lexicographic order (largest part
// first), calling visit(parts) with parts weakly decreasing. The buffer is
// reused between calls.
template <typename Visitor>
void for_each_partition(int n, Visitor&& visit) {
  if (n < 0) return;
  std::vector<int> parts;
  if (n == 0) {
    visit(std::as_const(parts));
    return;
  }
  parts.push_back(n);
  while (true) {
    visit(std::as_const(parts));
    // Find the last part > 1, decrement it, and redistribute the remainder
    // greedily; this yields the next partition in reverse lex order.
    int rest = 0;
    while (!parts.empty() && parts.back() == 1) {
      rest += 1;
      parts.pop_back();
    }
    if (parts.empty()) return;
    parts.back() -= 1;
    rest += 1;
    int cap = parts.back();
    while (rest > 0) {
      int take = std::min(rest, cap);
      parts.push_back(take);
      rest -= take;
    }
  }
}

inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    out.push_back(Partition(parts));
  });
  return out;
}

// Moebius function of the partition poset at (empty, lambda):
// (-1)^length for strict partitions, 0 otherwise.
inline int moebius_partition(const Partition& lambda) {
  if (!lambda.is_strict()) return 0;
  return (lambda.length() % 2 == 0) ? 1 : -1;
}

// Moebius function of the sub-multiset order: mu(kappa, lambda) depends only
// on the multiset difference.
inline int moebius_partition_pair(const Partition& kappa, const Partition& lambda) {
  if (!kappa.contained_in(lambda)) return 0;
  return moebius_partition(lambda.multiset_minus(kappa));
}

// All sub-partitions gamma <= lambda in the multiset order.
inline std::vector<Partition> sub_partitions(const Partition& lambda) {
  auto mults = lambda.multiplicities();
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == mults.size()) {
      out.push_back(Partition(current));
      return;
    }
    auto [m, r] = mults[i];
    for (int take = 0; take <= r; ++take) {
      for (int t = 0; t < take; ++t) current.push_back(m);
      rec(i + 1);
      for (int t = 0; t < take; ++t) current.pop_back();
    }
  };
  rec(0);
  return out;
}

// Streams every triple (alpha, beta, gamma) of sub-multisets with
// alpha ∪ beta ∪ gamma = lambda and gamma strict. Splits multiplicities per
// distinct part value; triples are never materialized as a whole.
template <typename Visitor>
void for_each_decomposition3(const Partition& lambda, Visitor&& visit) {
  auto mults = lambda.multiplicities();
  std::vector<int> a_parts, b_parts, c_parts;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == mults.size()) {
      visit(Partition(a_parts), Partition(b_parts), Partition(c_parts));
      return;
    }
    auto [m, r] = mults[i];
    for (int c = 0; c <= std::min(1, r); ++c) {
      if (c) c_parts.push_back(m);
      for (int a = 0; a + c <= r; ++a) {
        int b = r - c - a;
        for (int t = 0; t < a; ++t) a_parts.push_back(m);
        for (int t = 0; t < b; ++t) b_parts.push_back(m);
        rec(i + 1);
        for (int t = 0; t < a; ++t) a_parts.pop_back();
        for (int t = 0; t < b; ++t) b_parts.pop_back();
      }
      if (c) c_parts.pop_back();
    }
  };
  rec(0);
}

inline std::vector<std::array<Partition, 3>> decompose3(const Partition& lambda) {
  std::vector<std::array<Partition, 3>> out;
  for_each_decomposition3(lambda,
                          [&](Partition a, Partition b, Partition c) {
                            out.push_back({std::move(a), std::move(b), std::move(c)});
                          });
  return out;
}

}  // namespace qbl
