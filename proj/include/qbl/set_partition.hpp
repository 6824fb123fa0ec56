#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "qbl/numbers.hpp"
#include "qbl/rational.hpp"

namespace qbl {

// Partition of a finite set of integer labels into disjoint nonempty blocks.
// Canonical form: elements sorted within blocks, blocks sorted by minimum.
class SetPartition {
 public:
  SetPartition() = default;
  explicit SetPartition(std::vector<std::vector<int>> blocks)
      : blocks_(std::move(blocks)) {
    for (auto& b : blocks_) {
      if (b.empty()) throw std::invalid_argument("empty block");
      std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::set<int> seen;
    for (auto& b : blocks_)
      for (int x : b)
        if (!seen.insert(x).second)
          throw std::invalid_argument("blocks not disjoint");
  }

  static SetPartition whole(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    return n == 0 ? SetPartition() : SetPartition({all});
  }

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  long length() const { return static_cast<long>(blocks_.size()); }

  std::vector<int> universe() const {
    std::vector<int> u;
    for (auto& b : blocks_) u.insert(u.end(), b.begin(), b.end());
    std::sort(u.begin(), u.end());
    return u;
  }

  // Restriction: nonempty intersections of blocks with Z.
  SetPartition restrict_to(const std::vector<int>& z) const {
    std::set<int> zs(z.begin(), z.end());
    std::vector<std::vector<int>> out;
    for (auto& b : blocks_) {
      std::vector<int> cut;
      for (int x : b)
        if (zs.count(x)) cut.push_back(x);
      if (!cut.empty()) out.push_back(std::move(cut));
    }
    return SetPartition(std::move(out));
  }

  // Refinement order: every block of *this lies inside a block of other.
  bool leq(const SetPartition& other) const {
    for (auto& a : blocks_) {
      bool found = false;
      for (auto& b : other.blocks_) {
        if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ == b.blocks_;
  }
  friend bool operator<(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ < b.blocks_;
  }

 private:
  std::vector<std::vector<int>> blocks_;
};

// All partitions of [n] = {1, ..., n}, via restricted growth strings.
// Count = Bell(n). Guarded: the enumeration is exponential.
inline std::vector<SetPartition> enumerate_set_partitions(int n) {
  if (n < 0 || n > 12)
    throw resource_error("set partition enumeration limited to 0 <= n <= 12");
  std::vector<SetPartition> out;
  if (n == 0) {
    out.push_back(SetPartition());
    return out;
  }
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (i == n) {
      int nb = maxb + 1;
      std::vector<std::vector<int>> blocks(nb);
      for (int j = 0; j < n; ++j) blocks[rgs[j]].push_back(j + 1);
      out.push_back(SetPartition(std::move(blocks)));
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(maxb, b));
    }
  };
  rec(0, -1);
  return out;
}

// mu(alpha, top) = (-1)^{l-1} (l-1)! where l is the number of blocks.
inline Rational moebius_top(const SetPartition& alpha) {
  long l = std::max<long>(alpha.length(), 1);
  Rational v(factorial(l - 1));
  return (l % 2 == 1) ? v : -v;
}

// mu(alpha, beta) for alpha <= beta: product over blocks B of beta of
// mu restricted to the blocks of alpha inside B. Zero if not comparable.
inline Rational moebius_pair(const SetPartition& alpha, const SetPartition& beta) {
  if (!alpha.leq(beta)) return 0;
  Rational out = 1;
  for (auto& b : beta.blocks()) {
    long inside = 0;
    for (auto& a : alpha.blocks())
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) ++inside;
    Rational v(factorial(inside - 1));
    out *= (inside % 2 == 1) ? v : -v;
  }
  return out;
}

}  // namespace qbl
