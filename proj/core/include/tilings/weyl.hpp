#pragma once

#include <initializer_list>
#include <vector>

#include "tilings/numeric.hpp"

namespace tilings {

// A point of the Weyl chamber W_n: strictly increasing integer positions.
class WeylConfig {
 public:
  WeylConfig() = default;
  explicit WeylConfig(std::vector<int> positions);
  WeylConfig(std::initializer_list<int> positions)
      : WeylConfig(std::vector<int>(positions)) {}

  int level() const { return int(pos_.size()); }
  const std::vector<int>& positions() const { return pos_; }
  int operator[](int k) const { return pos_[std::size_t(k)]; }  // 0-based

  bool operator==(const WeylConfig& o) const { return pos_ == o.pos_; }
  bool operator<(const WeylConfig& o) const { return pos_ < o.pos_; }

  // Lowest admissible configuration ending at -1: (-n, ..., -1).
  static WeylConfig packed(int n);

 private:
  std::vector<int> pos_;
};

// lower at level n, upper at level n+1. Strict variant: the chained
// inequalities u_1 < l_1 <= u_2 < l_2 <= ... <= u_{n+1}; weak variant allows
// equality throughout.
bool interlaces(const WeylConfig& lower, const WeylConfig& upper, bool strict = true);

// Product of pairwise differences; positive on every valid configuration.
BigInt vandermonde(const WeylConfig& x);

// Number of full interlacing triangular arrays below a given top row.
BigInt count_gt_patterns(const WeylConfig& top);

// Determinantal interlacing indicator: the matrix of step indicators with a
// virtual last variable in the lower row. Evaluates to 1 when lower strictly
// interlaces with upper and to 0 otherwise.
BigInt interlacing_det(const WeylConfig& upper, const WeylConfig& lower);

// All level-(n-1) configurations strictly interlacing below `upper`, in
// lexicographic order.
std::vector<WeylConfig> enumerate_interlacing(const WeylConfig& upper);

// Interlacing triangular array x^1 ≺ x^2 ≺ ... ≺ x^depth.
class GtPattern {
 public:
  GtPattern() = default;
  explicit GtPattern(std::vector<WeylConfig> levels);

  static GtPattern packed(int depth);

  int depth() const { return int(levels_.size()); }
  const WeylConfig& level(int n) const { return levels_[std::size_t(n - 1)]; }  // 1-based
  const std::vector<WeylConfig>& levels() const { return levels_; }

  bool operator==(const GtPattern& o) const { return levels_ == o.levels_; }
  bool operator<(const GtPattern& o) const { return levels_ < o.levels_; }

 private:
  std::vector<WeylConfig> levels_;
};

// State space of the parallel-update chain. Consecutive levels satisfy the
// one-step-reachable relaxation of strict interlacing:
//   x^k_j < x^{k-1}_j   and   x^k_{j+1} >= x^{k-1}_j - 1,
// i.e. exactly the states from which a strictly interlacing configuration is
// reachable with upward unit jumps.
class WeakGtPattern {
 public:
  WeakGtPattern() = default;
  explicit WeakGtPattern(std::vector<WeylConfig> levels);

  static WeakGtPattern packed(int depth);

  int depth() const { return int(levels_.size()); }
  const WeylConfig& level(int n) const { return levels_[std::size_t(n - 1)]; }
  const std::vector<WeylConfig>& levels() const { return levels_; }

  bool operator==(const WeakGtPattern& o) const { return levels_ == o.levels_; }
  bool operator<(const WeakGtPattern& o) const { return levels_ < o.levels_; }

 private:
  std::vector<WeylConfig> levels_;
};

// One-step-reachability relation used by WeakGtPattern.
bool weakly_reachable(const WeylConfig& lower, const WeylConfig& upper);

// All strictly increasing n-tuples with positions inside [lo, hi].
std::vector<WeylConfig> enumerate_chamber(int n, int lo, int hi);

// All GT patterns below the given top row (depth = top.level()).
std::vector<GtPattern> enumerate_patterns_below(const WeylConfig& top);

}  // namespace tilings
