#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "tilings/symbol.hpp"
#include "tilings/weyl.hpp"

namespace tilings::kernels {

// One-particle walk: jump +1 with probability p, stay otherwise.
Symbol one_particle_kernel(const Rational& p);
Rational one_particle_entry(const Rational& p, int x, int y);

// t-step transition probability of the one-particle walk from 0 to x.
Rational binomial_pt(long long t, long long x, const Rational& p);

// n-particle walk conditioned to stay strictly ordered (harmonic transform
// by the Vandermonde determinant).
Rational level_kernel(const Rational& p, const WeylConfig& x, const WeylConfig& y);

// Stochastic link from level n to level n-1 inducing the uniform measure on
// patterns with a fixed top row.
Rational markov_link(const WeylConfig& x, const WeylConfig& y);

// Laurent coefficient f(m) of a supported symbol.
Rational laurent_coeff(const Symbol& F, long long m);

// Translation-invariant kernels with geometric weights a_1..a_n and symbol F.
Rational toeplitz_same_level(const std::vector<Rational>& a, const Symbol& F,
                             const WeylConfig& x, const WeylConfig& y);
// Level n -> n-1 variant; the virtual lower variable contributes a_n^x.
Rational toeplitz_level_down(const std::vector<Rational>& a, const Symbol& F,
                             const WeylConfig& x, const WeylConfig& y);

// Level kernel with per-particle geometric weights alpha_1..alpha_n and jump
// weight beta; frozen (identity) for tau < 0. Equal alphas reduce to
// level_kernel with p = alpha*beta/(1+alpha*beta).
Rational generalized_level_kernel(const std::vector<Rational>& alpha, const Rational& beta,
                                  long long tau, const WeylConfig& x, const WeylConfig& y);

// Link from level n to n-1 with geometric weights; equal alphas reduce to
// markov_link.
Rational generalized_markov_link(const std::vector<Rational>& alpha, const WeylConfig& x,
                                 const WeylConfig& y);

// Maximum absolute difference between the two routes P_n Lambda and
// Lambda P_{n-1} over all sources/targets whose supports fit the window.
Rational intertwine_defect(int n, const Rational& p, int window_lo, int window_hi);

// A materialized finite window of a kernel, with exact rational entries.
class KernelTable {
 public:
  using RowFn = std::function<Rational(const WeylConfig&, const WeylConfig&)>;

  KernelTable(int source_level, int target_level, int window_lo, int window_hi,
              const RowFn& fn);

  int source_level() const { return source_level_; }
  int target_level() const { return target_level_; }
  int window_lo() const { return window_lo_; }
  int window_hi() const { return window_hi_; }

  Rational entry(const WeylConfig& x, const WeylConfig& y) const;
  Rational row_sum(const WeylConfig& x) const;
  const std::vector<WeylConfig>& sources() const { return sources_; }
  const std::vector<WeylConfig>& targets() const { return targets_; }

  // True when every row sums to one and all entries are nonnegative.
  bool stochastic() const;

 private:
  int source_level_, target_level_, window_lo_, window_hi_;
  std::vector<WeylConfig> sources_, targets_;
  std::map<std::pair<WeylConfig, WeylConfig>, Rational> entries_;
};

// Exact determinant of a rational matrix.
Rational det_rational(std::vector<std::vector<Rational>> m);

}  // namespace tilings::kernels
