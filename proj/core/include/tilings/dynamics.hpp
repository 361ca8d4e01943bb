#pragma once

#include <functional>
#include <vector>

#include "tilings/lines.hpp"
#include "tilings/rng.hpp"
#include "tilings/weyl.hpp"

namespace tilings::dynamics {

// Per-level, per-tau jump probability. tau counts the activations of a level:
// level n makes its first move during the step from time n-1 to n (tau = 0).
class Schedule {
 public:
  static Schedule frozen();
  // constant p once active
  static Schedule constant(const Rational& p);
  // p = a^2/(1+a^2) once active: the schedule generating the domino measure
  static Schedule aztec(const Rational& a);
  static Schedule custom(std::function<Rational(int level, long long tau)> fn);

  Rational jump_probability(int level, long long tau) const;

 private:
  std::function<Rational(int, long long)> fn_;
};

// One step of the level-by-level update: levels are refreshed bottom to top
// and each level is conditioned on the already-updated level below it.
GtPattern sequential_step(const GtPattern& state, const Rational& p, const CounterRng& rng,
                          long long t);

// One step of the simultaneous update: every level is conditioned on the
// previous-time value of the level below it.
WeakGtPattern parallel_step(const WeakGtPattern& state, const Rational& p,
                            const CounterRng& rng, long long t);

// Parallel update carrying the previous-time levels along: (X, Y) with
// y^{k+1}(t+1) = x^k(t). This is the chain whose fixed-time snapshots are the
// growth states of the domino shuffling.
struct ExtendedState {
  std::vector<WeylConfig> x;  // x[k-1] = level k, size k, k = 1..depth
  std::vector<WeylConfig> y;  // y[k-2] = level k, size k-1, k = 2..depth
  long long t = 0;
  long long tau0 = 0;  // schedule origin shift

  static ExtendedState packed(int depth);
  int depth() const { return int(x.size()); }
  const WeylConfig& x_level(int k) const { return x[std::size_t(k - 1)]; }
  const WeylConfig& y_level(int k) const { return y[std::size_t(k - 2)]; }

  bool operator==(const ExtendedState& o) const { return x == o.x && y == o.y; }
  bool operator<(const ExtendedState& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }

  void validate() const;
};

ExtendedState extended_parallel_step(const ExtendedState& state, const Schedule& schedule,
                                     const CounterRng& rng);

// Node heights of the extended state: x-levels at odd node times, y-levels at
// even ones, flat continuation below the active levels.
LineEnsemble particles_to_lines(const ExtendedState& state);
ExtendedState lines_to_particles(const LineEnsemble& lines);

enum class TasepEdge { kSequential, kParallel };

// Projection to the exclusion-process particles: leftmost of each level for
// the sequential chain, diagonal for the parallel one.
std::vector<std::vector<int>> tasep_heights(const std::vector<std::vector<WeylConfig>>& levels_per_time,
                                            TasepEdge which);

// Interlacing triple per column: z (copies), y, x. Column n holds sizes
// 2n-2, 2n-1, 2n; z of column 1 is empty.
struct TowerState {
  std::vector<WeylConfig> x;  // x[n-1]: size 2n
  std::vector<WeylConfig> y;  // y[n-1]: size 2n-1
  std::vector<WeylConfig> z;  // z[n-1]: size 2n-2 (empty for n = 1)
  long long t = 0;

  static TowerState packed(int depth);
  int depth() const { return int(x.size()); }

  bool operator==(const TowerState& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator<(const TowerState& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }

  void validate() const;
};

struct TowerParams {
  Rational alpha;   // weight of rises entering y columns
  Rational alpha2;  // weight of rises entering x columns
  Rational beta;    // weight of unit falls after x columns
};

// One step of the tower chain: z copies the previous lower x, y and x perform
// conditioned jumps (y against the new z, x against the new y).
TowerState tower_step(const TowerState& state, const TowerParams& params, const CounterRng& rng);

LineEnsemble tower_particles_to_lines(const TowerState& state);
TowerState tower_lines_to_particles(const LineEnsemble& lines);

}  // namespace tilings::dynamics
