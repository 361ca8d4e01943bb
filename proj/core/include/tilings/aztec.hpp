#pragma once

#include <cstdint>
#include <vector>

#include "tilings/lines.hpp"
#include "tilings/rng.hpp"

namespace tilings::aztec {

// Named after the direction the domino slides in one growth step.
enum class DominoType { kNorth, kEast, kSouth, kWest };

struct Domino {
  int m = 0, n = 0;       // anchor cell: left cell (horizontal) or bottom cell (vertical)
  bool vertical = false;
  DominoType type = DominoType::kNorth;

  bool operator==(const Domino& o) const {
    return m == o.m && n == o.n && vertical == o.vertical && type == o.type;
  }
  bool operator<(const Domino& o) const {
    if (n != o.n) return n < o.n;
    if (m != o.m) return m < o.m;
    return vertical < o.vertical;
  }
};

// Unit cell [m,m+1]x[n,n+1] lies inside the order-N diamond.
bool cell_in_diamond(int m, int n, int N);
// Checkerboard colour; the convention is tied to the diamond order so that it
// is preserved by the growth step.
int checker_color(int m, int n, int N);
// Type from orientation and colour; matches the geometric rule (the topmost
// horizontal is a North, the leftmost vertical is a West).
DominoType classify_domino(int m, int n, bool vertical, int N);

class AztecTiling {
 public:
  AztecTiling() = default;
  AztecTiling(int size, std::vector<Domino> dominoes);

  static AztecTiling empty() { return AztecTiling(0, {}); }
  static AztecTiling all_horizontal(int N);

  int size() const { return size_; }
  const std::vector<Domino>& dominoes() const { return dominoes_; }
  int vertical_count() const;

  bool operator==(const AztecTiling& o) const {
    return size_ == o.size_ && dominoes_ == o.dominoes_;
  }
  bool operator<(const AztecTiling& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    return dominoes_ < o.dominoes_;
  }

  // Exact cover of the diamond cells and type consistency.
  void validate() const;

 private:
  int size_ = 0;
  std::vector<Domino> dominoes_;  // kept sorted for canonical hashing
};

// One growth step: slide by type, remove swapping pairs, fill every vacant
// 2x2 block with a vertical pair with probability a^2/(1+a^2).
AztecTiling shuffle_step(const AztecTiling& t, const Rational& a, const CounterRng& rng);

// N iterated growth steps from the empty tiling.
AztecTiling sample_aztec(int N, const Rational& a, std::uint64_t seed);

Rational tiling_weight(const AztecTiling& t, const Rational& a);

// Non-intersecting path representation: flat steps through the horizontal
// dominoes of one colour class, rises through the left-sliding verticals,
// unit falls through the right-sliding ones.
LineEnsemble tiling_to_lines(const AztecTiling& t);
AztecTiling lines_to_tiling(const LineEnsemble& lines);

// Area between the path ensemble and the flat reference, summed over node
// times; equals the minimal number of elementary 2x2 rotations from the
// all-horizontal tiling.
long long rank(const AztecTiling& t);

// Column of the rise/fall carried by a vertical domino, between 1 and N.
int rise_column(const Domino& d, int N);
int fall_column(const Domino& d, int N);

// Growth step acting directly on the path ensemble; same law as conjugating
// shuffle_step through the bijection.
LineEnsemble line_shuffle_step(const LineEnsemble& lines, const Rational& a,
                               const CounterRng& rng);

// Position weight of a domino in the rank-weighted model: column-dependent
// geometric weights on rises and falls, 1 on horizontals.
Rational domino_position_weight(const Domino& d, int N, const Rational& a, const Rational& q);

// Sampler for the measure proportional to the product of position weights
// (equivalently a^{verticals} q^{rank}). Fill odds follow the local weights,
// which are pulled back through the growth steps by block renewal.
class WeightedAztecSampler {
 public:
  WeightedAztecSampler(int N, const Rational& a, const Rational& q);

  AztecTiling sample(std::uint64_t seed) const;
  // One growth step; `t.size()` must be below the target size.
  AztecTiling step(const AztecTiling& t, const CounterRng& rng) const;

  // Odds of a vertical fill at a block anchored on diagonal d = m - n during
  // the step that produces the size (s+1) diamond.
  Rational fill_odds(int step, int anchor_diagonal) const;

  int target_size() const { return N_; }

 private:
  int N_;
  Rational a_, q_;
  // weight tables per size s = 1..N, indexed by type and anchor diagonal
  struct Table {
    int lo = 0;
    std::vector<Rational> w_west, w_east, w_south, w_north;
    Rational get(const std::vector<Rational>& v, int d) const;
  };
  std::vector<Table> tables_;  // tables_[s-1] = weights on the size-s diamond

  const Table& table(int s) const { return tables_[std::size_t(s - 1)]; }
};

// One growth step of the rank-weighted model targeting size t.size()+1.
AztecTiling weighted_shuffle_step_q(const AztecTiling& t, const Rational& a, const Rational& q,
                                    const CounterRng& rng);

// N iterated weighted steps from the empty tiling.
AztecTiling sample_aztec_q(int N, const Rational& a, const Rational& q, std::uint64_t seed);

}  // namespace tilings::aztec
