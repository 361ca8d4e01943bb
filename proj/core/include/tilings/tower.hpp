#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tilings/dynamics.hpp"
#include "tilings/lines.hpp"
#include "tilings/rng.hpp"

namespace tilings::tower {

using dynamics::TowerParams;
using dynamics::TowerState;

// Colour classes of the tower dominoes. The two blue classes carry the
// alpha / alpha-tilde weights, green carries beta; the rest have weight one.
// Black dominoes form the background and are hidden in renderings.
enum class DominoClass { kBlueAlpha, kBlueAlphaTilde, kGreen, kYellow, kRed, kBlack };

struct TowerDomino {
  int col = 0;  // 1..3N, cycling through the z|y|x sub-columns
  int h = 0;
  DominoClass cls = DominoClass::kBlack;

  bool operator==(const TowerDomino& o) const {
    return col == o.col && h == o.h && cls == o.cls;
  }
  bool operator<(const TowerDomino& o) const {
    if (col != o.col) return col < o.col;
    if (h != o.h) return h < o.h;
    return cls < o.cls;
  }
};

// Static description of the tower region and its dual graph.
struct TowerGraph {
  int size = 0;
  std::vector<int> blocs_per_column;  // N, N+1, ..., 2N-1
  long long hexagons = 0;             // (3N-1)N/2
  long long squares = 0;              // two per basic bloc
  int height_lo = 0, height_hi = 0;   // slot window per column

  bool dual_bipartite() const;
  bool dual_connected() const;
  long long dual_vertex_count() const;
};

TowerGraph build_tower(int N);

// A tiling of the tower, stored combinatorially: the interlacing arrays are
// the canonical content, the typed dominoes are derived from the induced
// path ensemble. Drawing coordinates exist only at render time.
class TowerMatching {
 public:
  TowerMatching() = default;

  static TowerMatching from_state(const TowerState& s);
  static TowerMatching initial() { return TowerMatching(); }  // size 0

  int size() const { return state_.depth(); }
  const TowerState& state() const { return state_; }
  const std::vector<TowerDomino>& dominoes() const { return dominoes_; }

  Rational weight(const TowerParams& params) const;

  bool operator==(const TowerMatching& o) const { return state_ == o.state_; }
  bool operator<(const TowerMatching& o) const { return state_ < o.state_; }

  // Every slot of the region is covered exactly once.
  void check_matching() const;

 private:
  TowerState state_;
  std::vector<TowerDomino> dominoes_;
};

// Vacancy pieces found by the growth-step decomposition, by shape.
struct PieceStats {
  long long basic_bloc = 0;        // one free middle particle, two dependents
  long long hex_square_above = 0;  // free middle with the upper dependent only
  long long hex_square_below = 0;  // free middle with the lower dependent only
  long long hexagon = 0;           // isolated free middle particle
  long long square = 0;            // isolated free top particle
  long long chain = 0;             // longer linked runs
};

// One growth step: deterministic slides, vacancy decomposition into pieces,
// independent weighted fills piece by piece.
TowerMatching tower_shuffle_step(const TowerMatching& m, const TowerParams& params,
                                 const CounterRng& rng, PieceStats* stats = nullptr);

TowerMatching sample_tower(int N, const TowerParams& params, std::uint64_t seed);

LineEnsemble tower_to_lines(const TowerMatching& m);
TowerMatching lines_to_tower(const LineEnsemble& lines);

// Product of the edge weights along the induced path ensemble.
Rational tower_static_weight(const TowerState& s, const TowerParams& params);

// Determinantal weight of the extended configuration; proportional to the
// product of domino weights (the constant is never fixed, only ratios are
// meaningful).
Rational tower_measure_weight(const TowerState& s, const TowerParams& params);

}  // namespace tilings::tower
