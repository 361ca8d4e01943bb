#include "tilings/aztec.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tilings/dynamics.hpp"

namespace tilings::aztec {

bool cell_in_diamond(int m, int n, int N) {
  auto span = [](int v) { return v >= 0 ? v + 1 : -v; };
  return span(m) + span(n) <= N + 1;
}

int checker_color(int m, int n, int N) {
  int c = (m + n + N) % 2;
  return c < 0 ? c + 2 : c;
}

DominoType classify_domino(int m, int n, bool vertical, int N) {
  int c = checker_color(m, n, N);
  if (vertical) return c == 0 ? DominoType::kEast : DominoType::kWest;
  return c == 0 ? DominoType::kNorth : DominoType::kSouth;
}

namespace {

// Inclusive m-range of the diamond row at height n.
std::pair<int, int> row_range(int n, int N) {
  auto span = [](int v) { return v >= 0 ? v + 1 : -v; };
  int width = N + 1 - span(n);
  return {-width, width - 1};
}

struct CellGrid {
  int S;  // diamond order
  std::vector<int> owner;  // domino index per cell, -1 empty

  explicit CellGrid(int size) : S(size), owner(std::size_t(4 * (size + 1) * (size + 1)), -1) {}
  int idx(int m, int n) const {
    int w = 2 * (S + 1);
    return (m + S + 1) + (n + S + 1) * w;
  }
  bool inside(int m, int n) const { return cell_in_diamond(m, n, S); }
  int get(int m, int n) const { return owner[std::size_t(idx(m, n))]; }
  void put(int m, int n, int v) { owner[std::size_t(idx(m, n))] = v; }
};

CellGrid build_grid(int size, const std::vector<Domino>& ds) {
  CellGrid g(size);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto& d = ds[i];
    int m2 = d.vertical ? d.m : d.m + 1;
    int n2 = d.vertical ? d.n + 1 : d.n;
    TILINGS_REQUIRE(g.inside(d.m, d.n) && g.inside(m2, n2), ContractError,
                    "domino outside the diamond");
    TILINGS_REQUIRE(g.get(d.m, d.n) < 0 && g.get(m2, n2) < 0, ContractError,
                    "overlapping dominoes");
    g.put(d.m, d.n, int(i));
    g.put(m2, n2, int(i));
  }
  return g;
}

}  // namespace

AztecTiling::AztecTiling(int size, std::vector<Domino> dominoes)
    : size_(size), dominoes_(std::move(dominoes)) {
  std::sort(dominoes_.begin(), dominoes_.end());
  validate();
}

void AztecTiling::validate() const {
  TILINGS_REQUIRE(int(dominoes_.size()) == size_ * (size_ + 1), ContractError,
                  "a tiling of the order-N diamond has N(N+1) dominoes");
  CellGrid g = build_grid(size_, dominoes_);
  for (int n = -size_; n <= size_ - 1; ++n) {
    auto [lo, hi] = row_range(n, size_);
    for (int m = lo; m <= hi; ++m)
      TILINGS_REQUIRE(g.get(m, n) >= 0, ContractError, "uncovered cell in the diamond");
  }
  for (const auto& d : dominoes_)
    TILINGS_REQUIRE(classify_domino(d.m, d.n, d.vertical, size_) == d.type, ContractError,
                    "stored type contradicts the colour convention");
}

AztecTiling AztecTiling::all_horizontal(int N) {
  std::vector<Domino> ds;
  for (int n = -N; n <= N - 1; ++n) {
    auto [lo, hi] = row_range(n, N);
    for (int m = lo; m <= hi; m += 2)
      ds.push_back({m, n, false, classify_domino(m, n, false, N)});
  }
  return AztecTiling(N, std::move(ds));
}

int AztecTiling::vertical_count() const {
  int v = 0;
  for (const auto& d : dominoes_)
    if (d.vertical) ++v;
  return v;
}

Rational tiling_weight(const AztecTiling& t, const Rational& a) {
  return pow_rational(a, t.vertical_count());
}

namespace {

struct SlideResult {
  int new_size = 0;
  std::vector<Domino> kept;
  std::vector<std::pair<int, int>> blocks;  // anchors of the vacant 2x2 blocks
  int annihilated_pairs = 0;
};

SlideResult slide_and_find_blocks(const AztecTiling& t) {
  const int S = t.size();
  SlideResult r;
  r.new_size = S + 1;

  // pairs whose trajectories swap are removed before sliding
  std::set<std::pair<int, int>> horiz, vert;
  for (const auto& d : t.dominoes())
    (d.vertical ? vert : horiz).insert({d.m, d.n});
  std::set<std::pair<int, int>> dead_h, dead_v;
  for (const auto& d : t.dominoes()) {
    if (!d.vertical && d.type == DominoType::kNorth && horiz.count({d.m, d.n + 1})) {
      Domino up{d.m, d.n + 1, false, classify_domino(d.m, d.n + 1, false, S)};
      if (up.type == DominoType::kSouth) {
        dead_h.insert({d.m, d.n});
        dead_h.insert({d.m, d.n + 1});
        ++r.annihilated_pairs;
      }
    }
    if (d.vertical && d.type == DominoType::kEast && vert.count({d.m + 1, d.n})) {
      Domino right{d.m + 1, d.n, true, classify_domino(d.m + 1, d.n, true, S)};
      if (right.type == DominoType::kWest) {
        dead_v.insert({d.m, d.n});
        dead_v.insert({d.m + 1, d.n});
        ++r.annihilated_pairs;
      }
    }
  }

  for (const auto& d : t.dominoes()) {
    if (!d.vertical && dead_h.count({d.m, d.n})) continue;
    if (d.vertical && dead_v.count({d.m, d.n})) continue;
    Domino s = d;
    switch (d.type) {
      case DominoType::kNorth: s.n += 1; break;
      case DominoType::kSouth: s.n -= 1; break;
      case DominoType::kEast: s.m += 1; break;
      case DominoType::kWest: s.m -= 1; break;
    }
    // types are preserved by the step together with the colour convention
    TILINGS_ASSERT(classify_domino(s.m, s.n, s.vertical, S + 1) == d.type,
                   "slide must preserve the type under the recoloured board");
    r.kept.push_back(s);
  }

  CellGrid g = build_grid(S + 1, r.kept);
  for (int n = -(S + 1); n <= S; ++n) {
    auto [lo, hi] = row_range(n, S + 1);
    for (int m = lo; m <= hi; ++m) {
      if (g.get(m, n) >= 0) continue;
      TILINGS_ASSERT(g.inside(m + 1, n) && g.inside(m, n + 1) && g.inside(m + 1, n + 1) &&
                         g.get(m + 1, n) < 0 && g.get(m, n + 1) < 0 && g.get(m + 1, n + 1) < 0,
                     "vacancy must decompose into 2x2 blocks");
      int fake = int(r.kept.size()) + int(r.blocks.size());
      g.put(m, n, fake);
      g.put(m + 1, n, fake);
      g.put(m, n + 1, fake);
      g.put(m + 1, n + 1, fake);
      r.blocks.emplace_back(m, n);
    }
  }
  TILINGS_ASSERT(int(r.blocks.size()) == (S + 1) + r.annihilated_pairs,
                 "block count must match growth plus annihilations");
  return r;
}

template <typename FillVertical>
AztecTiling finish_fill(SlideResult&& r, FillVertical&& vertical_at) {
  const int S1 = r.new_size;
  std::vector<Domino> ds = std::move(r.kept);
  for (const auto& [m, n] : r.blocks) {
    if (vertical_at(m, n)) {
      ds.push_back({m, n, true, classify_domino(m, n, true, S1)});
      ds.push_back({m + 1, n, true, classify_domino(m + 1, n, true, S1)});
    } else {
      ds.push_back({m, n, false, classify_domino(m, n, false, S1)});
      ds.push_back({m, n + 1, false, classify_domino(m, n + 1, false, S1)});
    }
  }
  return AztecTiling(S1, std::move(ds));
}

}  // namespace

AztecTiling shuffle_step(const AztecTiling& t, const Rational& a, const CounterRng& rng) {
  TILINGS_REQUIRE(a >= 0, ParameterError, "weight a must be nonnegative");
  const Rational p_vertical = a * a / (1 + a * a);
  auto r = slide_and_find_blocks(t);
  const std::uint64_t step = std::uint64_t(t.size());
  return finish_fill(std::move(r), [&](int m, int n) {
    auto s = rng.stream(rng_tag::kShuffleFill, step, std::uint64_t(std::int64_t(m) + (1 << 20)),
                        std::uint64_t(std::int64_t(n) + (1 << 20)));
    return s.bernoulli(p_vertical);
  });
}

AztecTiling sample_aztec(int N, const Rational& a, std::uint64_t seed) {
  TILINGS_REQUIRE(N >= 1, ContractError, "diamond order must be positive");
  TILINGS_REQUIRE(a > 0, ParameterError, "weight a must be positive");
  CounterRng rng(seed);
  AztecTiling t = AztecTiling::empty();
  for (int s = 0; s < N; ++s) t = shuffle_step(t, a, rng);
  return t;
}

int rise_column(const Domino& d, int N) {
  TILINGS_REQUIRE(d.vertical && d.type == DominoType::kWest, ContractError,
                  "rise_column expects a left-sliding vertical domino");
  int num = d.m - d.n + N + 1;
  TILINGS_ASSERT(num % 2 == 0, "rise diagonal has the wrong parity");
  return num / 2;
}

int fall_column(const Domino& d, int N) {
  TILINGS_REQUIRE(d.vertical && d.type == DominoType::kEast, ContractError,
                  "fall_column expects a right-sliding vertical domino");
  int num = d.m - d.n + N;
  TILINGS_ASSERT(num % 2 == 0, "fall diagonal has the wrong parity");
  return num / 2;
}

LineEnsemble tiling_to_lines(const AztecTiling& t) {
  const int N = t.size();
  CellGrid g = build_grid(N, t.dominoes());
  LineEnsemble L(N, 2 * N + 1);
  for (int j = 1; j <= N; ++j) {
    // rises and falls collected per column along the walk
    std::vector<int> rise(std::size_t(N + 1), 0), fall(std::size_t(N + 1), 0);
    int m = -(N + 1 - j);
    int n = -j;
    while (g.inside(m, n)) {
      int di = g.get(m, n);
      TILINGS_ASSERT(di >= 0 && di < int(t.dominoes().size()), "walk fell off the tiling");
      const Domino& d = t.dominoes()[std::size_t(di)];
      if (!d.vertical) {
        if (d.type != DominoType::kSouth || d.m != m || d.n != n)
          throw BijectionError("path entered a horizontal domino it cannot traverse");
        int col = (d.m - d.n + N + 1) / 2;
        TILINGS_ASSERT((d.m - d.n + N + 1) % 2 == 0 && col >= 1 && col <= N,
                       "flat step outside the column range");
        m += 2;
      } else if (d.type == DominoType::kWest) {
        if (d.m != m || d.n != n)
          throw BijectionError("path entered a rise domino away from its start");
        rise[std::size_t(rise_column(d, N))] += 1;
        m += 1;
        n += 1;
      } else {  // East
        if (d.m != m || d.n != n - 1)
          throw BijectionError("path entered a fall domino away from its start");
        fall[std::size_t(fall_column(d, N))] += 1;
        m += 1;
        n -= 1;
      }
    }
    if (m != N + 2 - j || n != -j)
      throw BijectionError("path exited the diamond at the wrong point");
    int h = -j;
    for (int k = 1; k <= N; ++k) {
      h += rise[std::size_t(k)];
      L.set_height(j - 1, 2 * k - 1, h);
      TILINGS_ASSERT(fall[std::size_t(k)] <= 1, "at most one fall per column per path");
      h -= fall[std::size_t(k)];
      if (k < N) L.set_height(j - 1, 2 * k, h);
    }
    if (h != -j) throw BijectionError("path fails to return to its boundary height");
  }
  L.check_boundary_and_order();
  return L;
}

AztecTiling lines_to_tiling(const LineEnsemble& lines) {
  const int N = lines.num_paths();
  TILINGS_REQUIRE(lines.num_times() == 2 * N + 1, ContractError,
                  "line ensemble has the wrong number of node times");
  lines.check_boundary_and_order();
  std::vector<Domino> ds;
  for (int j = 1; j <= N; ++j) {
    for (int k = 1; k < j; ++k) {
      if (lines.height(j - 1, 2 * k - 1) != -j || (k < N && lines.height(j - 1, 2 * k) != -j))
        throw BijectionError("path must stay flat left of its first column");
    }
    for (int k = j; k <= N; ++k) {
      int h_before = lines.height(j - 1, 2 * k - 2);
      int h_top = lines.height(j - 1, 2 * k - 1);
      int h_after = lines.height(j - 1, 2 * k);
      int w = h_top - h_before;
      int e = h_top - h_after;
      if (w < 0 || (e != 0 && e != 1)) throw BijectionError("heights violate the step rules");
      const int d_odd = 2 * k - N - 1;
      const int d_even = 2 * k - N;
      for (int i = 0; i < w; ++i) {
        int n = h_before + i;
        ds.push_back({d_odd + n, n, true, DominoType::kWest});
      }
      if (e == 1) {
        int n = h_after;
        ds.push_back({d_even + n, n, true, DominoType::kEast});
      } else {
        int n = h_top;
        ds.push_back({d_odd + n, n, false, DominoType::kSouth});
      }
    }
  }
  // the complement of the paths is tiled by the other horizontal class
  CellGrid g(N);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    auto& d = ds[i];
    d.type = classify_domino(d.m, d.n, d.vertical, N);
    int m2 = d.vertical ? d.m : d.m + 1;
    int n2 = d.vertical ? d.n + 1 : d.n;
    if (!g.inside(d.m, d.n) || !g.inside(m2, n2) || g.get(d.m, d.n) >= 0 || g.get(m2, n2) >= 0)
      throw BijectionError("reconstructed path dominoes collide");
    g.put(d.m, d.n, int(i));
    g.put(m2, n2, int(i));
  }
  for (int n = -N; n <= N - 1; ++n) {
    auto [lo, hi] = row_range(n, N);
    for (int m = lo; m <= hi; ++m) {
      if (g.get(m, n) >= 0) continue;
      if (!g.inside(m + 1, n) || g.get(m + 1, n) >= 0)
        throw BijectionError("leftover cells do not pair into horizontals");
      DominoType ty = classify_domino(m, n, false, N);
      if (ty != DominoType::kNorth)
        throw BijectionError("leftover pair is not of the non-path class");
      int id = int(ds.size());
      ds.push_back({m, n, false, ty});
      g.put(m, n, id);
      g.put(m + 1, n, id);
    }
  }
  return AztecTiling(N, std::move(ds));
}

long long rank(const AztecTiling& t) {
  LineEnsemble L = tiling_to_lines(t);
  long long r = 0;
  for (int j = 0; j < L.num_paths(); ++j)
    for (int tt = 0; tt < L.num_times(); ++tt) r += L.height(j, tt) + j + 1;
  return r;
}

LineEnsemble line_shuffle_step(const LineEnsemble& lines, const Rational& a,
                               const CounterRng& rng) {
  const int n = lines.num_paths();
  dynamics::ExtendedState s;
  if (n == 0) {
    s = dynamics::ExtendedState::packed(1);
  } else {
    s = dynamics::lines_to_particles(lines);
    // adjoin the next frozen level: it has not moved yet, so its current and
    // previous positions are both packed
    s.x.push_back(WeylConfig::packed(n + 1));
    s.y.push_back(WeylConfig::packed(n));
  }
  s.t = n;
  auto stepped = dynamics::extended_parallel_step(s, dynamics::Schedule::aztec(a), rng);
  return dynamics::particles_to_lines(stepped);
}

Rational domino_position_weight(const Domino& d, int N, const Rational& a, const Rational& q) {
  TILINGS_REQUIRE(a > 0 && q > 0, ParameterError, "weights a, q must be positive");
  if (!d.vertical) return 1;
  if (d.type == DominoType::kWest) {
    long long col = rise_column(d, N);
    return a * a * pow_rational(q, 2 * N - 2 * col + 2);
  }
  long long col = fall_column(d, N);
  return pow_rational(q, -(2 * N - 2 * col + 1));
}

Rational WeightedAztecSampler::Table::get(const std::vector<Rational>& v, int d) const {
  int i = d - lo;
  TILINGS_ASSERT(i >= 0 && i < int(v.size()), "diagonal outside the weight table");
  return v[std::size_t(i)];
}

WeightedAztecSampler::WeightedAztecSampler(int N, const Rational& a, const Rational& q)
    : N_(N), a_(a), q_(q) {
  TILINGS_REQUIRE(N >= 1, ContractError, "target size must be positive");
  TILINGS_REQUIRE(a > 0 && q > 0, ParameterError, "weights a, q must be positive");
  const int lo = -2 * N - 2, hi = 2 * N + 2;
  const int width = hi - lo + 1;
  tables_.assign(std::size_t(N), Table{});
  auto& top = tables_[std::size_t(N - 1)];
  top.lo = lo;
  top.w_west.assign(std::size_t(width), Rational(1));
  top.w_east.assign(std::size_t(width), Rational(1));
  top.w_south.assign(std::size_t(width), Rational(1));
  top.w_north.assign(std::size_t(width), Rational(1));
  for (int d = lo; d <= hi; ++d) {
    if ((d + N + 1) % 2 == 0) {
      long long col = (d + N + 1) / 2;
      top.w_west[std::size_t(d - lo)] = a * a * pow_rational(q, 2 * N - 2 * col + 2);
    }
    if ((d + N) % 2 == 0) {
      long long col = (d + N) / 2;
      top.w_east[std::size_t(d - lo)] = pow_rational(q, -(2 * N - 2 * col + 1));
    }
  }
  // pull the weights back through the growth steps: each position inherits
  // the weight of its slid image, normalized by its image block
  for (int s = N - 1; s >= 1; --s) {
    const Table& up = tables_[std::size_t(s)];
    Table& cur = tables_[std::size_t(s - 1)];
    cur.lo = lo;
    cur.w_west.assign(std::size_t(width), Rational(1));
    cur.w_east.assign(std::size_t(width), Rational(1));
    cur.w_south.assign(std::size_t(width), Rational(1));
    cur.w_north.assign(std::size_t(width), Rational(1));
    auto delta = [&](int d) -> Rational {
      return up.get(up.w_south, d) * up.get(up.w_north, d - 1) +
             up.get(up.w_west, d) * up.get(up.w_east, d + 1);
    };
    for (int d = lo + 2; d <= hi - 2; ++d) {
      cur.w_west[std::size_t(d - lo)] = up.get(up.w_west, d - 1) / delta(d - 1);
      cur.w_east[std::size_t(d - lo)] = up.get(up.w_east, d + 1) / delta(d);
      cur.w_south[std::size_t(d - lo)] = up.get(up.w_south, d + 1) / delta(d + 1);
      cur.w_north[std::size_t(d - lo)] = up.get(up.w_north, d - 1) / delta(d);
    }
  }
}

Rational WeightedAztecSampler::fill_odds(int step, int anchor_diagonal) const {
  TILINGS_REQUIRE(step >= 0 && step < N_, ContractError, "step outside the growth range");
  const Table& tb = table(step + 1);
  const int d = anchor_diagonal;
  Rational vertical = tb.get(tb.w_west, d) * tb.get(tb.w_east, d + 1);
  Rational horizontal = tb.get(tb.w_south, d) * tb.get(tb.w_north, d - 1);
  return vertical / horizontal;
}

AztecTiling WeightedAztecSampler::step(const AztecTiling& t, const CounterRng& rng) const {
  const int s = t.size();
  TILINGS_REQUIRE(s < N_, ContractError, "tiling already at the target size");
  auto r = slide_and_find_blocks(t);
  return finish_fill(std::move(r), [&](int m, int n) {
    Rational odds = fill_odds(s, m - n);
    Rational p = odds / (1 + odds);
    auto st = rng.stream(rng_tag::kShuffleFill, std::uint64_t(s),
                         std::uint64_t(std::int64_t(m) + (1 << 20)),
                         std::uint64_t(std::int64_t(n) + (1 << 20)));
    return st.bernoulli(p);
  });
}

AztecTiling WeightedAztecSampler::sample(std::uint64_t seed) const {
  CounterRng rng(seed);
  AztecTiling t = AztecTiling::empty();
  for (int s = 0; s < N_; ++s) t = step(t, rng);
  return t;
}

AztecTiling weighted_shuffle_step_q(const AztecTiling& t, const Rational& a, const Rational& q,
                                    const CounterRng& rng) {
  WeightedAztecSampler sampler(t.size() + 1, a, q);
  return sampler.step(t, rng);
}

AztecTiling sample_aztec_q(int N, const Rational& a, const Rational& q, std::uint64_t seed) {
  WeightedAztecSampler sampler(N, a, q);
  return sampler.sample(seed);
}

}  // namespace tilings::aztec
