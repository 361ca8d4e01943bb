#include "tilings/dynamics.hpp"

#include <algorithm>

namespace tilings::dynamics {

Schedule Schedule::frozen() {
  Schedule s;
  s.fn_ = [](int, long long) { return Rational(0); };
  return s;
}

Schedule Schedule::constant(const Rational& p) {
  TILINGS_REQUIRE(p >= 0 && p <= 1, ParameterError, "schedule probability outside [0,1]");
  Schedule s;
  s.fn_ = [p](int, long long tau) { return tau >= 0 ? p : Rational(0); };
  return s;
}

Schedule Schedule::aztec(const Rational& a) {
  TILINGS_REQUIRE(a >= 0, ParameterError, "weight a must be nonnegative");
  Rational p = a * a / (1 + a * a);
  return constant(p);
}

Schedule Schedule::custom(std::function<Rational(int, long long)> fn) {
  Schedule s;
  s.fn_ = std::move(fn);
  return s;
}

Rational Schedule::jump_probability(int level, long long tau) const { return fn_(level, tau); }

namespace {

// Conditioned one-level refresh: each particle attempts a unit jump with
// probability p, suppressed when it would land on the lower-level particle
// with the same index, forced when the previous lower-level particle has
// moved past it. `lower` may be empty (level 1).
std::vector<int> conditioned_level_update(const std::vector<int>& xs,
                                          const std::vector<int>* lower, const Rational& p,
                                          const CounterRng& rng, std::uint64_t tag,
                                          long long t, int level) {
  const int n = int(xs.size());
  std::vector<int> out(xs);
  for (int k = 0; k < n; ++k) {
    bool pushed = false, blocked = false;
    if (lower) {
      if (k >= 1 && (*lower)[std::size_t(k - 1)] == xs[std::size_t(k)] + 1) pushed = true;
      if (k < int(lower->size()) && (*lower)[std::size_t(k)] == xs[std::size_t(k)] + 1)
        blocked = true;
    }
    TILINGS_ASSERT(!(pushed && blocked), "particle cannot be pushed and blocked at once");
    int jump;
    if (pushed)
      jump = 1;
    else if (blocked)
      jump = 0;
    else
      jump = rng.stream(tag, std::uint64_t(t), std::uint64_t(level), std::uint64_t(k + 1))
                 .bernoulli(p)
                 ? 1
                 : 0;
    out[std::size_t(k)] = xs[std::size_t(k)] + jump;
  }
  return out;
}

}  // namespace

GtPattern sequential_step(const GtPattern& state, const Rational& p, const CounterRng& rng,
                          long long t) {
  const int N = state.depth();
  std::vector<WeylConfig> nl;
  nl.reserve(std::size_t(N));
  for (int n = 1; n <= N; ++n) {
    const std::vector<int>* lower = nullptr;
    std::vector<int> lower_store;
    if (n >= 2) {
      lower_store = nl[std::size_t(n - 2)].positions();  // updated level below
      lower = &lower_store;
    }
    auto np = conditioned_level_update(state.level(n).positions(), lower, p, rng,
                                       rng_tag::kSequential, t, n);
    nl.emplace_back(np);
    if (n >= 2)
      TILINGS_ASSERT(interlaces(nl[std::size_t(n - 2)], nl[std::size_t(n - 1)], true),
                     "sequential update left the interlacing state space");
  }
  return GtPattern(std::move(nl));
}

WeakGtPattern parallel_step(const WeakGtPattern& state, const Rational& p,
                            const CounterRng& rng, long long t) {
  const int N = state.depth();
  std::vector<WeylConfig> nl;
  nl.reserve(std::size_t(N));
  for (int n = 1; n <= N; ++n) {
    const std::vector<int>* lower = nullptr;
    if (n >= 2) lower = &state.level(n - 1).positions();  // previous-time level below
    auto np = conditioned_level_update(state.level(n).positions(), lower, p, rng,
                                       rng_tag::kParallel, t, n);
    nl.emplace_back(np);
  }
  return WeakGtPattern(std::move(nl));
}

ExtendedState ExtendedState::packed(int depth) {
  ExtendedState s;
  for (int k = 1; k <= depth; ++k) s.x.push_back(WeylConfig::packed(k));
  for (int k = 2; k <= depth; ++k) s.y.push_back(WeylConfig::packed(k - 1));
  return s;
}

void ExtendedState::validate() const {
  const int N = depth();
  TILINGS_REQUIRE(int(y.size()) == std::max(0, N - 1), ContractError,
                  "extended state must hold one y-level per x-level above the first");
  for (int k = 1; k <= N; ++k)
    TILINGS_REQUIRE(x_level(k).level() == k, ContractError, "x-level size mismatch");
  for (int k = 2; k <= N; ++k) {
    TILINGS_REQUIRE(y_level(k).level() == k - 1, ContractError, "y-level size mismatch");
    TILINGS_REQUIRE(interlaces(y_level(k), x_level(k), true), ContractError,
                    "y-level must interlace strictly below its x-level");
    for (int i = 0; i < k - 1; ++i) {
      int d = x_level(k - 1)[i] - y_level(k)[i];
      TILINGS_REQUIRE(d == 0 || d == 1, ContractError,
                      "lower x-level must lie within one jump above its y-copy");
    }
    TILINGS_REQUIRE(weakly_reachable(x_level(k - 1), x_level(k)), ContractError,
                    "consecutive x-levels must be one-step reachable");
  }
}

ExtendedState extended_parallel_step(const ExtendedState& state, const Schedule& schedule,
                                     const CounterRng& rng) {
  const int N = state.depth();
  ExtendedState out;
  out.t = state.t + 1;
  out.tau0 = state.tau0;
  out.y.reserve(std::size_t(std::max(0, N - 1)));
  for (int k = 2; k <= N; ++k) out.y.push_back(state.x_level(k - 1));  // deterministic copy
  out.x.reserve(std::size_t(N));
  for (int n = 1; n <= N; ++n) {
    const std::vector<int>* lower = nullptr;
    if (n >= 2) lower = &state.x_level(n - 1).positions();
    Rational p = schedule.jump_probability(n, state.t - n + 1 + state.tau0);
    auto np = conditioned_level_update(state.x_level(n).positions(), lower, p, rng,
                                       rng_tag::kExtended, state.t, n);
    out.x.emplace_back(np);
  }
  for (int k = 2; k <= N; ++k)
    TILINGS_ASSERT(interlaces(out.y_level(k), out.x_level(k), true),
                   "parallel update must keep x strictly above the copied y");
  return out;
}

LineEnsemble particles_to_lines(const ExtendedState& state) {
  state.validate();
  const int N = state.depth();
  LineEnsemble L(N, 2 * N + 1);
  for (int j = 1; j <= N; ++j) {
    for (int k = 1; k <= N; ++k) {
      if (j <= k) L.set_height(j - 1, 2 * k - 1, state.x_level(k)[k - j]);
      if (k <= N - 1 && j <= k) L.set_height(j - 1, 2 * k, state.y_level(k + 1)[k - j]);
    }
  }
  L.check_boundary_and_order();
  // LGV step constraints: nonnegative rises into odd times, unit falls after
  for (int j = 0; j < N; ++j) {
    for (int k = 1; k <= N; ++k) {
      if (L.height(j, 2 * k - 1) < L.height(j, 2 * k - 2))
        throw BijectionError("negative rise in the line ensemble");
      int fall = L.height(j, 2 * k - 1) - L.height(j, 2 * k);
      if (fall != 0 && fall != 1) throw BijectionError("fall must be one unit at most");
    }
  }
  return L;
}

ExtendedState lines_to_particles(const LineEnsemble& lines) {
  const int N = lines.num_paths();
  TILINGS_REQUIRE(lines.num_times() == 2 * N + 1, ContractError,
                  "line ensemble has the wrong number of node times");
  lines.check_boundary_and_order();
  ExtendedState s;
  for (int k = 1; k <= N; ++k) {
    std::vector<int> xs(std::size_t(k));
    for (int j = 1; j <= k; ++j) xs[std::size_t(k - j)] = lines.height(j - 1, 2 * k - 1);
    s.x.emplace_back(xs);
    if (k >= 2) {
      std::vector<int> ys(std::size_t(k - 1));
      for (int j = 1; j <= k - 1; ++j) ys[std::size_t(k - 1 - j)] = lines.height(j - 1, 2 * (k - 1));
      s.y.emplace_back(ys);
    }
  }
  // flat continuation below the arrays must really be flat
  for (int k = 1; k <= N; ++k)
    for (int j = k + 1; j <= N; ++j) {
      if (lines.height(j - 1, 2 * k - 1) != -j)
        throw BijectionError("path below its activation column must stay flat");
      if (k <= N - 1 && lines.height(j - 1, 2 * k) != -j && j >= k + 2)
        throw BijectionError("path below its activation column must stay flat");
    }
  s.validate();
  return s;
}

std::vector<std::vector<int>> tasep_heights(
    const std::vector<std::vector<WeylConfig>>& levels_per_time, TasepEdge which) {
  std::vector<std::vector<int>> out;
  out.reserve(levels_per_time.size());
  for (const auto& levels : levels_per_time) {
    std::vector<int> row;
    row.reserve(levels.size());
    for (std::size_t n = 0; n < levels.size(); ++n) {
      const auto& cfg = levels[n];
      row.push_back(which == TasepEdge::kSequential ? cfg[0] : cfg[int(n)]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

TowerState TowerState::packed(int depth) {
  TowerState s;
  for (int n = 1; n <= depth; ++n) {
    s.x.push_back(WeylConfig::packed(2 * n));
    s.y.push_back(WeylConfig::packed(2 * n - 1));
    s.z.push_back(WeylConfig::packed(2 * n - 2));
  }
  return s;
}

void TowerState::validate() const {
  const int N = depth();
  TILINGS_REQUIRE(int(y.size()) == N && int(z.size()) == N, ContractError,
                  "tower state must hold x, y, z per column");
  for (int n = 1; n <= N; ++n) {
    const auto& xn = x[std::size_t(n - 1)];
    const auto& yn = y[std::size_t(n - 1)];
    const auto& zn = z[std::size_t(n - 1)];
    TILINGS_REQUIRE(xn.level() == 2 * n && yn.level() == 2 * n - 1 && zn.level() == 2 * n - 2,
                    ContractError, "tower column has wrong sizes");
    TILINGS_REQUIRE(interlaces(yn, xn, true), ContractError, "y must interlace below x");
    TILINGS_REQUIRE(interlaces(zn, yn, true), ContractError, "z must interlace below y");
    if (n >= 2) {
      const auto& below = x[std::size_t(n - 2)];
      for (int i = 0; i < 2 * n - 2; ++i) {
        int d = below[i] - zn[i];
        TILINGS_REQUIRE(d == 0 || d == 1, ContractError,
                        "lower x must lie within one jump above the z-copy");
      }
    }
  }
}

TowerState tower_step(const TowerState& state, const TowerParams& params,
                      const CounterRng& rng) {
  TILINGS_REQUIRE(params.alpha > 0 && params.alpha2 > 0 && params.beta >= 0, ParameterError,
                  "tower weights must be positive (beta may vanish)");
  const int N = state.depth();
  const Rational py_active = params.alpha * params.beta / (1 + params.alpha * params.beta);
  const Rational px_active = params.alpha2 * params.beta / (1 + params.alpha2 * params.beta);
  TowerState out;
  out.t = state.t + 1;
  out.x.resize(std::size_t(N));
  out.y.resize(std::size_t(N));
  out.z.resize(std::size_t(N));
  for (int n = 1; n <= N; ++n) {
    const bool active = state.t - n + 1 >= 0;
    // z copies the previous lower x
    out.z[std::size_t(n - 1)] =
        (n >= 2) ? state.x[std::size_t(n - 2)] : WeylConfig(std::vector<int>{});
    // y jumps conditioned above the fresh z
    const auto& zpos = out.z[std::size_t(n - 1)].positions();
    auto ny = conditioned_level_update(state.y[std::size_t(n - 1)].positions(),
                                       n >= 2 ? &zpos : nullptr,
                                       active ? py_active : Rational(0), rng, rng_tag::kTower,
                                       state.t, 2 * n - 1);
    out.y[std::size_t(n - 1)] = WeylConfig(ny);
    // x jumps conditioned above the fresh y
    auto nx = conditioned_level_update(state.x[std::size_t(n - 1)].positions(), &ny,
                                       active ? px_active : Rational(0), rng, rng_tag::kTower,
                                       state.t, 2 * n);
    out.x[std::size_t(n - 1)] = WeylConfig(nx);
  }
  out.validate();
  return out;
}

LineEnsemble tower_particles_to_lines(const TowerState& state) {
  state.validate();
  const int N = state.depth();
  const int P = 2 * N;
  LineEnsemble L(P, 3 * N + 1);
  for (int j = 1; j <= P; ++j) {
    for (int n = 1; n <= N; ++n) {
      const auto& xn = state.x[std::size_t(n - 1)];
      const auto& yn = state.y[std::size_t(n - 1)];
      const auto& zn = state.z[std::size_t(n - 1)];
      if (j <= 2 * n - 2) L.set_height(j - 1, 3 * n - 3, zn[2 * n - 2 - j]);
      if (j <= 2 * n - 1) L.set_height(j - 1, 3 * n - 2, yn[2 * n - 1 - j]);
      if (j <= 2 * n) L.set_height(j - 1, 3 * n - 1, xn[2 * n - j]);
    }
  }
  L.check_boundary_and_order();
  for (int j = 0; j < P; ++j)
    for (int n = 1; n <= N; ++n) {
      if (L.height(j, 3 * n - 2) < L.height(j, 3 * n - 3) ||
          L.height(j, 3 * n - 1) < L.height(j, 3 * n - 2))
        throw BijectionError("negative rise in the tower line ensemble");
      int fall = L.height(j, 3 * n - 1) - L.height(j, 3 * n);
      if (fall != 0 && fall != 1) throw BijectionError("fall must be one unit at most");
    }
  return L;
}

TowerState tower_lines_to_particles(const LineEnsemble& lines) {
  const int P = lines.num_paths();
  TILINGS_REQUIRE(P % 2 == 0, ContractError, "tower ensemble needs an even number of paths");
  const int N = P / 2;
  TILINGS_REQUIRE(lines.num_times() == 3 * N + 1, ContractError,
                  "tower ensemble has the wrong number of node times");
  lines.check_boundary_and_order();
  TowerState s;
  for (int n = 1; n <= N; ++n) {
    std::vector<int> xs(std::size_t(2 * n)), ys(std::size_t(2 * n - 1)), zs(std::size_t(2 * n - 2));
    for (int j = 1; j <= 2 * n; ++j) xs[std::size_t(2 * n - j)] = lines.height(j - 1, 3 * n - 1);
    for (int j = 1; j <= 2 * n - 1; ++j)
      ys[std::size_t(2 * n - 1 - j)] = lines.height(j - 1, 3 * n - 2);
    for (int j = 1; j <= 2 * n - 2; ++j)
      zs[std::size_t(2 * n - 2 - j)] = lines.height(j - 1, 3 * n - 3);
    s.x.emplace_back(xs);
    s.y.emplace_back(ys);
    s.z.emplace_back(zs);
  }
  s.validate();
  return s;
}

}  // namespace tilings::dynamics
