#include "tilings/kernels.hpp"

#include <algorithm>

namespace tilings::kernels {

Rational det_rational(std::vector<std::vector<Rational>> m) {
  const int n = int(m.size());
  if (n == 0) return 1;
  Rational det = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    Rational inv = Rational(1) / m[k][k];
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] * inv;
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

Symbol one_particle_kernel(const Rational& p) { return Symbol::walk_step(p); }

Rational one_particle_entry(const Rational& p, int x, int y) {
  TILINGS_REQUIRE(p >= 0 && p <= 1, ParameterError, "jump probability outside [0,1]");
  if (y == x + 1) return p;
  if (y == x) return 1 - p;
  return 0;
}

Rational binomial_pt(long long t, long long x, const Rational& p) {
  if (x < 0 || x > t) return 0;
  return Rational(binomial(t, x)) * pow_rational(p, x) * pow_rational(1 - p, t - x);
}

Rational level_kernel(const Rational& p, const WeylConfig& x, const WeylConfig& y) {
  TILINGS_REQUIRE(x.level() == y.level(), ContractError, "level_kernel: level mismatch");
  const int n = x.level();
  // cheap support test first: jumps are 0 or +1 coordinatewise
  for (int i = 0; i < n; ++i)
    if (y[i] != x[i] && y[i] != x[i] + 1) return 0;
  std::vector<std::vector<Rational>> m(std::size_t(n), std::vector<Rational>(std::size_t(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = one_particle_entry(p, x[i], y[j]);
  Rational d = det_rational(std::move(m));
  if (d == 0) return 0;
  return Rational(vandermonde(y)) / Rational(vandermonde(x)) * d;
}

Rational markov_link(const WeylConfig& x, const WeylConfig& y) {
  TILINGS_REQUIRE(y.level() + 1 == x.level(), ContractError, "markov_link: levels must differ by one");
  if (!interlaces(y, x, true)) return 0;
  const int n = x.level();
  return Rational(factorial(n - 1)) * Rational(vandermonde(y)) / Rational(vandermonde(x));
}

Rational laurent_coeff(const Symbol& F, long long m) { return F.coeff(m); }

namespace {

void require_valid_weights(const std::vector<Rational>& a, const Symbol& F, int needed) {
  for (int j = 0; j < needed; ++j) {
    TILINGS_REQUIRE(a[std::size_t(j)] != 0, ParameterError, "weight a_j must be nonzero");
    Rational w = Rational(1) / a[std::size_t(j)];
    TILINGS_REQUIRE(F.in_annulus(w) || F.finite_support(), ParameterError,
                    "symbol not analytic at 1/a_j within the expansion annulus");
    TILINGS_REQUIRE(F.evaluate(w) != 0, ParameterError, "symbol vanishes at 1/a_j");
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      TILINGS_REQUIRE(a[i] != a[j], ParameterError,
                      "degenerate weights: repeated a_i (use the confluent forms)");
}

Rational geometric_det(const std::vector<Rational>& a, const WeylConfig& y) {
  const int n = y.level();
  std::vector<std::vector<Rational>> m(std::size_t(n), std::vector<Rational>(std::size_t(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = pow_rational(a[std::size_t(i)], y[j]);
  return det_rational(std::move(m));
}

}  // namespace

Rational toeplitz_same_level(const std::vector<Rational>& a, const Symbol& F,
                             const WeylConfig& x, const WeylConfig& y) {
  const int n = x.level();
  TILINGS_REQUIRE(y.level() == n, ContractError, "toeplitz_same_level: level mismatch");
  TILINGS_REQUIRE(int(a.size()) == n, ContractError, "toeplitz_same_level: need n weights");
  require_valid_weights(a, F, n);
  std::vector<std::vector<Rational>> m(std::size_t(n), std::vector<Rational>(std::size_t(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = F.coeff(x[i] - y[j]);
  Rational fdet = det_rational(std::move(m));
  if (fdet == 0) return 0;
  Rational norm = 1;
  for (int j = 0; j < n; ++j) norm *= F.evaluate(Rational(1) / a[std::size_t(j)]);
  return geometric_det(a, y) / geometric_det(a, x) * fdet / norm;
}

Rational toeplitz_level_down(const std::vector<Rational>& a, const Symbol& F,
                             const WeylConfig& x, const WeylConfig& y) {
  const int n = x.level();
  TILINGS_REQUIRE(y.level() == n - 1, ContractError, "toeplitz_level_down: target must be one level down");
  TILINGS_REQUIRE(int(a.size()) == n, ContractError, "toeplitz_level_down: need n weights");
  require_valid_weights(a, F, n - 1);
  std::vector<std::vector<Rational>> m(std::size_t(n), std::vector<Rational>(std::size_t(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n - 1; ++j) m[i][j] = F.coeff(x[i] - y[j]);
    m[i][std::size_t(n - 1)] = pow_rational(a[std::size_t(n - 1)], x[i]);  // virtual variable
  }
  Rational fdet = det_rational(std::move(m));
  if (fdet == 0) return 0;
  Rational norm = 1;
  for (int j = 0; j < n - 1; ++j) norm *= F.evaluate(Rational(1) / a[std::size_t(j)]);
  std::vector<Rational> ay(a.begin(), a.end() - 1);
  return geometric_det(ay, y) / geometric_det(a, x) * fdet / norm;
}

namespace {

bool all_equal(const std::vector<Rational>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] != v[0]) return false;
  return true;
}

}  // namespace

Rational generalized_level_kernel(const std::vector<Rational>& alpha, const Rational& beta,
                                  long long tau, const WeylConfig& x, const WeylConfig& y) {
  const int n = x.level();
  TILINGS_REQUIRE(y.level() == n, ContractError, "generalized_level_kernel: level mismatch");
  TILINGS_REQUIRE(int(alpha.size()) == n, ContractError, "generalized_level_kernel: need n weights");
  for (const auto& al : alpha)
    TILINGS_REQUIRE(al > 0, ParameterError, "alpha weights must be positive");
  TILINGS_REQUIRE(beta >= 0, ParameterError, "beta must be nonnegative");
  if (tau < 0) return x == y ? Rational(1) : Rational(0);

  long long jumps = 0;
  for (int i = 0; i < n; ++i) {
    if (y[i] == x[i] + 1)
      ++jumps;
    else if (y[i] != x[i])
      return 0;
  }
  if (all_equal(alpha)) {
    // confluent limit: the geometric determinant ratio degenerates into the
    // Vandermonde ratio times a total-displacement factor
    Rational ab = alpha[0] * beta;
    Rational w = Rational(vandermonde(y)) / Rational(vandermonde(x));
    w *= pow_rational(ab, jumps);
    w /= pow_rational(1 + ab, n);
    return w;
  }
  Rational w = geometric_det(alpha, y) / geometric_det(alpha, x);
  w *= pow_rational(beta, jumps);
  Rational norm = 1;
  for (int j = 0; j < n; ++j) norm *= 1 + beta * alpha[std::size_t(j)];
  return w / norm;
}

Rational generalized_markov_link(const std::vector<Rational>& alpha, const WeylConfig& x,
                                 const WeylConfig& y) {
  const int n = x.level();
  TILINGS_REQUIRE(y.level() == n - 1, ContractError,
                  "generalized_markov_link: target must be one level down");
  TILINGS_REQUIRE(int(alpha.size()) == n, ContractError, "generalized_markov_link: need n weights");
  for (const auto& al : alpha)
    TILINGS_REQUIRE(al > 0, ParameterError, "alpha weights must be positive");
  if (all_equal(alpha)) return markov_link(x, y);
  for (int j = 0; j + 1 < n; ++j)
    TILINGS_REQUIRE(alpha[std::size_t(j)] != alpha[std::size_t(n - 1)], ParameterError,
                    "degenerate alpha: partial coincidences need the confluent form");
  if (!interlaces(y, x, true)) return 0;
  const Rational an = alpha[std::size_t(n - 1)];
  std::vector<std::vector<Rational>> m(std::size_t(n), std::vector<Rational>(std::size_t(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n - 1; ++j)
      m[i][j] = (x[i] >= y[j]) ? pow_rational(an, x[i] - y[j]) : Rational(0);
    m[i][std::size_t(n - 1)] = pow_rational(an, x[i]);
  }
  Rational fdet = det_rational(std::move(m));
  std::vector<Rational> ay(alpha.begin(), alpha.end() - 1);
  Rational w = geometric_det(ay, y) / geometric_det(alpha, x) * fdet;
  for (int j = 0; j + 1 < n; ++j) w *= (1 - an / alpha[std::size_t(j)]);
  TILINGS_ASSERT(w >= 0, "link weight must be nonnegative on the interlacing support");
  return w;
}

Rational intertwine_defect(int n, const Rational& p, int window_lo, int window_hi) {
  TILINGS_REQUIRE(n >= 2, ContractError, "intertwine_defect: need n >= 2");
  TILINGS_REQUIRE(window_hi - window_lo + 1 >= n + 1, WindowError,
                  "window too small to hold one-step supports");
  Rational defect = 0;
  auto sources = enumerate_chamber(n, window_lo, window_hi - 1);  // keep +1 jumps inside
  TILINGS_REQUIRE(!sources.empty(), WindowError, "window admits no support-safe source");
  auto targets = enumerate_chamber(n - 1, window_lo, window_hi);
  for (const auto& x : sources) {
    // supports of both routes starting from x
    std::vector<WeylConfig> mids_same;
    {
      const int steps = 1 << n;
      for (int mask = 0; mask < steps; ++mask) {
        std::vector<int> ypos(x.positions());
        bool ok = true;
        for (int i = 0; i < n; ++i)
          if (mask & (1 << i)) ypos[std::size_t(i)] += 1;
        for (int i = 0; i + 1 < n; ++i)
          if (ypos[std::size_t(i)] >= ypos[std::size_t(i + 1)]) ok = false;
        if (ok) mids_same.emplace_back(ypos);
      }
    }
    auto mids_down = enumerate_interlacing(x);
    for (const auto& z : targets) {
      Rational lhs = 0;
      for (const auto& y : mids_same) lhs += level_kernel(p, x, y) * markov_link(y, z);
      Rational rhs = 0;
      for (const auto& w : mids_down) rhs += markov_link(x, w) * level_kernel(p, w, z);
      Rational d = lhs - rhs;
      if (d < 0) d = -d;
      if (d > defect) defect = d;
    }
  }
  return defect;
}

KernelTable::KernelTable(int source_level, int target_level, int window_lo, int window_hi,
                         const RowFn& fn)
    : source_level_(source_level),
      target_level_(target_level),
      window_lo_(window_lo),
      window_hi_(window_hi) {
  sources_ = enumerate_chamber(source_level, window_lo, window_hi);
  targets_ = enumerate_chamber(target_level, window_lo, window_hi);
  for (const auto& x : sources_) {
    for (const auto& y : targets_) {
      Rational v = fn(x, y);
      if (v != 0) entries_[{x, y}] = v;
    }
  }
}

Rational KernelTable::entry(const WeylConfig& x, const WeylConfig& y) const {
  auto it = entries_.find({x, y});
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational KernelTable::row_sum(const WeylConfig& x) const {
  Rational s = 0;
  for (const auto& y : targets_) s += entry(x, y);
  return s;
}

bool KernelTable::stochastic() const {
  for (const auto& [k, v] : entries_)
    if (v < 0) return false;
  for (const auto& x : sources_)
    if (row_sum(x) != 1) return false;
  return true;
}

}  // namespace tilings::kernels
