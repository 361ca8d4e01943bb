#include "tilings/weyl.hpp"

#include <algorithm>

namespace tilings {

WeylConfig::WeylConfig(std::vector<int> positions) : pos_(std::move(positions)) {
  for (std::size_t i = 1; i < pos_.size(); ++i)
    TILINGS_REQUIRE(pos_[i - 1] < pos_[i], ContractError,
                    "positions must be strictly increasing");
}

WeylConfig WeylConfig::packed(int n) {
  std::vector<int> p(std::size_t(n));
  for (int k = 0; k < n; ++k) p[std::size_t(k)] = -n + k;
  return WeylConfig(std::move(p));
}

bool interlaces(const WeylConfig& lower, const WeylConfig& upper, bool strict) {
  TILINGS_REQUIRE(lower.level() + 1 == upper.level(), ContractError,
                  "interlaces: levels must differ by one");
  const int n = lower.level();
  for (int j = 0; j < n; ++j) {
    if (strict) {
      if (!(upper[j] < lower[j] && lower[j] <= upper[j + 1])) return false;
    } else {
      if (!(upper[j] <= lower[j] && lower[j] <= upper[j + 1])) return false;
    }
  }
  return true;
}

BigInt vandermonde(const WeylConfig& x) {
  BigInt r = 1;
  const int n = x.level();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r *= BigInt(x[j] - x[i]);
  return r;
}

BigInt count_gt_patterns(const WeylConfig& top) {
  const int n = top.level();
  BigInt num = vandermonde(top);
  BigInt den = 1;
  for (int k = 1; k < n; ++k) den *= factorial(k);
  TILINGS_ASSERT(num % den == 0, "pattern count must be integral");
  return num / den;
}

namespace {

// Exact determinant by fraction-free Gaussian elimination (Bareiss).
BigInt det_bigint(std::vector<std::vector<BigInt>> m) {
  const int n = int(m.size());
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

BigInt interlacing_det(const WeylConfig& upper, const WeylConfig& lower) {
  TILINGS_REQUIRE(lower.level() + 1 == upper.level(), ContractError,
                  "interlacing_det: levels must differ by one");
  const int n = upper.level();
  // rows: lower entries plus the virtual variable, columns: upper entries
  std::vector<std::vector<BigInt>> m(std::size_t(n), std::vector<BigInt>(std::size_t(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == n - 1) {
        m[i][j] = 1;  // virtual variable
      } else {
        m[i][j] = (lower[i] > upper[j]) ? 1 : 0;
      }
    }
  }
  BigInt d = det_bigint(std::move(m));
  TILINGS_ASSERT(d == 0 || d == 1, "interlacing determinant must be 0 or 1");
  return d;
}

std::vector<WeylConfig> enumerate_interlacing(const WeylConfig& upper) {
  TILINGS_REQUIRE(upper.level() >= 2, ContractError,
                  "enumerate_interlacing: upper level must be at least 2");
  const int n = upper.level() - 1;
  std::vector<WeylConfig> out;
  std::vector<int> cur(std::size_t(n));
  // l_j ranges over (u_j, u_{j+1}]; the ranges are ordered so lexicographic
  // enumeration is a plain nested loop.
  auto rec = [&](auto&& self, int j) -> void {
    if (j == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = upper[j] + 1; v <= upper[j + 1]; ++v) {
      cur[std::size_t(j)] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

GtPattern::GtPattern(std::vector<WeylConfig> levels) : levels_(std::move(levels)) {
  for (std::size_t n = 0; n < levels_.size(); ++n)
    TILINGS_REQUIRE(levels_[n].level() == int(n) + 1, ContractError,
                    "pattern level n must have n positions");
  for (std::size_t n = 0; n + 1 < levels_.size(); ++n)
    TILINGS_REQUIRE(interlaces(levels_[n], levels_[n + 1], true), ContractError,
                    "consecutive levels must interlace strictly");
}

GtPattern GtPattern::packed(int depth) {
  std::vector<WeylConfig> lv;
  lv.reserve(std::size_t(depth));
  for (int n = 1; n <= depth; ++n) lv.push_back(WeylConfig::packed(n));
  return GtPattern(std::move(lv));
}

bool weakly_reachable(const WeylConfig& lower, const WeylConfig& upper) {
  if (lower.level() + 1 != upper.level()) return false;
  const int n = lower.level();
  for (int j = 0; j < n; ++j) {
    if (!(upper[j] < lower[j])) return false;
    if (!(upper[j + 1] >= lower[j] - 1)) return false;
  }
  return true;
}

WeakGtPattern::WeakGtPattern(std::vector<WeylConfig> levels) : levels_(std::move(levels)) {
  for (std::size_t n = 0; n < levels_.size(); ++n)
    TILINGS_REQUIRE(levels_[n].level() == int(n) + 1, ContractError,
                    "pattern level n must have n positions");
  for (std::size_t n = 0; n + 1 < levels_.size(); ++n)
    TILINGS_REQUIRE(weakly_reachable(levels_[n], levels_[n + 1]), ContractError,
                    "consecutive levels must be one-step reachable");
}

WeakGtPattern WeakGtPattern::packed(int depth) {
  std::vector<WeylConfig> lv;
  lv.reserve(std::size_t(depth));
  for (int n = 1; n <= depth; ++n) lv.push_back(WeylConfig::packed(n));
  return WeakGtPattern(std::move(lv));
}

std::vector<WeylConfig> enumerate_chamber(int n, int lo, int hi) {
  std::vector<WeylConfig> out;
  if (n == 0) {
    out.emplace_back(std::vector<int>{});
    return out;
  }
  if (hi - lo + 1 < n) return out;
  std::vector<int> cur(std::size_t(n));
  auto rec = [&](auto&& self, int j, int from) -> void {
    if (j == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = from; v <= hi - (n - 1 - j); ++v) {
      cur[std::size_t(j)] = v;
      self(self, j + 1, v + 1);
    }
  };
  rec(rec, 0, lo);
  return out;
}

std::vector<GtPattern> enumerate_patterns_below(const WeylConfig& top) {
  std::vector<std::vector<WeylConfig>> stack;
  std::vector<GtPattern> out;
  std::vector<WeylConfig> cur(std::size_t(top.level()));
  cur[std::size_t(top.level() - 1)] = top;
  auto rec = [&](auto&& self, int n) -> void {
    if (n == 0) {
      out.emplace_back(GtPattern(cur));
      return;
    }
    for (const auto& low : enumerate_interlacing(cur[std::size_t(n)])) {
      cur[std::size_t(n - 1)] = low;
      self(self, n - 1);
    }
  };
  if (top.level() == 1) {
    out.emplace_back(GtPattern({top}));
    return out;
  }
  rec(rec, top.level() - 1);
  return out;
}

}  // namespace tilings
