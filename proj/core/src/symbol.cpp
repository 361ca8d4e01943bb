#include "tilings/symbol.hpp"

#include <sstream>

namespace tilings {

void Symbol::prune() {
  for (auto it = laurent_.begin(); it != laurent_.end();) {
    if (it->second == 0)
      it = laurent_.erase(it);
    else
      ++it;
  }
}

Symbol Symbol::monomial(const Rational& coef, long long power) {
  Symbol s;
  s.laurent_.clear();
  if (coef != 0) s.laurent_[power] = coef;
  return s;
}

Symbol Symbol::walk_step(const Rational& p) {
  TILINGS_REQUIRE(p >= 0 && p <= 1, ParameterError, "walk_step: p outside [0,1]");
  Symbol s;
  s.laurent_.clear();
  if (p != 1) s.laurent_[0] = 1 - p;
  if (p != 0) s.laurent_[-1] = p;
  return s;
}

Symbol Symbol::bernoulli_step(const Rational& b) {
  Symbol s;
  s.laurent_.clear();
  s.laurent_[0] = 1;
  if (b != 0) s.laurent_[1] = b;
  return s;
}

Symbol Symbol::geometric(const Rational& c) {
  TILINGS_REQUIRE(c != 0, ParameterError, "geometric: zero ratio");
  Symbol s;
  s.geom_.push_back(c);
  return s;
}

Symbol Symbol::one_minus_z_pow(long long k) {
  if (k >= 0) {
    Symbol s;
    s.laurent_.clear();
    for (long long j = 0; j <= k; ++j) {
      Rational c(binomial(k, j));
      if ((j & 1) != 0) c = -c;
      s.laurent_[j] = c;
    }
    s.prune();
    return s;
  }
  Symbol s;
  for (long long i = 0; i < -k; ++i) s.geom_.push_back(Rational(1));
  return s;
}

Symbol Symbol::operator*(const Symbol& o) const {
  Symbol r;
  r.laurent_.clear();
  for (const auto& [ea, ca] : laurent_)
    for (const auto& [eb, cb] : o.laurent_) r.laurent_[ea + eb] += ca * cb;
  r.prune();
  r.geom_ = geom_;
  r.geom_.insert(r.geom_.end(), o.geom_.begin(), o.geom_.end());
  return r;
}

Rational Symbol::coeff(long long m) const {
  if (laurent_.empty()) return 0;
  const long long lo = laurent_.begin()->first;
  if (m < lo) return 0;
  if (geom_.empty()) {
    auto it = laurent_.find(m);
    return it == laurent_.end() ? Rational(0) : it->second;
  }
  // g = coefficients of prod (1 - c z)^(-1) up to degree m - lo
  const std::size_t deg = std::size_t(m - lo);
  std::vector<Rational> g(deg + 1, Rational(0));
  g[0] = 1;
  for (const auto& c : geom_) {
    // multiply by (1 - c z)^(-1): g'(k) = g(k) + c g'(k-1)
    for (std::size_t k = 1; k <= deg; ++k) g[k] += c * g[k - 1];
  }
  Rational out = 0;
  for (const auto& [e, c] : laurent_) {
    if (e > m) break;
    out += c * g[std::size_t(m - e)];
  }
  return out;
}

Rational Symbol::evaluate(const Rational& w) const {
  Rational out = 0;
  for (const auto& [e, c] : laurent_) {
    if (e < 0) TILINGS_REQUIRE(w != 0, ParameterError, "symbol evaluated at its pole z=0");
    out += c * pow_rational(w, e);
  }
  for (const auto& c : geom_) {
    Rational d = 1 - c * w;
    TILINGS_REQUIRE(d != 0, ParameterError, "symbol evaluated at a pole");
    out /= d;
  }
  return out;
}

bool Symbol::in_annulus(const Rational& w) const {
  if (w == 0) return false;  // Laurent terms with negative powers live on a punctured disc
  for (const auto& c : geom_) {
    Rational prod = c * w;
    if (prod < 0) prod = -prod;
    if (!(prod < 1)) return false;
  }
  return true;
}

long long Symbol::min_degree() const {
  TILINGS_REQUIRE(!laurent_.empty(), ParameterError, "min_degree of the zero symbol");
  return laurent_.begin()->first;
}

bool Symbol::finite_support() const { return geom_.empty(); }

long long Symbol::max_degree() const {
  TILINGS_REQUIRE(finite_support(), ParameterError, "max_degree of an infinite symbol");
  TILINGS_REQUIRE(!laurent_.empty(), ParameterError, "max_degree of the zero symbol");
  return laurent_.rbegin()->first;
}

std::string Symbol::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : laurent_) {
    if (!first) os << " + ";
    os << "(" << c << ")z^" << e;
    first = false;
  }
  for (const auto& c : geom_) os << " * (1-(" << c << ")z)^-1";
  return os.str();
}

}  // namespace tilings
