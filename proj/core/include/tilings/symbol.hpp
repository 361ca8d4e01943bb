#pragma once

#include <map>
#include <string>
#include <vector>

#include "tilings/numeric.hpp"

namespace tilings {

// Symbol of a translation-invariant kernel: a rational function of the form
//   F(z) = L(z) * prod_i (1 - c_i z)^(-1)
// with L a finite Laurent polynomial. This family is closed under products
// and covers every symbol used here: finite Laurent polynomials, (1-z)^k,
// (1-cz)^(-1), 1-p+p/z, 1+bz. Coefficients are extracted in the Laurent
// expansion around the origin, valid on the annulus 0 < |z| < 1/max|c_i|.
class Symbol {
 public:
  Symbol() { laurent_[0] = 1; }  // constant 1

  static Symbol monomial(const Rational& coef, long long power);
  static Symbol constant(const Rational& c) { return monomial(c, 0); }
  // 1 - p + p/z
  static Symbol walk_step(const Rational& p);
  // 1 + b z
  static Symbol bernoulli_step(const Rational& b);
  // (1 - c z)^(-1)
  static Symbol geometric(const Rational& c);
  // (1 - z)^k for any integer k (negative k adds geometric factors)
  static Symbol one_minus_z_pow(long long k);

  Symbol operator*(const Symbol& o) const;

  // Coefficient of z^m: f(m) = (2 pi i)^(-1) \oint F(z) z^(-m-1) dz on a
  // contour inside the annulus of validity.
  Rational coeff(long long m) const;

  // Exact evaluation; throws ParameterError on a pole.
  Rational evaluate(const Rational& w) const;

  // True when w lies strictly inside the annulus of validity (so the
  // coefficient expansion converges at w).
  bool in_annulus(const Rational& w) const;

  // Lowest exponent with a nonzero coefficient.
  long long min_degree() const;
  // Finite support (no geometric factors and L finite).
  bool finite_support() const;
  long long max_degree() const;  // only valid when finite_support()

  bool is_zero() const { return laurent_.empty(); }

  std::string describe() const;

 private:
  std::map<long long, Rational> laurent_;  // exponent -> coefficient
  std::vector<Rational> geom_;             // factors (1 - c z)^(-1)

  void prune();
};

}  // namespace tilings
