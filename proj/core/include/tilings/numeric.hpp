#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tilings {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
// Precondition violated by the caller.
struct ContractError : Error {
  using Error::Error;
};
// Parameter outside its admissible range (probabilities, weights, degenerate sequences).
struct ParameterError : Error {
  using Error::Error;
};
// Finite window too small to contain the support of an exact computation.
struct WindowError : Error {
  using Error::Error;
};
// Input not in the image of a bijection (intersecting lines, bad boundary, ...).
struct BijectionError : Error {
  using Error::Error;
};
// Vacancy region does not decompose into the known piece catalogue.
struct DecompositionError : Error {
  using Error::Error;
};
// Exact enumeration requested beyond the configured cost guard.
struct CostGuardError : Error {
  using Error::Error;
};
struct NotImplementedError : Error {
  using Error::Error;
};
// Internal invariant broken; maps to exit code 4 in the CLI.
struct InternalError : Error {
  using Error::Error;
};

#define TILINGS_REQUIRE(cond, exc, msg) \
  do {                                  \
    if (!(cond)) throw exc(msg);        \
  } while (0)

#define TILINGS_ASSERT(cond, msg)                                             \
  do {                                                                        \
    if (!(cond))                                                              \
      throw ::tilings::InternalError(std::string("invariant failed: ") + msg \
                                     + " at " + __FILE__ + ":"                \
                                     + std::to_string(__LINE__));             \
  } while (0)

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

// x^e for integer e of either sign; x must be nonzero when e < 0.
inline Rational pow_rational(const Rational& x, long long e) {
  if (e == 0) return Rational(1);
  bool inv = e < 0;
  unsigned long long k = inv ? -(unsigned long long)e : (unsigned long long)e;
  if (inv) TILINGS_REQUIRE(x != 0, ParameterError, "0 raised to a negative power");
  Rational base = x, acc = 1;
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  if (inv) return Rational(1) / acc;
  return acc;
}

}  // namespace tilings
