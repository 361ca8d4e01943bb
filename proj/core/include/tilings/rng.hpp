#pragma once

#include <cstdint>
#include <vector>

#include "tilings/numeric.hpp"

namespace tilings {

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Counter-based generator: every output is a pure function of
// (seed, stream, counter). Streams are derived from small integer tags so
// that each (step, level, index) coordinate owns an independent substream,
// which makes trajectories reproducible regardless of evaluation order or
// thread count.
class RngStream {
 public:
  RngStream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() {
    std::uint64_t v = detail::mix64(key_ ^ (counter_ * 0xda942042e4dd58b5ULL));
    ++counter_;
    return v;
  }

  // One uniform random bit.
  int next_bit() {
    if (bits_left_ == 0) {
      cache_ = next_u64();
      bits_left_ = 64;
    }
    int b = int(cache_ & 1);
    cache_ >>= 1;
    --bits_left_;
    return b;
  }

  // Exact Bernoulli(p) for rational p in [0,1]: compares a uniform binary
  // fraction against the binary expansion of p digit by digit.
  bool bernoulli(const Rational& p) {
    TILINGS_REQUIRE(p >= 0 && p <= 1, ParameterError, "bernoulli probability outside [0,1]");
    if (p == 0) return false;
    if (p == 1) return true;
    BigInt num = boost::multiprecision::numerator(p);
    BigInt den = boost::multiprecision::denominator(p);
    for (;;) {
      num <<= 1;
      int d = (num >= den) ? 1 : 0;
      if (d) num -= den;
      int b = next_bit();
      if (b < d) return true;
      if (b > d) return false;
      if (num == 0) return false;  // remaining expansion of p is all zeros
    }
  }

  // Uniform integer in [0, bound), exact (rejection sampling on the smallest
  // covering power of two).
  BigInt uniform_below(const BigInt& bound) {
    TILINGS_REQUIRE(bound > 0, ParameterError, "uniform_below requires a positive bound");
    if (bound == 1) return 0;
    unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
    for (;;) {
      BigInt r = 0;
      unsigned got = 0;
      while (got < bits) {
        unsigned take = std::min<unsigned>(64, bits - got);
        std::uint64_t w = next_u64();
        if (take < 64) w &= (take == 64 ? ~0ULL : ((1ULL << take) - 1));
        r |= BigInt(w) << got;
        got += take;
      }
      if (r < bound) return r;
    }
  }

  // Exact draw from unnormalized nonnegative rational weights.
  std::size_t discrete(const std::vector<Rational>& weights) {
    TILINGS_REQUIRE(!weights.empty(), ParameterError, "discrete: empty weight vector");
    BigInt den = 1;
    for (const auto& w : weights) {
      TILINGS_REQUIRE(w >= 0, ParameterError, "discrete: negative weight");
      den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(w));
    }
    std::vector<BigInt> scaled(weights.size());
    BigInt total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      scaled[i] = boost::multiprecision::numerator(weights[i]) *
                  (den / boost::multiprecision::denominator(weights[i]));
      total += scaled[i];
    }
    TILINGS_REQUIRE(total > 0, ParameterError, "discrete: all weights zero");
    BigInt r = uniform_below(total);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      if (r < scaled[i]) return i;
      r -= scaled[i];
    }
    throw InternalError("discrete: fell off the cumulative table");
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::uint64_t cache_ = 0;
  int bits_left_ = 0;
};

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(detail::mix64(seed ^ 0x5bf0363546290f17ULL)) {}

  // Derive the substream addressed by up to four coordinates
  // (e.g. tag, time, level, particle index).
  RngStream stream(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0,
                   std::uint64_t d = 0) const {
    std::uint64_t k = seed_;
    k = detail::mix64(k ^ (a + 0x8000000000000000ULL));
    k = detail::mix64(k ^ b);
    k = detail::mix64(k ^ c);
    k = detail::mix64(k ^ d);
    return RngStream(k);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

// Stream tags, to keep unrelated draws on disjoint substreams.
namespace rng_tag {
constexpr std::uint64_t kSequential = 1;
constexpr std::uint64_t kParallel = 2;
constexpr std::uint64_t kExtended = 3;
constexpr std::uint64_t kShuffleFill = 4;
constexpr std::uint64_t kTower = 5;
constexpr std::uint64_t kSample = 6;
constexpr std::uint64_t kTowerShuffle = 7;
}  // namespace rng_tag

}  // namespace tilings
