#pragma once

/* Seeded random sampling of exact values.  Every randomized check derives its
 * own stream from (base seed, check id), so results do not depend on how the
 * checks are scheduled. */

#include "cattorus/exact.hpp"
#include "cattorus/linalg.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace cattorus {

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  std::uint64_t h = 14695981039346656037ULL ^ base;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  long long int_in(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(g_);
  }
  Int int_(long long max_abs = 10) { return Int(int_in(-max_abs, max_abs)); }
  bool bit() { return int_in(0, 1) == 1; }
  int sign() { return bit() ? 1 : -1; }

  /* Denominators stay small so group words built from many samples keep
   * manageable operand sizes. */
  Rational rat(long long max_abs = 10, long long max_den = 60) {
    long long d = int_in(1, max_den);
    long long n = int_in(-max_abs * d, max_abs * d);
    return Rational(n, d);
  }
  CircleElt circle(long long max_den = 60) { return CircleElt(rat(1, max_den)); }

  VecZ vec_z(std::size_t n, long long max_abs = 10) {
    VecZ v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = int_(max_abs);
    return v;
  }
  VecQ vec_q(std::size_t n, long long max_abs = 10, long long max_den = 60) {
    VecQ v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rat(max_abs, max_den);
    return v;
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace cattorus
