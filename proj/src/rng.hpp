#pragma once

#include <cstdint>

#include "rational.hpp"

namespace abelcone {

// xoshiro256** seeded via splitmix64. Hand-rolled so that sampled streams are
// identical on every platform and standard-library implementation; reproducible
// certificates depend on this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next() {
    auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  long long int_in(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform numerator in [-max_num, max_num], denominator in [1, max_den].
  Rat rational(long max_num, long max_den) {
    long long n = int_in(-max_num, max_num);
    long long d = int_in(1, max_den);
    return rat(n, d);
  }

  Rat nonzero_rational(long max_num, long max_den) {
    for (;;) {
      Rat r = rational(max_num, max_den);
      if (r != 0) return r;
    }
  }

 private:
  std::uint64_t s_[4];
};

}  // namespace abelcone
