#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pmv/rational.hpp"

namespace pmv {

// Seeded sampler for every randomized piece of the library. All consumers
// take a Sampler& so tests can replay exact sequences.
class Sampler {
 public:
  explicit Sampler(uint64_t seed, long height = 20)
      : eng_(seed), height_(height) {}

  uint64_t raw() { return eng_(); }

  // Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng_);
  }

  // Numerator in [-H, H], denominator in [1, H].
  Rat rational() {
    long num = integer(-height_, height_);
    long den = integer(1, height_);
    Rat q(num, den);
    q.canonicalize();
    return q;
  }

  // Like rational() but rejects 0.
  Rat nonzero_rational() {
    for (;;) {
      Rat q = rational();
      if (!rat_is_zero(q)) return q;
    }
  }

  // Fisher–Yates permutation of {0,...,n-1}.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(integer(0, i));
      std::swap(p[i], p[j]);
    }
    return p;
  }

  long height() const { return height_; }

 private:
  std::mt19937_64 eng_;
  long height_;
};

}  // namespace pmv
