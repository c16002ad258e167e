#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pmv {

// Binary multi-indices I = (i_1,...,i_n), i_k in {0,1}, packed into a
// uint32_t with factor 1 as the most significant bit. So for n=4 the string
// "0110" is the integer 6, and bit(k) below reads factor k (1-based).
//
// The same packing doubles as a subset-of-{1..n} encoding for minor index
// sets: bit k set <=> row/column k present.

// Arity bound for tensors and matrices: 16 by default (2^n coordinates),
// raised by the PMV_MAX_N environment variable up to the packing limit.
inline int max_arity() {
  static const int cap = [] {
    const char* e = std::getenv("PMV_MAX_N");
    if (!e) return 16;
    int v = std::atoi(e);
    if (v < 1) return 16;
    return v > 20 ? 20 : v;
  }();
  return cap;
}

inline int mi_bit(uint32_t bits, int n, int k) {
  return static_cast<int>((bits >> (n - k)) & 1u);
}

inline uint32_t mi_set_bit(uint32_t bits, int n, int k, int v) {
  uint32_t mask = 1u << (n - k);
  return v ? (bits | mask) : (bits & ~mask);
}

inline uint32_t mi_flip_bit(uint32_t bits, int n, int k) {
  return bits ^ (1u << (n - k));
}

inline int mi_popcount(uint32_t bits) { return __builtin_popcount(bits); }

inline std::string mi_to_string(uint32_t bits, int n) {
  std::string s(n, '0');
  for (int k = 1; k <= n; ++k)
    if (mi_bit(bits, n, k)) s[k - 1] = '1';
  return s;
}

inline uint32_t mi_from_string(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument("multi-index \"" + s + "\" is not length " +
                                std::to_string(n));
  uint32_t bits = 0;
  for (int k = 1; k <= n; ++k) {
    char c = s[k - 1];
    if (c != '0' && c != '1')
      throw std::invalid_argument("multi-index \"" + s + "\" has non-binary digit");
    if (c == '1') bits |= 1u << (n - k);
  }
  return bits;
}

// Applies a permutation of factors: result index J with j_i = i_{sigma(i)}.
// sigma is 0-based on factors 0..n-1 here; callers using 1-based factor
// labels subtract first.
inline uint32_t mi_permute(uint32_t bits, int n, const int* sigma) {
  uint32_t out = 0;
  for (int i = 0; i < n; ++i) {
    int src = sigma[i];
    int bit = static_cast<int>((bits >> (n - 1 - src)) & 1u);
    if (bit) out |= 1u << (n - 1 - i);
  }
  return out;
}

}  // namespace pmv
