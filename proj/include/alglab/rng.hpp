#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "alglab/linalg.hpp"

namespace alglab {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent deterministic stream for (seed, index): multi-start loops and
// sampling chunks each draw from their own stream, so reductions are
// reproducible under any thread count.
inline std::mt19937_64 stream_for(uint64_t seed, uint64_t index) {
  uint64_t s = seed ^ (0xd1342543de82ef95ULL * (index + 1));
  uint64_t a = splitmix64(s), b = splitmix64(s);
  std::seed_seq seq{static_cast<uint32_t>(a), static_cast<uint32_t>(a >> 32),
                    static_cast<uint32_t>(b), static_cast<uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

inline double uniform_pm1(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
}

inline Vec<double> random_coords(std::mt19937_64& rng, int n) {
  Vec<double> v(n);
  for (auto& c : v) c = uniform_pm1(rng);
  return v;
}

// Random point on the h-unit sphere (h positive definite).
inline Vec<double> random_h_unit(std::mt19937_64& rng, const Mat<double>& h) {
  const int n = h.rows();
  for (;;) {
    Vec<double> v = random_coords(rng, n);
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm2 += v[i] * h(i, j) * v[j];
    if (norm2 > 1e-6) {
      double inv = 1.0 / std::sqrt(norm2);
      for (auto& c : v) c *= inv;
      return v;
    }
  }
}

}  // namespace alglab
