#pragma once

#include <cstdint>
#include <random>

#include "maxcorr/linalg.hpp"

namespace maxcorr {

// splitmix64; used to decorrelate (seed, stream) pairs so per-trial
// generators are independent of trial execution order.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return std::mt19937_64(mix64(mix64(seed) ^ mix64(stream + 1)));
}

// i.i.d. standard complex Gaussian entries (real and imaginary parts N(0,1)).
inline ComplexMatrix gaussian_complex(int rows, int cols,
                                      std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      out(i, j) = std::complex<double>(re, im);
    }
  }
  return out;
}

}  // namespace maxcorr
