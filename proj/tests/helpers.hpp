#pragma once

#include <random>

#include "dirac4v/cmat.hpp"

namespace testutil {

using d4v::cd;
using d4v::CMat;

inline std::mt19937_64 rng(uint64_t seed = 0x5eed) { return std::mt19937_64(seed); }

inline CMat random_matrix(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> g;
  CMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cd(g(gen), g(gen));
  return m;
}

// Haar-ish random unitary via Gram-Schmidt on a Gaussian matrix.
inline CMat random_unitary(int n, std::mt19937_64& gen) {
  CMat a = random_matrix(n, gen);
  for (int c = 0; c < n; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      cd dot(0, 0);
      for (int r = 0; r < n; ++r) dot += std::conj(a(r, prev)) * a(r, c);
      for (int r = 0; r < n; ++r) a(r, c) -= dot * a(r, prev);
    }
    double norm = 0.0;
    for (int r = 0; r < n; ++r) norm += std::norm(a(r, c));
    norm = std::sqrt(norm);
    for (int r = 0; r < n; ++r) a(r, c) = a(r, c) * (1.0 / norm);
  }
  return a;
}

} // namespace testutil
