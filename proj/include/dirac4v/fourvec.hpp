#pragma once

#include <array>
#include <complex>

#include "dirac4v/cmat.hpp"

// Complex four-vectors over the Pauli basis {sigma_0..sigma_3}. A vector
// v = sum_i c_i sigma_i doubles as the 2x2 matrix realization sum c_i sigma_i;
// coefficients recover exactly as c_i = tr(sigma_i M) / 2.
//
// Product conventions, all fixed here and reused by the rest of the library:
//   * lorentz_product uses the metric diag(+,-,-,-).
//   * algebraic_product(a,b) is the coefficient form of M_a * M_conj(b).
//   * wedge extends the basis rules  s_k ^ s_k = s_0,
//     s_a ^ s_b = i eps_abc s_c (a != b spatial), s_0 acting as identity.
//     On the basis this coincides with the plain matrix product, so
//     wedge(a,b) == coefficients of M_a * M_b.

namespace d4v::fourvec {

struct PauliVector {
  std::array<cd, 4> c{cd(0, 0), cd(0, 0), cd(0, 0), cd(0, 0)};

  PauliVector() = default;
  PauliVector(cd c0, cd c1, cd c2, cd c3) : c{c0, c1, c2, c3} {}

  cd& operator[](int i) { return c[i]; }
  const cd& operator[](int i) const { return c[i]; }

  PauliVector operator+(const PauliVector& o) const {
    return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
  }
  PauliVector operator-(const PauliVector& o) const {
    return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
  }
  PauliVector operator*(cd s) const { return {c[0] * s, c[1] * s, c[2] * s, c[3] * s}; }
  friend PauliVector operator*(cd s, const PauliVector& v) { return v * s; }

  bool operator==(const PauliVector& o) const { return c == o.c; }

  // Euclidean norm of the four complex coefficients.
  double coeff_norm() const;

  double max_abs_diff(const PauliVector& o) const;
};

// Minkowski metric diag(+1,-1,-1,-1); eta(mu,nu) for mu,nu in 0..3.
inline double minkowski(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

// 2x2 realization and exact coefficient recovery.
CMat to_matrix(const PauliVector& v);
PauliVector from_matrix(const CMat& m); // throws DimensionError unless 2x2

PauliVector conjugate(const PauliVector& v);

cd lorentz_product(const PauliVector& a, const PauliVector& b);

// a . conj(b) expanded over the basis: scalar part is the Lorentz product,
// vector part gamma-component (a_g b_0 - b_g a_0) - i eps_abg a_a b_b.
PauliVector algebraic_product(const PauliVector& a, const PauliVector& b);

PauliVector wedge(const PauliVector& a, const PauliVector& b);

// Unit basis vector sigma_i as a PauliVector.
PauliVector basis(int i);

} // namespace d4v::fourvec
