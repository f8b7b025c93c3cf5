#include "dirac4v/fourvec.hpp"

#include <cmath>

namespace d4v::fourvec {

namespace {
// Levi-Civita symbol for indices 1..3.
inline int eps(int a, int b, int g) {
  if (a == b || b == g || a == g) return 0;
  if ((a == 1 && b == 2 && g == 3) || (a == 2 && b == 3 && g == 1) || (a == 3 && b == 1 && g == 2)) return 1;
  return -1;
}
} // namespace

double PauliVector::coeff_norm() const {
  double s = 0.0;
  for (const cd& v : c) s += std::norm(v);
  return std::sqrt(s);
}

double PauliVector::max_abs_diff(const PauliVector& o) const {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(c[i] - o.c[i]));
  return m;
}

CMat to_matrix(const PauliVector& v) {
  CMat m(2, 2);
  for (int i = 0; i < 4; ++i) m += pauli(i) * v[i];
  return m;
}

PauliVector from_matrix(const CMat& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionError("", "Pauli coefficient extraction needs a 2x2 matrix");
  PauliVector v;
  for (int i = 0; i < 4; ++i) v[i] = (pauli(i) * m).trace() * 0.5;
  return v;
}

PauliVector conjugate(const PauliVector& v) { return {v[0], -v[1], -v[2], -v[3]}; }

cd lorentz_product(const PauliVector& a, const PauliVector& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

PauliVector algebraic_product(const PauliVector& a, const PauliVector& b) {
  PauliVector r;
  r[0] = lorentz_product(a, b);
  for (int g = 1; g < 4; ++g) {
    cd v = a[g] * b[0] - b[g] * a[0];
    for (int al = 1; al < 4; ++al)
      for (int be = 1; be < 4; ++be)
        if (int e = eps(al, be, g)) v -= cd(0, 1) * (double)e * a[al] * b[be];
    r[g] = v;
  }
  return r;
}

PauliVector wedge(const PauliVector& a, const PauliVector& b) {
  PauliVector r;
  // sigma_0 acts as identity on both sides
  r[0] = a[0] * b[0];
  for (int k = 1; k < 4; ++k) {
    r[k] = a[0] * b[k] + a[k] * b[0];
    r[0] += a[k] * b[k]; // s_k ^ s_k = s_0
  }
  for (int al = 1; al < 4; ++al)
    for (int be = 1; be < 4; ++be)
      for (int g = 1; g < 4; ++g)
        if (int e = eps(al, be, g)) r[g] += cd(0, 1) * (double)e * a[al] * b[be];
  return r;
}

PauliVector basis(int i) {
  PauliVector v;
  v[i] = 1.0;
  return v;
}

} // namespace d4v::fourvec
