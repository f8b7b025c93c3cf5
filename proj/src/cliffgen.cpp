#include "dirac4v/cliffgen.hpp"

#include <cmath>
#include <stdexcept>

#include "dirac4v/fourvec.hpp"

namespace d4v::cliffgen {

CliffordLevel clifford_level(int n) {
  if (n < 1) throw std::invalid_argument("clifford_level: n must be positive");
  if (n > 8) throw ResourceBoundError("clifford_level: n > 8 exceeds the resource bound");

  CliffordLevel lv;
  lv.n = 1;
  lv.dim = 2;
  for (int i = 0; i < 4; ++i) lv.theta[i] = pauli(i);
  if (n == 1) return lv;

  // Dirac representation at n = 2.
  CliffordLevel g;
  g.n = 2;
  g.dim = 4;
  const CMat is2 = pauli(2) * cd(0, 1);
  g.theta[0] = pauli(3).kron(pauli(0));
  for (int k = 1; k < 4; ++k) g.theta[k] = is2.kron(pauli(k));

  while (g.n < n) {
    CliffordLevel up;
    up.n = g.n + 1;
    up.dim = g.dim * 2;
    for (int i = 0; i < 4; ++i) up.theta[i] = g.theta[i].kron(pauli(3));
    g = std::move(up);
  }
  return g;
}

double clifford_defect(const CliffordLevel& level) {
  double worst = 0.0;
  const CMat id = CMat::identity(level.dim);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      const CMat anti = level.theta[mu] * level.theta[nu] + level.theta[nu] * level.theta[mu];
      const CMat target = id * cd(2.0 * fourvec::minkowski(mu, nu), 0);
      worst = std::max(worst, anti.max_abs_diff(target));
    }
  return worst;
}

const GammaBasis& gamma_basis() {
  static const GammaBasis basis = [] {
    GammaBasis b;
    const CliffordLevel g = clifford_level(2);
    int k = 0;
    b.elems[k] = CMat::identity(4);
    b.names[k++] = "I";
    for (int mu = 0; mu < 4; ++mu) {
      b.elems[k] = g.theta[mu];
      b.names[k++] = "g" + std::to_string(mu);
    }
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu) {
        b.elems[k] = g.theta[mu] * g.theta[nu];
        b.names[k++] = "g" + std::to_string(mu) + "g" + std::to_string(nu);
      }
    const CMat g5 = (g.theta[0] * g.theta[1] * g.theta[2] * g.theta[3]) * cd(0, 1);
    for (int mu = 0; mu < 4; ++mu) {
      b.elems[k] = g5 * g.theta[mu];
      b.names[k++] = "g5g" + std::to_string(mu);
    }
    b.elems[k] = g5;
    b.names[k++] = "g5";
    return b;
  }();
  return basis;
}

std::array<cd, 16> gamma_basis_decompose(const CMat& m) {
  if (m.rows() != 4 || m.cols() != 4) throw DimensionError("", "gamma decomposition needs a 4x4 matrix");
  const GammaBasis& b = gamma_basis();
  std::array<cd, 16> out;
  for (int k = 0; k < 16; ++k) {
    const CMat bd = b.elems[k].adjoint();
    out[k] = (bd * m).trace() / (bd * b.elems[k]).trace();
  }
  return out;
}

CMat gamma_basis_reconstruct(const std::array<cd, 16>& coeffs) {
  const GammaBasis& b = gamma_basis();
  CMat m = CMat::zero(4);
  for (int k = 0; k < 16; ++k) m += b.elems[k] * coeffs[k];
  return m;
}

EnergyClass classify_energy(const std::array<cd, 4>& spinor, double tol) {
  double norm = 0.0;
  for (const cd& v : spinor) norm = std::max(norm, std::abs(v));
  if (norm == 0.0) throw std::invalid_argument("classify_energy: zero spinor");
  const bool upper = std::abs(spinor[0]) > tol * norm || std::abs(spinor[1]) > tol * norm;
  const bool lower = std::abs(spinor[2]) > tol * norm || std::abs(spinor[3]) > tol * norm;
  if (upper && lower) return EnergyClass::Mixed;
  return upper ? EnergyClass::Positive : EnergyClass::Negative;
}

const char* energy_class_name(EnergyClass c) {
  switch (c) {
    case EnergyClass::Positive: return "positive";
    case EnergyClass::Negative: return "negative";
    default: return "mixed";
  }
}

} // namespace d4v::cliffgen
