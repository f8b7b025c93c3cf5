#pragma once

#include <array>
#include <complex>
#include <vector>

#include "dirac4v/cmat.hpp"

// Generalized Pauli-Dirac matrix hierarchy theta_0..theta_3 at dimension 2^n:
// sigma (2x2), gamma (4x4), then doubled representations (8x8, 16x16, ...).
//
// For n >= 2 the four matrices satisfy the space-time Clifford relations
// {theta^mu, theta^nu} = 2 eta^{mu nu} I with eta = diag(+,-,-,-). The n = 1
// level is the Pauli base case: no 2x2 representation of those relations
// exists (any matrix anticommuting with all three sigma_k is zero), so level
// one ships the Pauli matrices themselves, which close under the Euclidean
// relations {sigma_i, sigma_j} = 2 delta_ij I with sigma_0 the identity
// companion.
//
// Construction: level 2 is the Dirac representation (gamma^0 = s3 (x) s0,
// gamma^k = i s2 (x) s_k); levels above double by theta -> theta (x) s3,
// which preserves the anticommutators. No particular closed form is promised
// beyond the level-1/level-2 anchors and the Clifford contract.

namespace d4v::cliffgen {

struct CliffordLevel {
  int n = 0;   // qubit count
  int dim = 0; // 2^n
  std::array<CMat, 4> theta;
};

// Resource bound: 1 <= n <= 8 (dim 256); throws ResourceBoundError beyond.
CliffordLevel clifford_level(int n);

// max |{theta_mu, theta_nu} - 2 eta_{mu nu} I| over all mu, nu pairs.
// Meaningful for n >= 2; level 1 fails the mu=0 rows by construction.
double clifford_defect(const CliffordLevel& level);

// The 16 trace-orthogonal basis elements of the 4x4 gamma level:
// {I, gamma^mu, gamma^mu gamma^nu (mu<nu), gamma^5 gamma^mu, gamma^5}.
struct GammaBasis {
  std::array<CMat, 16> elems;
  std::array<std::string, 16> names;
};
const GammaBasis& gamma_basis();

// Projection of a 4x4 matrix onto the 16-element gamma basis; coefficients
// by trace inner product, reconstruction sum_k coeff_k B_k is exact.
std::array<cd, 16> gamma_basis_decompose(const CMat& m);
CMat gamma_basis_reconstruct(const std::array<cd, 16>& coeffs);

enum class EnergyClass { Positive, Negative, Mixed };

// Rest-frame classification of a 4-spinor by gamma^0 eigenspace support:
// components {0,1} carry the positive branch, {2,3} the negative one.
// Throws std::invalid_argument for the zero vector.
EnergyClass classify_energy(const std::array<cd, 4>& spinor, double tol = 1e-12);

const char* energy_class_name(EnergyClass c);

} // namespace d4v::cliffgen
