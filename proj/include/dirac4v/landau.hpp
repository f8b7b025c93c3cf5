#pragma once

#include <vector>

#include "dirac4v/cmat.hpp"

// Massless Dirac fermion in a uniform perpendicular magnetic field, units
// hbar = c = e = 1. With the magnetic length l_B = 1/sqrt(B) and cyclotron
// frequency w_c = sqrt(2) vF / l_B, the spectrum is eps_{+-}(N) = +- w_c
// sqrt(N) with a single zero mode at N = 0; eigenvectors pair adjacent
// oscillator functions, phi_{N,+-} = (psi_{N-1}, +- psi_N)/sqrt(2) in the
// dimensionless coordinate xi = y/l_B - l_B k.
//
// verify_spectrum_fd discretizes  vF [ -i sigma_y d/dy + (k - B y) sigma_x ]
// with a second-order central stencil. Interleaving the two spinor components
// point by point makes the operator a real symmetric banded matrix of
// bandwidth 3, which LAPACK's dsbev diagonalizes in O(n^2). The discrete
// spectrum is exactly symmetric (chiral pairing survives discretization), so
// +-pair symmetry is checked to roundoff, and per-level accuracy is measured
// against the nearest computed eigenvalue.

namespace d4v::landau {

// Graphene's Fermi velocity in SI units, for callers producing unit-carrying
// output. The library itself works in model units with vF defaulting to 1.
inline constexpr double kFermiVelocitySI = 1.0e6; // m/s

struct LandauConfig {
  double vF = 1.0;
  double Bfield = 1.0;
  double k = 0.0;
  int Nmax = 5;
  int grid_points = 4000;
  double extent = 0.0; // xi half-width; 0 means the resolved default 2 sqrt(2 Nmax) + 4

  double lB() const;
  double omega_c() const;
  double xi_extent() const;
  void validate() const; // throws std::invalid_argument on bad parameters
};

struct LandauLevel {
  int N;
  double eps_plus;
  double eps_minus;
};

// Analytic levels for N = 0..Nmax; the N = 0 entry is exactly zero.
std::vector<LandauLevel> landau_spectrum(const LandauConfig& cfg);

// Normalized oscillator functions psi_0..psi_nmax on the given xi grid,
// row-major: psi[n * npts + i].
std::vector<double> oscillator_functions(const std::vector<double>& xi, int nmax);

// Grid-sampled 2-spinor for level N; sign +1/-1 picks the branch, N = 0
// returns the zero mode (0, psi_0). Normalized to 1 under the grid inner
// product. Layout: point-major, 2 components per point.
struct SpinorGrid {
  std::vector<double> xi;
  std::vector<cd> values;
};
SpinorGrid landau_eigenvector(int N, int sign, const LandauConfig& cfg);

struct FdReport {
  double omega_c = 0.0;
  double zero_mode_abs = 0.0;       // |eps| of the eigenvalue nearest zero
  double pair_symmetry = 0.0;       // max |eps_k + eps_{n-1-k}|
  std::vector<double> level_rel_error;   // per N = 1..Nmax vs w_c sqrt(N)
  std::vector<double> ladder_down_error; // || O psi_N - sqrt(N) psi_{N-1} ||_inf
  std::vector<double> ladder_up_error;   // || O^dag psi_N - sqrt(N+1) psi_{N+1} ||_inf
  double ladder_eigen_error = 0.0;  // ladder-form operator on phi_{N,+-} vs +-sqrt(N)
  bool grid_resolved = true;
};

// Finite-difference verification of the analytic spectrum plus the ladder
// identities O psi_N = sqrt(N) psi_{N-1}, O^dag psi_N = sqrt(N+1) psi_{N+1}
// with O = (d_xi + xi)/sqrt(2), evaluated with fourth-order differences.
FdReport verify_spectrum_fd(const LandauConfig& cfg);

// Eigenvalues of the discretized operator, ascending. Exposed for tests.
std::vector<double> fd_eigenvalues(const LandauConfig& cfg);

} // namespace d4v::landau
