#include "dirac4v/landau.hpp"

#include <cmath>
#include <stdexcept>

#include <lapacke.h>

#include "dirac4v/kernels.hpp"

namespace d4v::landau {

double LandauConfig::lB() const { return 1.0 / std::sqrt(Bfield); }
double LandauConfig::omega_c() const { return std::sqrt(2.0) * vF / lB(); }
double LandauConfig::xi_extent() const {
  return extent > 0.0 ? extent : 2.0 * std::sqrt(2.0 * Nmax) + 4.0;
}

void LandauConfig::validate() const {
  if (Bfield <= 0.0) throw std::invalid_argument("LandauConfig: Bfield must be positive");
  if (vF <= 0.0) throw std::invalid_argument("LandauConfig: vF must be positive");
  if (Nmax < 1) throw std::invalid_argument("LandauConfig: Nmax must be at least 1");
  if (grid_points < 16) throw std::invalid_argument("LandauConfig: grid too coarse");
}

std::vector<LandauLevel> landau_spectrum(const LandauConfig& cfg) {
  cfg.validate();
  const double wc = cfg.omega_c();
  std::vector<LandauLevel> out;
  out.reserve(cfg.Nmax + 1);
  out.push_back({0, 0.0, 0.0});
  for (int N = 1; N <= cfg.Nmax; ++N) {
    const double e = wc * std::sqrt((double)N);
    out.push_back({N, e, -e});
  }
  return out;
}

std::vector<double> oscillator_functions(const std::vector<double>& xi, int nmax) {
  std::vector<double> out((size_t)(nmax + 1) * xi.size());
  kernels::hermite_batch(xi.data(), (int)xi.size(), nmax, out.data());
  return out;
}

namespace {
std::vector<double> xi_grid(const LandauConfig& cfg) {
  const double L = cfg.xi_extent();
  std::vector<double> xi(cfg.grid_points);
  const double h = 2.0 * L / (cfg.grid_points - 1);
  for (int i = 0; i < cfg.grid_points; ++i) xi[i] = -L + i * h;
  return xi;
}
} // namespace

SpinorGrid landau_eigenvector(int N, int sign, const LandauConfig& cfg) {
  cfg.validate();
  if (N < 0) throw std::invalid_argument("landau_eigenvector: N must be non-negative");
  SpinorGrid sg;
  sg.xi = xi_grid(cfg);
  const int npts = (int)sg.xi.size();
  sg.values.assign((size_t)npts * 2, cd(0, 0));
  const std::vector<double> psi = oscillator_functions(sg.xi, std::max(N, 1));
  if (N == 0) {
    for (int i = 0; i < npts; ++i) sg.values[(size_t)i * 2 + 1] = psi[i]; // (0, psi_0)
  } else {
    const double* up = psi.data() + (size_t)(N - 1) * npts;
    const double* dn = psi.data() + (size_t)N * npts;
    const double s = sign >= 0 ? 1.0 : -1.0;
    for (int i = 0; i < npts; ++i) {
      sg.values[(size_t)i * 2] = up[i];
      sg.values[(size_t)i * 2 + 1] = s * dn[i];
    }
  }
  // normalize under the grid inner product
  const double h = sg.xi[1] - sg.xi[0];
  double nrm = 0.0;
  for (const cd& v : sg.values) nrm += std::norm(v);
  nrm = std::sqrt(nrm * h);
  for (cd& v : sg.values) v = v * (1.0 / nrm);
  return sg;
}

std::vector<double> fd_eigenvalues(const LandauConfig& cfg) {
  cfg.validate();
  const double lB = cfg.lB();
  const int npts = cfg.grid_points;
  const double L = cfg.xi_extent() * lB; // half-width in y
  const double y0 = cfg.k * lB * lB;     // guiding center
  const double h = 2.0 * L / (npts - 1);

  // Interleaved components (A_0, B_0, A_1, B_1, ...); couplings
  //   A_i ~ B_i     : vF * W(y_i),          W = k - B y
  //   A_i ~ B_{i+1} : -vF / (2h)
  //   A_i ~ B_{i-1} : +vF / (2h)
  // give a real symmetric band matrix with bandwidth 3 (lower storage).
  const int n = 2 * npts;
  const int kd = 3;
  std::vector<double> ab((size_t)(kd + 1) * n, 0.0); // column-major banded: ab[r - c + kd*? ]
  // LAPACK lower band, column-major: AB(1 + i - j, j) = A(i, j), 0-based: ab[(i - j) + ldab*j]
  const int ldab = kd + 1;
  const double w = cfg.vF / (2.0 * h);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < npts; ++i) {
    const double y = y0 - L + i * h;
    const double Wv = cfg.vF * (cfg.k - cfg.Bfield * y);
    const int a = 2 * i, b = 2 * i + 1;
    ab[(size_t)(b - a) + (size_t)ldab * a] += Wv; // A_i ~ B_i, row b col a
    if (i + 1 < npts) {
      const int b1 = 2 * (i + 1) + 1;
      ab[(size_t)(b1 - a) + (size_t)ldab * a] += -w; // row B_{i+1}, col A_i
      const int a1 = 2 * (i + 1);
      ab[(size_t)(a1 - b) + (size_t)ldab * b] += w; // row A_{i+1}, col B_i  (A_{i+1} ~ B_i: +w)
    }
  }

  std::vector<double> evals(n);
  const lapack_int info = LAPACKE_dsbev(LAPACK_COL_MAJOR, 'N', 'L', n, kd, ab.data(), ldab, evals.data(), nullptr, 1);
  if (info != 0) throw std::runtime_error("fd_eigenvalues: dsbev failed");
  return evals; // ascending
}

FdReport verify_spectrum_fd(const LandauConfig& cfg) {
  cfg.validate();
  FdReport rep;
  rep.omega_c = cfg.omega_c();
  rep.grid_resolved = cfg.xi_extent() >= 2.0 * std::sqrt(2.0 * cfg.Nmax) + 4.0 - 1e-12;

  const std::vector<double> evals = fd_eigenvalues(cfg);
  const int n = (int)evals.size();

  double zero = std::abs(evals[0]);
  for (double e : evals) zero = std::min(zero, std::abs(e));
  rep.zero_mode_abs = zero;

  double sym = 0.0;
  for (int i = 0; i < n / 2; ++i) sym = std::max(sym, std::abs(evals[i] + evals[n - 1 - i]));
  rep.pair_symmetry = sym;

  for (int N = 1; N <= cfg.Nmax; ++N) {
    const double target = rep.omega_c * std::sqrt((double)N);
    double best = std::abs(evals[0] - target);
    for (double e : evals) best = std::min(best, std::abs(e - target));
    rep.level_rel_error.push_back(best / target);
  }

  // Ladder identities with O = (d_xi + xi)/sqrt(2) on sampled psi_N.
  const std::vector<double> xi = xi_grid(cfg);
  const int npts = (int)xi.size();
  const double h = xi[1] - xi[0];
  const int nmax = cfg.Nmax + 1;
  const std::vector<double> psi = oscillator_functions(xi, nmax);
  std::vector<cd> f(npts), df(npts);
  auto deriv = [&](const double* src) {
    for (int i = 0; i < npts; ++i) f[i] = src[i];
    kernels::fd4(f.data(), df.data(), npts, 1, h);
  };
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int N = 1; N <= cfg.Nmax; ++N) {
    deriv(psi.data() + (size_t)N * npts);
    double down = 0.0, up = 0.0;
    for (int i = 2; i < npts - 2; ++i) {
      const double o = inv_sqrt2 * (df[i].real() + xi[i] * psi[(size_t)N * npts + i]);
      down = std::max(down, std::abs(o - std::sqrt((double)N) * psi[(size_t)(N - 1) * npts + i]));
      const double od = inv_sqrt2 * (-df[i].real() + xi[i] * psi[(size_t)N * npts + i]);
      up = std::max(up, std::abs(od - std::sqrt((double)N + 1) * psi[(size_t)(N + 1) * npts + i]));
    }
    rep.ladder_down_error.push_back(down);
    rep.ladder_up_error.push_back(up);
  }

  // Ladder-form operator [[0, O], [O^dag, 0]] on phi_{N,+-} has eigenvalue
  // +-sqrt(N); check the worst interior deviation for N <= Nmax.
  double leig = 0.0;
  for (int N = 1; N <= cfg.Nmax; ++N) {
    for (int sign : {+1, -1}) {
      const SpinorGrid sp = landau_eigenvector(N, sign, cfg);
      std::vector<cd> upc(npts), dnc(npts), dup(npts), ddn(npts);
      for (int i = 0; i < npts; ++i) {
        upc[i] = sp.values[(size_t)i * 2];
        dnc[i] = sp.values[(size_t)i * 2 + 1];
      }
      kernels::fd4(upc.data(), dup.data(), npts, 1, h);
      kernels::fd4(dnc.data(), ddn.data(), npts, 1, h);
      const double lam = sign * std::sqrt((double)N);
      double scale = 0.0;
      for (int i = 0; i < npts; ++i) scale = std::max(scale, std::abs(sp.values[(size_t)i * 2]));
      for (int i = 2; i < npts - 2; ++i) {
        const cd o_dn = inv_sqrt2 * (ddn[i] + xi[i] * dnc[i]);        // O acting on the lower component
        const cd od_up = inv_sqrt2 * (-dup[i] + xi[i] * upc[i]);      // O^dag on the upper one
        leig = std::max(leig, std::abs(o_dn - lam * upc[i]) / scale);
        leig = std::max(leig, std::abs(od_up - lam * dnc[i]) / scale);
      }
    }
  }
  rep.ladder_eigen_error = leig;
  return rep;
}

} // namespace d4v::landau
