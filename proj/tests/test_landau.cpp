#include <doctest.h>

#include <cmath>

#include "dirac4v/landau.hpp"

using namespace d4v;
using namespace d4v::landau;

TEST_CASE("analytic spectrum") {
  LandauConfig cfg;
  cfg.Nmax = 4;
  const auto spec = landau_spectrum(cfg);
  REQUIRE(spec.size() == 5);
  CHECK(spec[0].eps_plus == 0.0);
  CHECK(spec[0].eps_minus == 0.0);
  const double wc = cfg.omega_c();
  CHECK(wc == doctest::Approx(std::sqrt(2.0)));
  CHECK(spec[1].eps_plus == doctest::Approx(std::sqrt(2.0)));
  CHECK(spec[2].eps_plus == doctest::Approx(2.0));
  CHECK(spec[3].eps_plus == doctest::Approx(std::sqrt(6.0)));
  // sqrt(N) scaling holds exactly on the analytic path
  CHECK(spec[4].eps_plus / spec[1].eps_plus == doctest::Approx(2.0).epsilon(1e-14));
  for (const auto& lv : spec) CHECK(lv.eps_plus == -lv.eps_minus);
}

TEST_CASE("config validation and derived quantities") {
  LandauConfig cfg;
  cfg.Bfield = 4.0;
  CHECK(cfg.lB() == doctest::Approx(0.5));
  CHECK(cfg.omega_c() == doctest::Approx(2.0 * std::sqrt(2.0)));
  cfg.Bfield = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.Bfield = 1.0;
  cfg.Nmax = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("oscillator functions are orthonormal on the grid") {
  std::vector<double> xi(1501);
  for (size_t i = 0; i < xi.size(); ++i) xi[i] = -10.0 + 20.0 * i / (xi.size() - 1);
  const double h = xi[1] - xi[0];
  const auto psi = oscillator_functions(xi, 6);
  for (int a = 0; a <= 6; ++a)
    for (int b = a; b <= 6; ++b) {
      double ip = 0.0;
      for (size_t i = 0; i < xi.size(); ++i) ip += psi[a * xi.size() + i] * psi[b * xi.size() + i] * h;
      CHECK(ip == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-8));
    }
}

TEST_CASE("eigenvectors pair adjacent oscillator levels") {
  LandauConfig cfg;
  cfg.grid_points = 1200;
  const SpinorGrid zero = landau_eigenvector(0, +1, cfg);
  const int npts = (int)zero.xi.size();
  // zero mode sits on the lower component only
  for (int i = 0; i < npts; ++i) CHECK(std::abs(zero.values[(size_t)i * 2]) == 0.0);

  const SpinorGrid plus = landau_eigenvector(1, +1, cfg);
  const SpinorGrid minus = landau_eigenvector(1, -1, cfg);
  // componentwise (psi_0, psi_1)/sqrt(2) for the + branch
  {
    const auto psi = oscillator_functions(plus.xi, 1);
    const double r = 1.0 / std::sqrt(2.0);
    double worst = 0.0;
    for (size_t i = 0; i < plus.xi.size(); ++i) {
      worst = std::max(worst, std::abs(plus.values[i * 2] - cd(r * psi[i], 0)));
      worst = std::max(worst, std::abs(plus.values[i * 2 + 1] - cd(r * psi[plus.xi.size() + i], 0)));
    }
    CHECK(worst <= 1e-10);
  }
  // branches are orthogonal under the grid inner product
  cd ip(0, 0);
  const double h = plus.xi[1] - plus.xi[0];
  for (int i = 0; i < npts; ++i)
    for (int c = 0; c < 2; ++c)
      ip += std::conj(plus.values[(size_t)i * 2 + c]) * minus.values[(size_t)i * 2 + c] * h;
  CHECK(std::abs(ip) <= 1e-8);
  // each normalized to one
  double nrm = 0.0;
  for (const cd& v : plus.values) nrm += std::norm(v);
  CHECK(nrm * h == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(landau_eigenvector(-1, +1, cfg), std::invalid_argument);
}

TEST_CASE("finite-difference verification at the working grid") {
  LandauConfig cfg;
  cfg.grid_points = 4000;
  cfg.Nmax = 5;
  const FdReport rep = verify_spectrum_fd(cfg);
  CHECK(rep.grid_resolved);
  CHECK(rep.zero_mode_abs <= 1e-3 * rep.omega_c);
  CHECK(rep.pair_symmetry <= 1e-8 * rep.omega_c);
  for (double e : rep.level_rel_error) CHECK(e <= 0.01);
  for (double e : rep.ladder_down_error) CHECK(e <= 1e-6);
  for (double e : rep.ladder_up_error) CHECK(e <= 1e-6);
  CHECK(rep.ladder_eigen_error <= 1e-6);
}

TEST_CASE("spectrum verification holds away from default parameters") {
  LandauConfig cfg;
  cfg.Bfield = 2.0;
  cfg.vF = 1.5;
  cfg.k = 0.7;
  cfg.grid_points = 3000;
  cfg.Nmax = 3;
  const FdReport rep = verify_spectrum_fd(cfg);
  CHECK(rep.zero_mode_abs <= 1e-3 * rep.omega_c);
  for (double e : rep.level_rel_error) CHECK(e <= 0.01);
}

TEST_CASE("doubling the grid cuts the level error at second order") {
  LandauConfig coarse;
  coarse.grid_points = 1000;
  coarse.Nmax = 3;
  LandauConfig fine = coarse;
  fine.grid_points = 2000;
  const FdReport rc = verify_spectrum_fd(coarse);
  const FdReport rf = verify_spectrum_fd(fine);
  for (int k = 0; k < 3; ++k) CHECK(rc.level_rel_error[k] / rf.level_rel_error[k] >= 2.0);
}

TEST_CASE("under-resolved extent is flagged") {
  LandauConfig cfg;
  cfg.Nmax = 5;
  cfg.extent = 4.0; // far below the resolved default
  cfg.grid_points = 2000;
  const FdReport rep = verify_spectrum_fd(cfg);
  CHECK_FALSE(rep.grid_resolved);
}
