#include <doctest.h>

#include <array>
#include <vector>

#include "dirac4v/kernels.hpp"
#include "helpers.hpp"

using namespace d4v;
using namespace d4v::kernels;

namespace {
std::vector<cd> random_buf(size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> g;
  std::vector<cd> v(n);
  for (cd& x : v) x = cd(g(gen), g(gen));
  return v;
}
double max_diff(const std::vector<cd>& a, const std::vector<cd>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}
} // namespace

TEST_CASE("matmul: omp path reproduces the serial reference") {
  auto gen = testutil::rng(2024);
  for (auto dims : {std::array<int, 3>{3, 5, 7}, {64, 64, 64}, {129, 65, 33}, {200, 1, 200}}) {
    const int m = dims[0], k = dims[1], n = dims[2];
    const auto A = random_buf((size_t)m * k, gen), B = random_buf((size_t)k * n, gen);
    std::vector<cd> Cs((size_t)m * n), Cp((size_t)m * n);
    matmul_serial(A.data(), B.data(), Cs.data(), m, k, n);
    matmul_omp(A.data(), B.data(), Cp.data(), m, k, n);
    CHECK(max_diff(Cs, Cp) == 0.0);
  }
}

TEST_CASE("kron: omp path reproduces the serial reference") {
  auto gen = testutil::rng(7);
  const int ma = 12, na = 9, mb = 7, nb = 15;
  const auto A = random_buf((size_t)ma * na, gen), B = random_buf((size_t)mb * nb, gen);
  std::vector<cd> Cs((size_t)ma * na * mb * nb), Cp(Cs.size());
  kron_serial(A.data(), ma, na, B.data(), mb, nb, Cs.data());
  kron_omp(A.data(), ma, na, B.data(), mb, nb, Cp.data());
  CHECK(max_diff(Cs, Cp) == 0.0);
  // spot-check the definition on one entry
  const int ia = 3, ja = 2, ib = 4, jb = 11;
  CHECK(Cs[(size_t)(ia * mb + ib) * (na * nb) + (ja * nb + jb)] == A[ia * na + ja] * B[ib * nb + jb]);
}

TEST_CASE("fd4: omp path reproduces the serial reference and is 4th order") {
  const int npts = 4001, comps = 2;
  std::vector<cd> f((size_t)npts * comps);
  const double h = 2.0 / (npts - 1);
  for (int i = 0; i < npts; ++i) {
    const double t = -1.0 + i * h;
    f[(size_t)i * comps] = std::exp(cd(0, 3.0) * t);
    f[(size_t)i * comps + 1] = std::sin(2.0 * t);
  }
  std::vector<cd> ds(f.size()), dp(f.size());
  fd4_serial(f.data(), ds.data(), npts, comps, h);
  fd4_omp(f.data(), dp.data(), npts, comps, h);
  CHECK(max_diff(ds, dp) == 0.0);
  double err = 0.0;
  for (int i = 2; i < npts - 2; ++i) {
    const double t = -1.0 + i * h;
    err = std::max(err, std::abs(ds[(size_t)i * comps] - cd(0, 3.0) * std::exp(cd(0, 3.0) * t)));
  }
  CHECK(err <= 1e-10);
}

TEST_CASE("hermite batch: omp path reproduces the serial reference") {
  std::vector<double> xi(801);
  for (size_t i = 0; i < xi.size(); ++i) xi[i] = -8.0 + 16.0 * i / (xi.size() - 1);
  const int nmax = 50;
  std::vector<double> a((size_t)(nmax + 1) * xi.size()), b(a.size());
  hermite_batch_serial(xi.data(), (int)xi.size(), nmax, a.data());
  hermite_batch_omp(xi.data(), (int)xi.size(), nmax, b.data());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  // psi_0 at 0 is pi^(-1/4); no overflow anywhere up to n = 50
  CHECK(a[400] == doctest::Approx(0.7511255444649425).epsilon(1e-14));
  for (double v : a) CHECK(std::abs(v) < 1.0);
}

TEST_CASE("unitarity defect") {
  auto gen = testutil::rng(4);
  const CMat u = testutil::random_unitary(6, gen);
  CHECK(unitarity_defect(u.data(), 6) <= 1e-13);
  CMat bad = u;
  bad(0, 0) += 0.01;
  CHECK(unitarity_defect(bad.data(), 6) > 1e-3);
}
