// Timing comparison of the serial reference kernels against the OpenMP ones.
// Usage: bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include <omp.h>

#include "dirac4v/kernels.hpp"

using d4v::kernels::cd;

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_best(F&& f, int repeats) {
  double best = 1e100;
  for (int r = 0; r < repeats; ++r) {
    const double t0 = now_ms();
    f();
    best = std::min(best, now_ms() - t0);
  }
  return best;
}

std::vector<cd> random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cd> m((size_t)n * n);
  for (cd& v : m) v = cd(g(rng), g(rng));
  return m;
}

void report(const char* name, double serial_ms, double omp_ms) {
  std::printf("%-28s serial %9.3f ms   omp %9.3f ms   speedup %.2fx\n", name, serial_ms, omp_ms,
              serial_ms / omp_ms);
}

} // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 5;
  std::mt19937_64 rng(12345);
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    const int n = 384;
    const auto A = random_matrix(n, rng), B = random_matrix(n, rng);
    std::vector<cd> C((size_t)n * n);
    using namespace d4v::kernels;
    const double ts = time_best([&] { matmul_serial(A.data(), B.data(), C.data(), n, n, n); }, repeats);
    const double tp = time_best([&] { matmul_omp(A.data(), B.data(), C.data(), n, n, n); }, repeats);
    report("matmul 384x384", ts, tp);
  }
  {
    const int n = 128;
    const auto A = random_matrix(n, rng), B = random_matrix(n, rng);
    std::vector<cd> C((size_t)n * n * n * n);
    using namespace d4v::kernels;
    const double ts = time_best([&] { kron_serial(A.data(), n, n, B.data(), n, n, C.data()); }, repeats);
    const double tp = time_best([&] { kron_omp(A.data(), n, n, B.data(), n, n, C.data()); }, repeats);
    report("kron 128 (x) 128", ts, tp);
  }
  {
    const int npts = 1 << 20;
    std::vector<cd> f(npts * 2), df(npts * 2);
    std::normal_distribution<double> g;
    for (cd& v : f) v = cd(g(rng), g(rng));
    using namespace d4v::kernels;
    const double ts = time_best([&] { fd4_serial(f.data(), df.data(), npts, 2, 1e-3); }, repeats);
    const double tp = time_best([&] { fd4_omp(f.data(), df.data(), npts, 2, 1e-3); }, repeats);
    report("fd4 2^20 x 2 comps", ts, tp);
  }
  {
    const int npts = 200000, nmax = 60;
    std::vector<double> xi(npts), out((size_t)(nmax + 1) * npts);
    for (int i = 0; i < npts; ++i) xi[i] = -8.0 + 16.0 * i / (npts - 1);
    using namespace d4v::kernels;
    const double ts = time_best([&] { hermite_batch_serial(xi.data(), npts, nmax, out.data()); }, repeats);
    const double tp = time_best([&] { hermite_batch_omp(xi.data(), npts, nmax, out.data()); }, repeats);
    report("hermite 200k x 61", ts, tp);
  }
  return 0;
}
