#include "dirac4v/kernels.hpp"

#include <cmath>
#include <cstring>

namespace d4v::kernels {

namespace {
// Below this dimension a parallel region costs more than the loop body.
constexpr int kMatmulParallelDim = 64;
constexpr long kElemParallelCount = 1 << 15;
} // namespace

void matmul_serial(const cd* A, const cd* B, cd* C, int m, int k, int n) {
  for (int i = 0; i < m; ++i) {
    cd* Ci = C + (long)i * n;
    for (int j = 0; j < n; ++j) Ci[j] = cd(0.0, 0.0);
    for (int p = 0; p < k; ++p) {
      const cd a = A[(long)i * k + p];
      if (a == cd(0.0, 0.0)) continue;
      const cd* Bp = B + (long)p * n;
      for (int j = 0; j < n; ++j) Ci[j] += a * Bp[j];
    }
  }
}

void matmul_omp(const cd* A, const cd* B, cd* C, int m, int k, int n) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i) {
    cd* Ci = C + (long)i * n;
    for (int j = 0; j < n; ++j) Ci[j] = cd(0.0, 0.0);
    for (int p = 0; p < k; ++p) {
      const cd a = A[(long)i * k + p];
      if (a == cd(0.0, 0.0)) continue;
      const cd* Bp = B + (long)p * n;
      for (int j = 0; j < n; ++j) Ci[j] += a * Bp[j];
    }
  }
}

void matmul(const cd* A, const cd* B, cd* C, int m, int k, int n) {
  if (m >= kMatmulParallelDim && (long)k * n >= kMatmulParallelDim)
    matmul_omp(A, B, C, m, k, n);
  else
    matmul_serial(A, B, C, m, k, n);
}

void kron_serial(const cd* A, int ma, int na, const cd* B, int mb, int nb, cd* C) {
  const int nc = na * nb;
  for (int ia = 0; ia < ma; ++ia)
    for (int ib = 0; ib < mb; ++ib) {
      cd* row = C + (long)(ia * mb + ib) * nc;
      const cd* Brow = B + (long)ib * nb;
      for (int ja = 0; ja < na; ++ja) {
        const cd a = A[(long)ia * na + ja];
        cd* dst = row + ja * nb;
        for (int jb = 0; jb < nb; ++jb) dst[jb] = a * Brow[jb];
      }
    }
}

void kron_omp(const cd* A, int ma, int na, const cd* B, int mb, int nb, cd* C) {
  const int nc = na * nb;
#pragma omp parallel for collapse(2) schedule(static)
  for (int ia = 0; ia < ma; ++ia)
    for (int ib = 0; ib < mb; ++ib) {
      cd* row = C + (long)(ia * mb + ib) * nc;
      const cd* Brow = B + (long)ib * nb;
      for (int ja = 0; ja < na; ++ja) {
        const cd a = A[(long)ia * na + ja];
        cd* dst = row + ja * nb;
        for (int jb = 0; jb < nb; ++jb) dst[jb] = a * Brow[jb];
      }
    }
}

void kron(const cd* A, int ma, int na, const cd* B, int mb, int nb, cd* C) {
  if ((long)ma * na * mb * nb >= kElemParallelCount)
    kron_omp(A, ma, na, B, mb, nb, C);
  else
    kron_serial(A, ma, na, B, mb, nb, C);
}

double unitarity_defect(const cd* A, int n) {
  // row i of A^dag A = sum_p conj(A[p][i]) A[p][j]; accumulate the max
  // deviation from identity without materializing the product.
  double defect = 0.0;
#pragma omp parallel for reduction(max : defect) schedule(static) if (n >= kMatmulParallelDim)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cd s(0.0, 0.0);
      for (int p = 0; p < n; ++p) s += std::conj(A[(long)p * n + i]) * A[(long)p * n + j];
      if (i == j) s -= 1.0;
      const double m = std::abs(s);
      if (m > defect) defect = m;
    }
  }
  return defect;
}

namespace {
inline void fd4_point(const cd* f, cd* df, int npts, int comps, double h, int i) {
  const double w = 1.0 / (12.0 * h);
  for (int c = 0; c < comps; ++c) {
    if (i >= 2 && i < npts - 2) {
      df[(long)i * comps + c] = w * (-f[(long)(i + 2) * comps + c] + 8.0 * f[(long)(i + 1) * comps + c] -
                                     8.0 * f[(long)(i - 1) * comps + c] + f[(long)(i - 2) * comps + c]);
    } else {
      // one-sided two-point fallback at the edges; callers inspect interior only
      const int a = (i == 0) ? 0 : i - 1;
      const int b = (i == npts - 1) ? npts - 1 : i + 1;
      df[(long)i * comps + c] = (f[(long)b * comps + c] - f[(long)a * comps + c]) / ((b - a) * h);
    }
  }
}
} // namespace

void fd4_serial(const cd* f, cd* df, int npts, int comps, double h) {
  for (int i = 0; i < npts; ++i) fd4_point(f, df, npts, comps, h, i);
}

void fd4_omp(const cd* f, cd* df, int npts, int comps, double h) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < npts; ++i) fd4_point(f, df, npts, comps, h, i);
}

void fd4(const cd* f, cd* df, int npts, int comps, double h) {
  if ((long)npts * comps >= kElemParallelCount)
    fd4_omp(f, df, npts, comps, h);
  else
    fd4_serial(f, df, npts, comps, h);
}

namespace {
inline void hermite_column(double x, int nmax, double* col, long stride) {
  // psi_0 = pi^(-1/4) exp(-x^2/2); psi_{n+1} = sqrt(2/(n+1)) x psi_n - sqrt(n/(n+1)) psi_{n-1}
  const double p0 = 0.7511255444649425; // pi^(-1/4)
  double pm1 = 0.0;
  double p = p0 * std::exp(-0.5 * x * x);
  col[0] = p;
  for (int n = 0; n < nmax; ++n) {
    const double pn1 = std::sqrt(2.0 / (n + 1)) * x * p - std::sqrt((double)n / (n + 1)) * pm1;
    pm1 = p;
    p = pn1;
    col[(long)(n + 1) * stride] = p;
  }
}
} // namespace

void hermite_batch_serial(const double* xi, int npts, int nmax, double* out) {
  for (int i = 0; i < npts; ++i) hermite_column(xi[i], nmax, out + i, npts);
}

void hermite_batch_omp(const double* xi, int npts, int nmax, double* out) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < npts; ++i) hermite_column(xi[i], nmax, out + i, npts);
}

void hermite_batch(const double* xi, int npts, int nmax, double* out) {
  if ((long)npts * (nmax + 1) >= kElemParallelCount)
    hermite_batch_omp(xi, npts, nmax, out);
  else
    hermite_batch_serial(xi, npts, nmax, out);
}

} // namespace d4v::kernels
