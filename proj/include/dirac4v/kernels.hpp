#pragma once

#include <complex>
#include <cstddef>

// Low-level data-parallel kernels. Every kernel comes in a _serial variant
// (reference implementation, kept for testing) and an _omp variant. The
// unsuffixed entry point dispatches on problem size so small matrices do not
// pay the fork/join cost.

namespace d4v::kernels {

using cd = std::complex<double>;

// C = A(m x k) * B(k x n), row-major dense.
void matmul_serial(const cd* A, const cd* B, cd* C, int m, int k, int n);
void matmul_omp(const cd* A, const cd* B, cd* C, int m, int k, int n);
void matmul(const cd* A, const cd* B, cd* C, int m, int k, int n);

// C = A(ma x na) (x) B(mb x nb), row-major dense Kronecker product.
void kron_serial(const cd* A, int ma, int na, const cd* B, int mb, int nb, cd* C);
void kron_omp(const cd* A, int ma, int na, const cd* B, int mb, int nb, cd* C);
void kron(const cd* A, int ma, int na, const cd* B, int mb, int nb, cd* C);

// max_ij |(A^dag A - I)_ij| for a square n x n matrix.
double unitarity_defect(const cd* A, int n);

// Fourth-order central difference of a grid-sampled field with `comps`
// components per point (layout: point-major). df is written on the interior
// [2, npts-2); the two points at each edge are filled with one-sided copies
// of the nearest interior value's stencil order (not used by callers that
// restrict to the interior, but kept finite).
void fd4_serial(const cd* f, cd* df, int npts, int comps, double h);
void fd4_omp(const cd* f, cd* df, int npts, int comps, double h);
void fd4(const cd* f, cd* df, int npts, int comps, double h);

// Normalized harmonic-oscillator functions psi_0..psi_nmax evaluated on a
// grid: out[n*npts + i] = psi_n(xi[i]). Uses the normalized three-term
// recurrence, which keeps every intermediate O(1).
void hermite_batch_serial(const double* xi, int npts, int nmax, double* out);
void hermite_batch_omp(const double* xi, int npts, int nmax, double* out);
void hermite_batch(const double* xi, int npts, int nmax, double* out);

} // namespace d4v::kernels
