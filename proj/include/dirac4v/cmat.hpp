#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "dirac4v/errors.hpp"

namespace d4v {

using cd = std::complex<double>;

// Dense row-major complex matrix. Value type; heavy products route through
// the kernels so large operands pick up the OpenMP paths.
class CMat {
public:
  CMat() = default;
  CMat(int rows, int cols) : rows_(rows), cols_(cols), a_((size_t)rows * cols, cd(0.0, 0.0)) {}
  CMat(int rows, int cols, std::initializer_list<cd> vals) : CMat(rows, cols) {
    size_t i = 0;
    for (cd v : vals) {
      if (i >= a_.size()) break;
      a_[i++] = v;
    }
  }

  static CMat identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static CMat zero(int n) { return CMat(n, n); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return a_.empty(); }
  cd& operator()(int i, int j) { return a_[(size_t)i * cols_ + j]; }
  const cd& operator()(int i, int j) const { return a_[(size_t)i * cols_ + j]; }
  cd* data() { return a_.data(); }
  const cd* data() const { return a_.data(); }

  CMat operator+(const CMat& o) const;
  CMat operator-(const CMat& o) const;
  CMat operator*(const CMat& o) const;
  CMat operator*(cd s) const;
  CMat& operator+=(const CMat& o);
  friend CMat operator*(cd s, const CMat& m) { return m * s; }

  CMat adjoint() const;
  CMat transpose() const;
  cd trace() const;
  double max_abs() const;
  double max_abs_diff(const CMat& o) const;
  double unitarity_defect() const;

  CMat kron(const CMat& o) const;
  CMat pow(int n) const; // non-negative integer power
  cd determinant() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<cd> a_;
};

// Pauli matrices sigma_0..sigma_3 as 2x2 CMat values.
const CMat& pauli(int i);

// Gate wrapper: a square matrix of dimension 2^n plus unitarity metadata.
struct GateMatrix {
  CMat m;
  double tolerance = 1e-12;
  bool unitary = false;

  GateMatrix() = default;
  explicit GateMatrix(CMat mat, double tol = 1e-12) : m(std::move(mat)), tolerance(tol) {
    unitary = m.rows() == m.cols() && m.unitarity_defect() <= tolerance;
  }
  int dim() const { return m.rows(); }
};

} // namespace d4v
