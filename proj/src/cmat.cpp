#include "dirac4v/cmat.hpp"

#include <cmath>

#include "dirac4v/kernels.hpp"

namespace d4v {

CMat CMat::operator+(const CMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("", "matrix addition shape mismatch");
  CMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

CMat CMat::operator-(const CMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("", "matrix subtraction shape mismatch");
  CMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

CMat& CMat::operator+=(const CMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("", "matrix addition shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMat CMat::operator*(const CMat& o) const {
  if (cols_ != o.rows_) throw DimensionError("", "matrix product shape mismatch");
  CMat r(rows_, o.cols_);
  kernels::matmul(data(), o.data(), r.data(), rows_, cols_, o.cols_);
  return r;
}

CMat CMat::operator*(cd s) const {
  CMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

CMat CMat::adjoint() const {
  CMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

CMat CMat::transpose() const {
  CMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

cd CMat::trace() const {
  cd s(0.0, 0.0);
  for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

double CMat::max_abs() const {
  double m = 0.0;
  for (const cd& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double CMat::max_abs_diff(const CMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("", "matrix comparison shape mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
  return m;
}

double CMat::unitarity_defect() const {
  if (rows_ != cols_) return 1.0;
  return kernels::unitarity_defect(data(), rows_);
}

CMat CMat::kron(const CMat& o) const {
  CMat r(rows_ * o.rows_, cols_ * o.cols_);
  kernels::kron(data(), rows_, cols_, o.data(), o.rows_, o.cols_, r.data());
  return r;
}

CMat CMat::pow(int n) const {
  if (rows_ != cols_) throw DimensionError("", "matrix power needs a square matrix");
  CMat r = identity(rows_);
  CMat base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

cd CMat::determinant() const {
  if (rows_ != cols_) throw DimensionError("", "determinant needs a square matrix");
  // Gaussian elimination with partial pivoting
  CMat a = *this;
  const int n = rows_;
  cd det(1.0, 0.0);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) == 0.0) return cd(0.0, 0.0);
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cd f = a(r, col) / a(col, col);
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

const CMat& pauli(int i) {
  static const CMat s[4] = {
      CMat(2, 2, {1, 0, 0, 1}),
      CMat(2, 2, {0, 1, 1, 0}),
      CMat(2, 2, {0, cd(0, -1), cd(0, 1), 0}),
      CMat(2, 2, {1, 0, 0, -1}),
  };
  return s[i];
}

} // namespace d4v
