#pragma once

#include <array>
#include <string>
#include <vector>

#include "dirac4v/cmat.hpp"

namespace d4v {

// Scalar polynomial in the time variable t with complex coefficients,
// stored by ascending power. Arithmetic is exact over the coefficients.
class Poly {
public:
  Poly() = default;
  explicit Poly(cd c0) : c_{c0} { trim(); }
  explicit Poly(std::vector<cd> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly t() { return Poly(std::vector<cd>{cd(0, 0), cd(1, 0)}); }

  int degree() const { return (int)c_.size() - 1; } // -1 for the zero polynomial
  cd coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : cd(0, 0); }
  const std::vector<cd>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(cd s) const;
  friend Poly operator*(cd s, const Poly& p) { return p * s; }

  Poly derivative() const;
  cd eval(cd t) const;
  double max_coeff_abs() const;
  bool is_zero(double tol = 0.0) const { return max_coeff_abs() <= tol; }

  std::string str(const std::string& var = "t") const;

private:
  void trim();
  std::vector<cd> c_;
};

// Matrix-valued polynomial in t; coefficient matrices share one square shape.
class MatrixPoly {
public:
  MatrixPoly() = default;
  explicit MatrixPoly(int dim) : dim_(dim) {}
  explicit MatrixPoly(CMat c0) : dim_(c0.rows()), c_{std::move(c0)} { trim(); }
  MatrixPoly(int dim, std::vector<CMat> coeffs) : dim_(dim), c_(std::move(coeffs)) { trim(); }

  static MatrixPoly from_scalar(const Poly& p, const CMat& direction);

  int dim() const { return dim_; }
  int degree() const { return (int)c_.size() - 1; }
  CMat coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : CMat::zero(dim_); }

  MatrixPoly operator+(const MatrixPoly& o) const;
  MatrixPoly operator-(const MatrixPoly& o) const;
  MatrixPoly operator*(const MatrixPoly& o) const; // matrix product, polynomial convolution
  MatrixPoly operator*(cd s) const;

  MatrixPoly derivative() const;
  CMat eval(double t) const;
  double max_coeff_abs() const;
  bool is_zero(double tol = 0.0) const { return max_coeff_abs() <= tol; }

  // Pauli components as four scalar polynomials; dim must be 2.
  std::array<Poly, 4> pauli_components() const;

private:
  void trim();
  int dim_ = 0;
  std::vector<CMat> c_;
};

} // namespace d4v
