#include "dirac4v/matrixpoly.hpp"

#include <array>
#include <cmath>
#include <cstdio>

namespace d4v {

void Poly::trim() {
  while (!c_.empty() && c_.back() == cd(0, 0)) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<cd> r(std::max(c_.size(), o.c_.size()), cd(0, 0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<cd> r(std::max(c_.size(), o.c_.size()), cd(0, 0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<cd> r(c_.size() + o.c_.size() - 1, cd(0, 0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(cd s) const {
  std::vector<cd> r = c_;
  for (cd& v : r) v *= s;
  return Poly(std::move(r));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<cd> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * (double)i;
  return Poly(std::move(r));
}

cd Poly::eval(cd t) const {
  cd v(0, 0);
  for (size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
  return v;
}

double Poly::max_coeff_abs() const {
  double m = 0.0;
  for (const cd& v : c_) m = std::max(m, std::abs(v));
  return m;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  char buf[96];
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == cd(0, 0)) continue;
    std::snprintf(buf, sizeof buf, "(%.6g%+.6gi)", c_[i].real(), c_[i].imag());
    if (!s.empty()) s += " + ";
    s += buf;
    if (i == 1)
      s += "*" + var;
    else if (i > 1)
      s += "*" + var + "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

void MatrixPoly::trim() {
  while (!c_.empty() && c_.back().max_abs() == 0.0) c_.pop_back();
}

MatrixPoly MatrixPoly::from_scalar(const Poly& p, const CMat& direction) {
  std::vector<CMat> cs;
  cs.reserve(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) cs.push_back(direction * p.coeff(k));
  return MatrixPoly(direction.rows(), std::move(cs));
}

MatrixPoly MatrixPoly::operator+(const MatrixPoly& o) const {
  if (dim_ != o.dim_) throw DimensionError("", "matrix polynomial addition dim mismatch");
  std::vector<CMat> r(std::max(c_.size(), o.c_.size()), CMat::zero(dim_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return MatrixPoly(dim_, std::move(r));
}

MatrixPoly MatrixPoly::operator-(const MatrixPoly& o) const {
  if (dim_ != o.dim_) throw DimensionError("", "matrix polynomial subtraction dim mismatch");
  std::vector<CMat> r(std::max(c_.size(), o.c_.size()), CMat::zero(dim_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i] * cd(-1, 0);
  return MatrixPoly(dim_, std::move(r));
}

MatrixPoly MatrixPoly::operator*(const MatrixPoly& o) const {
  if (dim_ != o.dim_) throw DimensionError("", "matrix polynomial product dim mismatch");
  if (c_.empty() || o.c_.empty()) return MatrixPoly(dim_);
  std::vector<CMat> r(c_.size() + o.c_.size() - 1, CMat::zero(dim_));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return MatrixPoly(dim_, std::move(r));
}

MatrixPoly MatrixPoly::operator*(cd s) const {
  std::vector<CMat> r = c_;
  for (CMat& m : r) m = m * s;
  return MatrixPoly(dim_, std::move(r));
}

MatrixPoly MatrixPoly::derivative() const {
  if (c_.size() <= 1) return MatrixPoly(dim_);
  std::vector<CMat> r;
  r.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * cd((double)i, 0));
  return MatrixPoly(dim_, std::move(r));
}

CMat MatrixPoly::eval(double t) const {
  CMat v = CMat::zero(dim_);
  for (size_t i = c_.size(); i-- > 0;) v = v * cd(t, 0) + c_[i];
  return v;
}

double MatrixPoly::max_coeff_abs() const {
  double m = 0.0;
  for (const CMat& c : c_) m = std::max(m, c.max_abs());
  return m;
}

std::array<Poly, 4> MatrixPoly::pauli_components() const {
  if (dim_ != 2) throw DimensionError("", "Pauli components need a 2x2 matrix polynomial");
  std::array<std::vector<cd>, 4> comp;
  for (auto& v : comp) v.resize(c_.size(), cd(0, 0));
  for (size_t k = 0; k < c_.size(); ++k)
    for (int i = 0; i < 4; ++i) comp[i][k] = (pauli(i) * c_[k]).trace() * 0.5;
  return {Poly(comp[0]), Poly(comp[1]), Poly(comp[2]), Poly(comp[3])};
}

} // namespace d4v
