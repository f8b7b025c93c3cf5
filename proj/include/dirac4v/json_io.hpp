#pragma once

#include <string>
#include <vector>

#include "dirac4v/cmat.hpp"
#include "dirac4v/fourvec.hpp"
#include "dirac4v/matrixpoly.hpp"

// Text output is built by a tiny writer so numbers always print with %.12g:
// identical inputs yield byte-identical files. Parsing of user-supplied JSON
// goes through nlohmann/json.

namespace d4v::json_io {

// Deterministic JSON construction.
class JsonWriter {
public:
  std::string& out() { return buf_; }
  void begin_object() { comma(); buf_ += '{'; fresh_ = true; }
  void end_object() { buf_ += '}'; fresh_ = false; }
  void begin_array() { comma(); buf_ += '['; fresh_ = true; }
  void end_array() { buf_ += ']'; fresh_ = false; }
  void key(const std::string& k);
  void value(double v);
  void value(const std::string& s);
  void value(bool b);
  void value(long v);
  void complex_value(const cd& z); // [re, im]
  void raw(const std::string& s) { comma(); buf_ += s; }

private:
  void comma();
  std::string buf_;
  bool fresh_ = true;
};

std::string format_double(double v); // %.12g

// Matrices as {"dim": d, "entries": [[re, im], ...]} row-major.
std::string matrix_json(const CMat& m);
CMat parse_matrix(const std::string& text);

// PauliVector as {"c0": [re, im], ..., "c3": [re, im]}.
std::string pauli_vector_json(const fourvec::PauliVector& v);
fourvec::PauliVector parse_pauli_vector(const std::string& text);

// Matrix polynomial over the Pauli basis:
// {"coeffs": [pauli_vector per ascending power of t]}.
std::string pauli_poly_json(const MatrixPoly& p);
MatrixPoly parse_pauli_poly(const std::string& text);

std::string read_file(const std::string& path);

} // namespace d4v::json_io
