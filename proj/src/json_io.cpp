#include "dirac4v/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace d4v::json_io {

void JsonWriter::comma() {
  if (!fresh_ && !buf_.empty()) {
    const char last = buf_.back();
    if (last != '{' && last != '[' && last != ':') buf_ += ',';
  }
  fresh_ = false;
}

void JsonWriter::key(const std::string& k) {
  comma();
  buf_ += '"' + k + "\":";
  fresh_ = true;
}

void JsonWriter::value(double v) {
  comma();
  buf_ += format_double(v);
}

void JsonWriter::value(const std::string& s) {
  comma();
  buf_ += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') buf_ += '\\';
    buf_ += c;
  }
  buf_ += '"';
}

void JsonWriter::value(bool b) {
  comma();
  buf_ += b ? "true" : "false";
}

void JsonWriter::value(long v) {
  comma();
  buf_ += std::to_string(v);
}

void JsonWriter::complex_value(const cd& z) {
  comma();
  buf_ += '[' + format_double(z.real()) + ',' + format_double(z.imag()) + ']';
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0; // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string matrix_json(const CMat& m) {
  JsonWriter w;
  w.begin_object();
  w.key("dim");
  w.value((long)m.rows());
  w.key("entries");
  w.begin_array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) w.complex_value(m(i, j));
  w.end_array();
  w.end_object();
  return w.out();
}

namespace {
cd parse_complex(const nlohmann::json& j) {
  if (j.is_number()) return cd(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2) return cd(j[0].get<double>(), j[1].get<double>());
  throw std::invalid_argument("expected a number or [re, im] pair");
}
} // namespace

CMat parse_matrix(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const int dim = j.at("dim").get<int>();
  const auto& e = j.at("entries");
  if ((int)e.size() != dim * dim) throw std::invalid_argument("matrix entries length must be dim^2");
  CMat m(dim, dim);
  for (int i = 0; i < dim * dim; ++i) m(i / dim, i % dim) = parse_complex(e[i]);
  return m;
}

std::string pauli_vector_json(const fourvec::PauliVector& v) {
  JsonWriter w;
  w.begin_object();
  for (int i = 0; i < 4; ++i) {
    w.key("c" + std::to_string(i));
    w.complex_value(v[i]);
  }
  w.end_object();
  return w.out();
}

namespace {
fourvec::PauliVector pauli_vector_from_json(const nlohmann::json& j) {
  fourvec::PauliVector v;
  for (int i = 0; i < 4; ++i) {
    const std::string key = "c" + std::to_string(i);
    if (j.contains(key)) v[i] = parse_complex(j.at(key));
  }
  return v;
}
} // namespace

fourvec::PauliVector parse_pauli_vector(const std::string& text) {
  return pauli_vector_from_json(nlohmann::json::parse(text));
}

std::string pauli_poly_json(const MatrixPoly& p) {
  JsonWriter w;
  w.begin_object();
  w.key("coeffs");
  w.begin_array();
  for (int k = 0; k <= p.degree(); ++k) {
    const fourvec::PauliVector v = fourvec::from_matrix(p.coeff(k));
    w.raw(pauli_vector_json(v));
  }
  w.end_array();
  w.end_object();
  return w.out();
}

MatrixPoly parse_pauli_poly(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const auto& arr = j.at("coeffs");
  std::vector<CMat> coeffs;
  for (const auto& item : arr) coeffs.push_back(fourvec::to_matrix(pauli_vector_from_json(item)));
  return MatrixPoly(2, std::move(coeffs));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace d4v::json_io
