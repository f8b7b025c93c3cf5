#include "dirac4v/gates.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace d4v::gates {

const CMat& sigma_co(int sign) {
  static const CMat plus = (pauli(0) + pauli(3)) * cd(0.5, 0);
  static const CMat minus = (pauli(0) - pauli(3)) * cd(0.5, 0);
  return sign >= 0 ? plus : minus;
}

const CMat& sigma_cy(int sign) {
  static const CMat plus = (pauli(1) + pauli(2) * cd(0, 1)) * cd(0.5, 0);
  static const CMat minus = (pauli(1) - pauli(2) * cd(0, 1)) * cd(0.5, 0);
  return sign >= 0 ? plus : minus;
}

ExprPtr CouplingExpr::make_leaf(CMat m) {
  auto e = std::make_shared<CouplingExpr>();
  e->kind = Kind::Leaf;
  e->leaf = std::move(m);
  return e;
}

static ExprPtr node(CouplingExpr::Kind k, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<CouplingExpr>();
  e->kind = k;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr CouplingExpr::tensor(ExprPtr a, ExprPtr b) { return node(Kind::Tensor, std::move(a), std::move(b)); }
ExprPtr CouplingExpr::couple_co(ExprPtr a, ExprPtr b) { return node(Kind::CoupleCo, std::move(a), std::move(b)); }
ExprPtr CouplingExpr::couple_cy(ExprPtr a, ExprPtr b) { return node(Kind::CoupleCy, std::move(a), std::move(b)); }
ExprPtr CouplingExpr::couple_cy_flipped(ExprPtr a, ExprPtr b) {
  return node(Kind::CoupleCyFlipped, std::move(a), std::move(b));
}
ExprPtr CouplingExpr::sum(ExprPtr a, ExprPtr b) { return node(Kind::Sum, std::move(a), std::move(b)); }

CMat couple_co(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("co", "coupling operands must share dimension");
  return sigma_co(+1).kron(a) + sigma_co(-1).kron(b);
}

CMat couple_cy(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("cy", "coupling operands must share dimension");
  return a.kron(sigma_cy(+1)) + b.kron(sigma_cy(-1));
}

CMat couple_cy_flipped(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("cyf", "coupling operands must share dimension");
  return a.kron(sigma_cy(-1)) + b.kron(sigma_cy(+1));
}

namespace {

CMat eval(const CouplingExpr& e, const std::string& path) {
  switch (e.kind) {
    case CouplingExpr::Kind::Leaf:
      return e.leaf;
    case CouplingExpr::Kind::Tensor:
      return eval(*e.lhs, path + ".kron.left").kron(eval(*e.rhs, path + ".kron.right"));
    case CouplingExpr::Kind::Sum: {
      const CMat a = eval(*e.lhs, path + ".add.left");
      const CMat b = eval(*e.rhs, path + ".add.right");
      if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(path + ".add", "sum operands must share dimension");
      return a + b;
    }
    default: {
      const char* tag = e.kind == CouplingExpr::Kind::CoupleCo    ? "co"
                        : e.kind == CouplingExpr::Kind::CoupleCy  ? "cy"
                                                                  : "cyf";
      const CMat a = eval(*e.lhs, path + "." + tag + ".left");
      const CMat b = eval(*e.rhs, path + "." + tag + ".right");
      if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(path + "." + tag, "coupling operands must share dimension");
      if (e.kind == CouplingExpr::Kind::CoupleCo) return sigma_co(+1).kron(a) + sigma_co(-1).kron(b);
      if (e.kind == CouplingExpr::Kind::CoupleCy) return a.kron(sigma_cy(+1)) + b.kron(sigma_cy(-1));
      return a.kron(sigma_cy(-1)) + b.kron(sigma_cy(+1));
    }
  }
}

} // namespace

GateMatrix compile(const ExprPtr& expr, double tolerance) {
  if (!expr) throw std::invalid_argument("compile: empty expression");
  return GateMatrix(eval(*expr, "root"), tolerance);
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(pos, what); }

  std::string token() {
    skip_ws();
    const size_t start = pos;
    while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '+' || s[pos] == '-' ||
                              s[pos] == '_' || s[pos] == '/'))
      ++pos;
    if (pos == start) fail("expected a name");
    return s.substr(start, pos - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  ExprPtr leaf(const std::string& name, size_t at) {
    std::string n;
    for (char c : name) n += (char)std::tolower((unsigned char)c);
    if (n == "co+" || n == "cop") return CouplingExpr::make_leaf(sigma_co(+1));
    if (n == "co-" || n == "com") return CouplingExpr::make_leaf(sigma_co(-1));
    if (n == "cy+" || n == "cyp") return CouplingExpr::make_leaf(sigma_cy(+1));
    if (n == "cy-" || n == "cym") return CouplingExpr::make_leaf(sigma_cy(-1));
    if (n.size() > 1 && n[0] == 'i' && std::isdigit((unsigned char)n[1])) {
      const int d = std::atoi(n.c_str() + 1);
      if (d < 1 || d > 256 || (d & (d - 1)) != 0) throw ParseError(at, "identity size must be a power of two <= 256");
      return CouplingExpr::make_leaf(CMat::identity(d));
    }
    try {
      return CouplingExpr::make_leaf(named_gate(name).m);
    } catch (const std::invalid_argument&) {
      throw ParseError(at, "unknown gate name '" + name + "'");
    }
  }

  ExprPtr expr() {
    skip_ws();
    const size_t at = pos;
    const std::string name = token();
    skip_ws();
    if (pos < s.size() && s[pos] == '(') {
      std::string op;
      for (char c : name) op += (char)std::tolower((unsigned char)c);
      CouplingExpr::Kind kind;
      if (op == "co")
        kind = CouplingExpr::Kind::CoupleCo;
      else if (op == "cy")
        kind = CouplingExpr::Kind::CoupleCy;
      else if (op == "cyf")
        kind = CouplingExpr::Kind::CoupleCyFlipped;
      else if (op == "kron")
        kind = CouplingExpr::Kind::Tensor;
      else if (op == "add")
        kind = CouplingExpr::Kind::Sum;
      else
        throw ParseError(at, "unknown operator '" + name + "'");
      expect('(');
      ExprPtr a = expr();
      expect(',');
      ExprPtr b = expr();
      expect(')');
      return node(kind, std::move(a), std::move(b));
    }
    return leaf(name, at);
  }
};

} // namespace

ExprPtr parse_expr(const std::string& text) {
  Parser p{text};
  ExprPtr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

GateMatrix controlled_u(const GateMatrix& u) {
  if (u.dim() != 2) throw DimensionError("controlled_u", "control input must be 2x2");
  if (!u.unitary) throw std::invalid_argument("controlled_u: input is not unitary within tolerance");
  return GateMatrix(couple_co(pauli(0), u.m), u.tolerance);
}

GateMatrix u_cyclic(const GateMatrix& u, CyclicOrientation orientation) {
  if (u.dim() != 2) throw DimensionError("u_cyclic", "input must be 2x2");
  if (!u.unitary) throw std::invalid_argument("u_cyclic: input is not unitary within tolerance");
  const CMat m = orientation == CyclicOrientation::PlusMinus ? couple_cy(pauli(0), u.m)
                                                             : couple_cy_flipped(pauli(0), u.m);
  return GateMatrix(m, u.tolerance);
}

namespace {

std::string canon(const std::string& name) {
  std::string n;
  for (char c : name)
    if (!std::isspace((unsigned char)c) && c != '-' && c != '_') n += (char)std::tolower((unsigned char)c);
  return n;
}

} // namespace

GateMatrix named_gate(const std::string& name) {
  const std::string n = canon(name);
  const CMat cop = sigma_co(+1), com = sigma_co(-1), cyp = sigma_cy(+1), cym = sigma_cy(-1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  if (n == "identity" || n == "i") return GateMatrix(cop + com);
  if (n == "paulix" || n == "x" || n == "not") return GateMatrix(cyp + cym);
  if (n == "pauliy" || n == "y") return GateMatrix((cyp - cym) * cd(0, -1));
  if (n == "pauliz" || n == "z") return GateMatrix(cop - com);
  if (n == "hadamard" || n == "h") return GateMatrix((cop - com + cyp + cym) * cd(inv_sqrt2, 0));
  if (n == "phase" || n == "s") return GateMatrix(cop + com * cd(0, 1));
  if (n == "piover4" || n == "pi/4" || n == "t")
    return GateMatrix(cop + com * std::exp(cd(0, std::numbers::pi / 4.0)));
  if (n == "cnot") return GateMatrix(couple_co(cop + com, cyp + cym));
  if (n == "swap") return GateMatrix(couple_co(cop, com) + couple_cy(cym, cyp));
  if (n == "fullswap") return GateMatrix(couple_cy(cyp, cym) + couple_cy(cym, cyp));
  if (n == "cc") return u_cyclic(named_gate("X"), CyclicOrientation::MinusPlus);
  if (n == "ccc") return u_cyclic(named_gate("X"), CyclicOrientation::PlusMinus);
  if (n == "toffoli") return controlled_n_not(2);
  throw std::invalid_argument("unknown gate name '" + name + "'");
}

GateMatrix controlled_n_not(int n) {
  if (n < 1) throw std::invalid_argument("controlled_n_not: N must be positive");
  if (n > 7) throw ResourceBoundError("controlled_n_not: N > 7 exceeds the resource bound");
  CMat m = named_gate("X").m;
  for (int k = 0; k < n; ++k) m = couple_co(CMat::identity(m.rows()), m);
  return GateMatrix(m);
}

GateMatrix not_cyclic_n(int n) {
  if (n < 1) throw std::invalid_argument("not_cyclic_n: N must be positive");
  if (n > 7) throw ResourceBoundError("not_cyclic_n: N > 7 exceeds the resource bound");
  CMat m = couple_cy(named_gate("X").m, pauli(0));
  for (int k = 1; k < n; ++k) m = couple_cy(m, CMat::identity(m.rows()));
  return GateMatrix(m);
}

std::array<cd, 4> pauli_decompose(const CMat& u) {
  if (u.rows() != 2 || u.cols() != 2) throw DimensionError("pauli_decompose", "input must be 2x2");
  std::array<cd, 4> a;
  for (int i = 0; i < 4; ++i) a[i] = (pauli(i) * u).trace() * 0.5;
  return a;
}

} // namespace d4v::gates
