#pragma once

#include <array>
#include <memory>
#include <string>

#include "dirac4v/cmat.hpp"

// Gate construction from control and cyclic couplings.
//
// Half-operators: s_co+- = (s0 +- s3)/2 (idempotent projectors), and
// s_cy+- = (s1 +- i s2)/2 (raising/lowering). Couplings on equal-dimension
// operands A, B:
//     A (+)co B  =  s_co+ (x) A  +  s_co- (x) B      (block diag(A, B))
//     A (+)cy B  =  A (x) s_cy+  +  B (x) s_cy-
//     cyf(A, B)  =  A (x) s_cy-  +  B (x) s_cy+      (orientation-flipped cy)
//
// Tensor index order: the leftmost factor is the outermost (highest) qubit;
// basis index k of dimension 2^n reads the label |q_{n-1} ... q_0> in binary.

namespace d4v::gates {

// The four half-operators.
const CMat& sigma_co(int sign); // +1 / -1
const CMat& sigma_cy(int sign);

struct CouplingExpr;
using ExprPtr = std::shared_ptr<const CouplingExpr>;

struct CouplingExpr {
  enum class Kind { Leaf, Tensor, CoupleCo, CoupleCy, CoupleCyFlipped, Sum };
  Kind kind = Kind::Leaf;
  CMat leaf;
  ExprPtr lhs, rhs;

  static ExprPtr make_leaf(CMat m);
  static ExprPtr tensor(ExprPtr a, ExprPtr b);
  static ExprPtr couple_co(ExprPtr a, ExprPtr b);
  static ExprPtr couple_cy(ExprPtr a, ExprPtr b);
  static ExprPtr couple_cy_flipped(ExprPtr a, ExprPtr b);
  static ExprPtr sum(ExprPtr a, ExprPtr b);
};

// Compile to a dense matrix; sets the unitarity flag from M^dag M against
// `tolerance`. Dimension conflicts raise DimensionError carrying the node
// path of the offending coupling (e.g. "co.left").
GateMatrix compile(const ExprPtr& expr, double tolerance = 1e-12);

// Prefix expression grammar:  expr := name | op '(' expr ',' expr ')'
// with op in {co, cy, cyf, kron, add} and leaf names
// I, X, Y, Z, H, S, T, co+, co-, cy+, cy- (case-insensitive; I4, I8, ...
// give wider identities). Raises ParseError with the byte position.
ExprPtr parse_expr(const std::string& text);

// Direct couplings on matrices (leaf-level convenience).
CMat couple_co(const CMat& a, const CMat& b);
CMat couple_cy(const CMat& a, const CMat& b);
CMat couple_cy_flipped(const CMat& a, const CMat& b);

// diag(I, U) for unitary 2x2 U; rejects non-unitary input.
GateMatrix controlled_u(const GateMatrix& u);

enum class CyclicOrientation { PlusMinus, MinusPlus };

// s0 (x) s_cy+- + U (x) s_cy-+. For U = X, MinusPlus gives the clockwise
// cyclic gate (basis increment mod 4) and PlusMinus its inverse.
GateMatrix u_cyclic(const GateMatrix& u, CyclicOrientation orientation);

// Every named gate is assembled from the half-operator couplings, not from a
// matrix literal. Accepted names: Identity, PauliX, PauliY, PauliZ, Hadamard,
// Phase, PiOver4, CNOT, SWAP, FullSWAP, CC, CCC, Toffoli (case-insensitive,
// with the usual short aliases I, X, Y, Z, H, S, T).
GateMatrix named_gate(const std::string& name);

// Right-nested control chain with N growing identities around a NOT leaf;
// dimension 2^(N+1). N=1 is CNOT, N=2 Toffoli. Bound: 1 <= N <= 7.
GateMatrix controlled_n_not(int n);

// Left-nested cyclic chain seeded by X (+)cy I; dimension 2^(N+1). The result
// is the basis increment permutation |k> -> |k+1 mod 2^(N+1)>, a single cycle.
GateMatrix not_cyclic_n(int n);

// a_i = tr(sigma_i U) / 2 for a 2x2 matrix; sum |a_i|^2 = 1 iff U unitary.
std::array<cd, 4> pauli_decompose(const CMat& u);

} // namespace d4v::gates
