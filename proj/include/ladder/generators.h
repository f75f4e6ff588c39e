#pragma once

// su(1,1) generators T0, T+, T- (from the F -> B mapping) and the two
// commuting Heisenberg-Weyl pairs A+-, B+- (from the F -> C mapping), with the
// exact identities they satisfy.

#include "ladder/opalgebra.h"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ladder {

struct GeneratorSet {
  enum class Kind { su11, weyl };
  Kind kind;
  std::map<std::string, OperatorExpr> members;  // T0/Tplus/Tminus or Aplus/Aminus/Bplus/Bminus
  bool s_symbolic = true;

  const OperatorExpr& operator[](const std::string& name) const { return members.at(name); }
};

struct AlgebraReport {
  std::string name;
  OperatorExpr lhs;
  OperatorExpr rhs;
  OperatorExpr residual;
  bool pass = false;
};

AlgebraReport make_report(std::string name, OperatorExpr lhs, OperatorExpr rhs);

/// T0 = -i d/deta, T+- = exp(+-i eta)(-+ r d/dr + i d/deta + s r).
GeneratorSet build_T();

/// A+- = u exp(+-i alpha) sqrt(r) [+-d/dr + (i d/dalpha - i d/dbeta -+ 1)/(2r) - s],
/// B+- = u exp(+-i beta)  sqrt(r) [+-d/dr - (i d/dalpha - i d/dbeta +- 1)/(2r) - s],
/// with u = (2 s)^{-1/2}.
GeneratorSet build_AB();

struct CasimirResult {
  OperatorExpr casimir;
  AlgebraReport identity;
};

/// C = -T+ T- + T0 (T0 - 1), checked against r^2 d^2/dr^2 - 2 i s r d/deta - s^2 r^2.
CasimirResult casimir();

/// [T0, T+] = T+, [T0, T-] = -T-, [T+, T-] = -2 T0.
std::vector<AlgebraReport> verify_su11();
/// Casimir identity plus [C, T0] = [C, T+] = [C, T-] = 0.
std::vector<AlgebraReport> verify_casimir();
/// [A-, A+] = [B-, B+] = 1 and the four cross-commutators vanish.
std::vector<AlgebraReport> verify_weyl();
/// Jacobi identity on every triple drawn from the given operators.
std::vector<AlgebraReport> verify_jacobi(const std::map<std::string, OperatorExpr>& ops);

/// A+^2, A-^2, B+^2, B-^2, (A+A- + A-A+)/2, (B+B- + B-B+)/2, A+B+, A+B-, A-B+, A-B-.
std::vector<std::pair<std::string, OperatorExpr>> weyl_bilinears();

// ---------------------------------------------------------------------------
// Ladder operators of type F eigenfunctions obtained through the B and C maps.

enum class TransformedKind { tilde, check1, check2 };

/// Operator depending affinely on the labels: base + l * l_part + m * m_part.
struct AffineOperator {
  OperatorExpr base;
  OperatorExpr l_part;
  OperatorExpr m_part;

  OperatorExpr at(const Rational& l, const Rational& m) const;
  /// Replaces the numbers l and m by operators acting on the auxiliary phase
  /// variables; the label operators act first.
  OperatorExpr substitute(const OperatorExpr& l_op, const OperatorExpr& m_op) const;
};

/// tilde:  H~+- = +- r d/dr + s r - (l + 1/2 +- 1/2)
/// check1: H1+- = sqrt(r) (+- d/dr + (2m + 1/2 -+ 1/2)/(2r) - s)
/// check2: H2+- = sqrt(r) (+- d/dr - (2m + 3/2 +- 1/2)/(2r) - s)
std::pair<AffineOperator, AffineOperator> transformed_ladders(TransformedKind kind);
std::pair<OperatorExpr, OperatorExpr> transformed_ladders(TransformedKind kind, const Rational& l,
                                                          const Rational& m);

/// T+- rebuilt as exp(+-i eta) H~-+(l + 1/2 +- 1/2) with t = l + 1 -> -i d/deta.
std::pair<OperatorExpr, OperatorExpr> algebraize_tilde();

/// A+- rebuilt as u exp(+-i alpha) H1+-(l - 1/4 +- 1/4, m + 1/4 -+ 1/4) and
/// B+- as u exp(+-i beta) H2+-(l - 1/4 +- 1/4, m - 1/4 +- 1/4), with
/// mu = l - m -> -i d/dalpha and nu = l + m + 1 -> -i d/dbeta.
std::map<std::string, OperatorExpr> algebraize_check();

/// Label shift (delta_l, delta_m) produced by a transformed ladder operator,
/// read off from the phase grading of the generator it becomes.
std::pair<Rational, Rational> label_shift(TransformedKind kind, int direction);

}  // namespace ladder
