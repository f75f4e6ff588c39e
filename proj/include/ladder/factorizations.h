#pragma once

// Factorization families B, C and F, their eigenvalue rules and ladder
// operators, and the parameter relations linking F to B, B to C and F to C.
//
// Operators are written in the opalgebra variable r, which plays the role of
//   type F: x itself,
//   type C: y itself,
//   type B: w = exp(a x), so that d/dx = a w d/dw and exp(a x) = w.

#include "ladder/opalgebra.h"
#include "ladder/rational.h"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ladder {

enum class FamilyType { B, C, F };

std::string to_string(FamilyType t);

class FamilyParams {
 public:
  /// Type B with d/a > 0. A negative a is normalized to a > 0 by x -> -x,
  /// which flips the signs of a and d together.
  static FamilyParams type_b(Rational a, Rational c, Rational d);
  /// Type C, class I (b < 0).
  static FamilyParams type_c(Rational b, Rational c);
  /// Type F with q < 0.
  static FamilyParams type_f(Rational q);

  FamilyType type() const { return type_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  const Rational& q() const { return q_; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

 private:
  FamilyParams() = default;
  FamilyType type_ = FamilyType::F;
  Rational a_, b_, c_, d_, q_;
};

struct FamilyFunctions {
  OperatorExpr potential;   // r(x, m) as a multiplication operator
  OperatorExpr k;           // k(x, m)
  Rational L;               // L(m)
  OperatorExpr derivative;  // d/dx expressed in the opalgebra variable

  // Numerical values at a point of the original variable x (or y).
  double potential_at(double x) const { return potential.evaluate_function(variable_at(x)).real(); }
  double k_at(double x) const { return k.evaluate_function(variable_at(x)).real(); }
  double variable_at(double x) const;

  FamilyType type = FamilyType::F;
  double scale = 1.0;  // a for type B
};

/// r(x, m), k(x, m) and L(m). Throws std::domain_error for type F at m = 0.
FamilyFunctions rkl(const FamilyParams& params, const Rational& m);

/// lambda = L(l + 1) for class I (F, C) and L(l) for class II (B).
/// Throws std::domain_error for l < 0 in class I.
Rational eigenvalue(const FamilyParams& params, const Rational& l);

/// H+ = d/dx + k(x, m), H- = -d/dx + k(x, m).
std::pair<OperatorExpr, OperatorExpr> ladder(const FamilyParams& params, const Rational& m);

struct FactorizationCheck {
  OperatorExpr lowered_residual;  // H-(m) H+(m) + L(m) + D^2 + r(x, m)
  OperatorExpr raised_residual;   // H+(m) H-(m) + L(m) + D^2 + r(x, m - 1)
  bool pass() const { return lowered_residual.is_zero() && raised_residual.is_zero(); }
};

FactorizationCheck check_factorization(const FamilyParams& params, const Rational& m);

// ---------------------------------------------------------------------------
// Parameter relations

struct QuantumMap {
  Rational m_plus_c;  // target m + c
  Rational l_plus_c;  // target l + c
};

struct RelationCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool pass() const { return lhs == rhs; }
};

struct TransformResult {
  std::string kind;  // "f2b", "b2c" or "f2c"
  FamilyParams source;
  FamilyParams target;  // c = 0 convention for the target
  Rational source_l;
  Rational source_m;
  QuantumMap quantum_map;
  std::optional<int> epsilon;
  Rational scale_s;  // d/a = sqrt(-lambda)

  /// The unsolved relations between the two families evaluated at the
  /// solution; every row holds exactly.
  std::vector<RelationCheck> verify() const;
};

TransformResult f_to_b(const Rational& q, const Rational& l, const Rational& m, const Rational& a = 1);
TransformResult f_to_c(const Rational& q, const Rational& l, const Rational& m, int eps);
TransformResult b_to_c(const FamilyParams& bparams, const Rational& l_bar, const Rational& m_bar, int eps);

enum class AlgebraKind { su11, weyl };

/// q' after one ladder step: q (label + dir) / label, where label is t for
/// su(1,1) and mu + nu + 1 for w(1) + w(1).
Rational shifted_charge(const Rational& q, const Rational& label, int direction, AlgebraKind algebra);

}  // namespace ladder
