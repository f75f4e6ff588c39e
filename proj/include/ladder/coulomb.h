#pragma once

// Hydrogenic radial functions in the two labelings produced by the F -> B and
// F -> C mappings, Gauss-Laguerre quadrature, and numerical evaluation of the
// generator actions on them.
//
// Units: hbar = mu = e = 1. Radial profiles are S(r) = r R(r) written in
// rho = gamma r, and every sampled function is stored as exp(rho/2) f(rho) on
// Gauss-Laguerre nodes so that inner products are exact for polynomial parts.

#include "ladder/opalgebra.h"
#include "ladder/rational.h"

#include <array>
#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ladder::coulomb {

/// Generalized Laguerre polynomial by the three-term recurrence.
double laguerre(int n, double alpha, double x);

/// d^k/dx^k L_n^(alpha)(x) = (-1)^k L_{n-k}^(alpha+k)(x).
double laguerre_derivative(int n, double alpha, double x, int order = 1);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // for weight x^alpha e^{-x}
  double alpha = 0.0;
};

/// Nodes and weights by Newton iteration on the recurrence (1e-14 relative).
QuadratureRule gauss_laguerre(int order, double alpha = 0.0);

/// E_n = -Z^2 / (2 n^2). Throws std::domain_error for n < 1 or Z <= 0.
Rational energy(const Rational& Z, const Rational& n);

struct SuLabels {
  int t = 1;
  int m = 0;
  friend bool operator==(const SuLabels&, const SuLabels&) = default;
};

struct WeylLabels {
  int mu = 0;
  int nu = 1;
  friend bool operator==(const WeylLabels&, const WeylLabels&) = default;
};

using Labels = std::variant<SuLabels, WeylLabels>;

std::string describe(const Labels& labels);

/// t >= 1, 0 <= m <= t-1; mu >= 0, nu >= mu.
bool valid(const Labels& labels);

/// Principal quantum number: t, or (mu + nu + 1)/2.
Rational principal(const Labels& labels);

class QuantumState {
 public:
  /// gamma = 2 Z / n. Throws std::invalid_argument for inconsistent labels.
  static QuantumState make(const Labels& labels, const Rational& Z);
  static QuantumState with_gamma(const Labels& labels, const Rational& gamma);

  const Labels& labels() const { return labels_; }
  const Rational& gamma() const { return gamma_; }
  Rational principal() const { return coulomb::principal(labels_); }
  Rational charge() const { return gamma_ * principal() / 2; }
  bool is_su() const { return std::holds_alternative<SuLabels>(labels_); }
  /// Integer n and L: always for su labels; nu - mu odd for Weyl labels.
  bool physical() const;

  /// Phase eigenvalues (t, mu, nu) of the extended eigenfunction.
  std::array<int, 3> phase_labels() const;

  double normalization() const { return norm_; }
  double rho_power() const { return power_; }
  int degree() const { return degree_; }
  double laguerre_alpha() const { return alpha_; }

  /// Profile N exp(-rho/2) rho^p L_degree^(alpha)(rho).
  double value(double rho) const;
  /// exp(rho/2) d^k/drho^k of the profile.
  double reduced(double rho, int order = 0) const;

 private:
  QuantumState(Labels labels, Rational gamma);
  Labels labels_;
  Rational gamma_;
  double norm_ = 0.0;
  double power_ = 0.0;
  int degree_ = 0;
  double alpha_ = 0.0;
};

/// Function of r sampled as exp(rho/2) f on the nodes of a rule.
struct SampledFunction {
  std::shared_ptr<const QuadratureRule> rule;
  double gamma = 1.0;
  std::vector<std::complex<double>> reduced;

  SampledFunction& operator-=(const SampledFunction& o);
  SampledFunction& operator*=(std::complex<double> c);
  /// Integral of conj(this) * other dr.
  std::complex<double> inner(const SampledFunction& other) const;
  double norm() const;
};

SampledFunction sample(const QuantumState& state, std::shared_ptr<const QuadratureRule> rule);

/// Quadrature order exact for every product met when states up to the given
/// principal number (and one ladder step) are involved.
int quadrature_order(const Rational& max_principal);

enum class Generator { T, A, B };
std::string to_string(Generator g, int direction);

/// T+- = exp(+-i eta)(-+ rho d/drho + i d/deta + rho/2), with i d/deta -> -t.
SampledFunction apply_T(int direction, const QuantumState& state, std::shared_ptr<const QuadratureRule> rule);

/// A+-, B+- in rho form with i d/dalpha -> -mu, i d/dbeta -> -nu.
SampledFunction apply_AB(Generator which, int direction, const QuantumState& state,
                         std::shared_ptr<const QuadratureRule> rule);

/// Applies an arbitrary operator in r to the extended eigenfunction, with s
/// set to gamma/2 = sqrt(-lambda). The result is split by phase shift.
std::map<std::array<int, 3>, SampledFunction> apply_operator(const OperatorExpr& op, const QuantumState& state,
                                                             std::shared_ptr<const QuadratureRule> rule);

/// Closed-form coefficients:
///   T+-: -sqrt((t+-1)(t-+m)(t+-m+-1)/t)
///   A+-: +sqrt((mu+nu+1+-1)(mu+1/2+-1/2)/(mu+nu+1))
///   B+-: -sqrt((mu+nu+1+-1)(nu+1/2+-1/2)/(mu+nu+1))
double action_coefficient(Generator g, int direction, const Labels& labels);

/// Labels reached by one step; nullopt when the step leaves the valid range.
std::optional<Labels> shifted_labels(Generator g, int direction, const Labels& labels);

struct Tolerances {
  double coefficient = 1e-10;
  double pointwise = 1e-8;
  double norm = 1e-12;
};

struct ActionReport {
  std::string generator;
  std::string source;
  std::string target;
  double closed = 0.0;
  double numeric = 0.0;
  double coefficient_error = 0.0;
  double l2_error = 0.0;
  double tolerance_coefficient = 0.0;
  double tolerance_pointwise = 0.0;
  bool pass = false;
};

ActionReport check_action(Generator g, int direction, const QuantumState& state, const Tolerances& tol,
                          std::shared_ptr<const QuadratureRule> rule);

struct NormReport {
  std::string state;
  double norm_squared = 0.0;
  double error = 0.0;
  bool pass = false;
};

NormReport check_norm(const QuantumState& state, double tol, std::shared_ptr<const QuadratureRule> rule);

/// max_nodes |(d^2/dr^2 - 2q/r - m(m+1)/r^2 + lambda) psi| / max_nodes |psi|,
/// with q = -Z and lambda = 2E + lambda_shift. Needs su labels.
double schrodinger_residual(const QuantumState& state, std::shared_ptr<const QuadratureRule> rule,
                            double lambda_shift = 0.0);

struct CasimirReport {
  std::string state;
  double eigenvalue = 0.0;  // m(m+1)
  double l2_error = 0.0;
  bool pass = false;
};

/// Numerical action of the symbolic Casimir on an su-labeled state.
CasimirReport check_casimir(const OperatorExpr& casimir, const QuantumState& state, double tol,
                            std::shared_ptr<const QuadratureRule> rule);

struct ChargeShiftReport {
  std::string generator;
  Rational Z, Z_shifted;
  Rational n, n_shifted;
  Rational gamma, gamma_shifted;
  Rational energy, energy_shifted;
  Rational q_from_rule;  // q' from shifted_charge with q = -Z
  bool integral_charge = false;
  bool pass = false;
};

/// Z' = Z (n +- delta)/n with delta = 1 (T) or 1/2 (A, B); checks that gamma
/// and E are unchanged and that q' = -Z' matches shifted_charge.
/// Throws std::domain_error when the step reaches n' <= 0.
ChargeShiftReport charge_shift_consistency(const Labels& labels, const Rational& Z, Generator g, int direction);

}  // namespace ladder::coulomb
