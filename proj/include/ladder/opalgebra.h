#pragma once

// Exact arithmetic in the algebra of differential operators generated by
// r^{1/2}, r^{-1/2}, the phases exp(i k eta), exp(i k alpha), exp(i k beta)
// and the partial derivatives d/dr, d/deta, d/dalpha, d/dbeta.
//
// Coefficients live in Q(i)[s, s^-1, u] with u^2 = 1/(2 s); s stands for
// sqrt(-lambda) of a bound state and u for the prefactor (2 sqrt(-lambda))^{-1/2}.
// Every OperatorExpr is kept in normal order: coefficient * r-power * phases *
// derivatives.

#include "ladder/rational.h"

#include <array>
#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ladder {

struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}
  Gaussian(long real) : re(real), im(0) {}

  static Gaussian i() { return Gaussian(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }
  Gaussian inverse() const;
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);

  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
};

/// i^n for any integer n.
Gaussian i_power(int n);

/// Element of Q(i)[s, 1/s, u] / (u^2 - 1/(2s)), stored sparsely in the basis
/// s^k u^e with e in {0, 1}.
class Coefficient {
 public:
  struct Key {
    int s_power = 0;
    int u_power = 0;
    auto operator<=>(const Key&) const = default;
  };
  using container_type = std::map<Key, Gaussian>;

  Coefficient() = default;
  Coefficient(Gaussian g);
  Coefficient(long value) : Coefficient(Gaussian(value)) {}

  static Coefficient s(int power = 1);
  static Coefficient u();
  static Coefficient term(Key key, Gaussian value);

  const container_type& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when this is a single basis element with a purely real or purely
  /// imaginary weight, i.e. it renders without parentheses.
  bool is_simple() const;

  /// The Gaussian part when the coefficient carries no s or u.
  std::optional<Gaussian> as_constant() const;

  std::optional<Coefficient> inverse() const;
  std::complex<double> evaluate(double s_value) const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator-(const Coefficient& a);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient&, const Coefficient&) = default;

 private:
  void add(Key key, const Gaussian& value);
  container_type terms_;
};

enum class PhaseVar { eta = 0, alpha = 1, beta = 2 };
enum class DerivVar { r = 0, eta = 1, alpha = 2, beta = 3 };

inline constexpr std::array<const char*, 3> kPhaseVarNames{"eta", "alpha", "beta"};
inline constexpr std::array<const char*, 4> kDerivVarNames{"r", "eta", "alpha", "beta"};

/// Exponent tuple of a normal-ordered monomial
///   r^{r_half_power/2} exp(i k.theta) d_r^a d_eta^b d_alpha^c d_beta^d.
struct MonomialKey {
  int r_half_power = 0;
  std::array<int, 3> phase{};
  std::array<int, 4> deriv{};

  bool has_derivatives() const { return deriv != std::array<int, 4>{}; }
  bool has_phases() const { return phase != std::array<int, 3>{}; }
  auto operator<=>(const MonomialKey&) const = default;
};

struct Monomial {
  MonomialKey key;
  Coefficient coeff;
};

class OperatorExpr {
 public:
  using container_type = std::map<MonomialKey, Coefficient>;

  OperatorExpr() = default;
  OperatorExpr(Coefficient c);
  OperatorExpr(long value) : OperatorExpr(Coefficient(value)) {}
  explicit OperatorExpr(const Monomial& m);

  static OperatorExpr identity() { return OperatorExpr(1); }
  static OperatorExpr r_power(int half_power);
  static OperatorExpr r() { return r_power(2); }
  static OperatorExpr sqrt_r() { return r_power(1); }
  static OperatorExpr phase(PhaseVar v, int k);
  static OperatorExpr derivative(DerivVar v, int order = 1);
  static OperatorExpr i() { return OperatorExpr(Coefficient(Gaussian::i())); }
  static OperatorExpr s(int power = 1) { return OperatorExpr(Coefficient::s(power)); }
  static OperatorExpr u() { return OperatorExpr(Coefficient::u()); }

  const container_type& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// True if no derivative factors appear (a multiplication operator).
  bool is_function() const;
  /// True if some coefficient involves s or u.
  bool depends_on_s() const;

  /// Multiplicative inverse of a single derivative-free term.
  std::optional<OperatorExpr> inverse() const;

  /// Value of a derivative-free, phase-free operator at r = w.
  std::complex<double> evaluate_function(double w, double s_value = 1.0) const;

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(const Coefficient& c);

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator-(const OperatorExpr& a);
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator*(const Coefficient& c, OperatorExpr a) { return a *= c; }
  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

  void add_term(const MonomialKey& key, const Coefficient& c);

 private:
  container_type terms_;
};

OperatorExpr multiply(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr power(const OperatorExpr& a, int n);

/// Replaces s by a positive rational. A remaining u is replaced by
/// (2 value)^{-1/2}, which must then be rational.
/// Throws std::domain_error for value <= 0 or an irrational u.
OperatorExpr substitute_s(const OperatorExpr& expr, const Rational& value);

/// Exchanges alpha and beta in phases and derivatives.
OperatorExpr swap_alpha_beta(const OperatorExpr& expr);

/// Rebuilds the expression by summing its monomials one at a time; the
/// result equals the input for any canonical value.
OperatorExpr normalize(const OperatorExpr& expr);

struct ClosureReport {
  bool closed = false;
  std::size_t dimension = 0;
  std::size_t max_dim = 0;
  /// Linearly independent elements found (inputs first, then new commutators).
  std::vector<OperatorExpr> elements;
};

/// Lie closure of span(basis) under commutators. The span is taken over Q(i),
/// with every (monomial, s^k u^e) pair an independent coordinate.
/// Throws std::invalid_argument when basis is empty or max_dim < basis.size().
ClosureReport closure_check(const std::vector<OperatorExpr>& basis, std::size_t max_dim);

/// Rank over Q(i) of a family of operators (same coordinates as closure_check).
std::size_t span_rank(const std::vector<OperatorExpr>& family);

}  // namespace ladder
