#include "ladder/coulomb.h"

#include "ladder/factorizations.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ladder::coulomb {

double laguerre(int n, double alpha, double x) {
  if (n < 0) return 0.0;
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_derivative(int n, double alpha, double x, int order) {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  double value = laguerre(n - order, alpha + order, x);
  return order % 2 ? -value : value;
}

QuadratureRule gauss_laguerre(int order, double alpha) {
  if (order < 1) throw std::invalid_argument("quadrature order must be positive");
  QuadratureRule rule;
  rule.alpha = alpha;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int n = order;
  const double log_scale = std::lgamma(alpha + n) - std::lgamma(static_cast<double>(n));
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    // Initial guesses from the usual asymptotic fits, then Newton.
    if (i == 0) {
      z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * n + 1.8 * alpha);
    } else if (i == 1) {
      z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * n);
    } else {
      const double ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai)) * (z - rule.nodes[i - 2]) /
           (1.0 + 0.3 * alpha);
    }
    double p1 = 0.0, p2 = 0.0, pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      p1 = 1.0;
      p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0 + alpha - z) * p2 - (j - 1.0 + alpha) * p3) / j;
      }
      pp = (n * p1 - (n + alpha) * p2) / z;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-14 * std::abs(z)) break;
    }
    rule.nodes[i] = z;
    rule.weights[i] = -std::exp(log_scale) / (pp * n * p2);
  }
  return rule;
}

Rational energy(const Rational& Z, const Rational& n) {
  if (sgn(Z) <= 0) throw std::domain_error("Z must be positive");
  if (sgn(n) <= 0) throw std::domain_error("n must be positive");
  return -Z * Z / (2 * n * n);
}

// ---------------------------------------------------------------------------

std::string describe(const Labels& labels) {
  std::ostringstream os;
  if (const auto* su = std::get_if<SuLabels>(&labels))
    os << "(t=" << su->t << ",m=" << su->m << ")";
  else {
    const auto& w = std::get<WeylLabels>(labels);
    os << "(mu=" << w.mu << ",nu=" << w.nu << ")";
  }
  return os.str();
}

bool valid(const Labels& labels) {
  if (const auto* su = std::get_if<SuLabels>(&labels)) return su->t >= 1 && su->m >= 0 && su->m <= su->t - 1;
  const auto& w = std::get<WeylLabels>(labels);
  return w.mu >= 0 && w.nu >= w.mu;
}

Rational principal(const Labels& labels) {
  if (const auto* su = std::get_if<SuLabels>(&labels)) return Rational(su->t);
  const auto& w = std::get<WeylLabels>(labels);
  Rational n(w.mu + w.nu + 1, 2);
  n.canonicalize();
  return n;
}

QuantumState::QuantumState(Labels labels, Rational gamma) : labels_(std::move(labels)), gamma_(std::move(gamma)) {
  if (!valid(labels_)) throw std::invalid_argument("inconsistent labels " + describe(labels_));
  if (sgn(gamma_) <= 0) throw std::invalid_argument("gamma must be positive");
  const double g = gamma_.get_d();
  if (const auto* su = std::get_if<SuLabels>(&labels_)) {
    const int t = su->t, m = su->m;
    power_ = m + 1;
    degree_ = t - m - 1;
    alpha_ = 2 * m + 1;
    norm_ = std::exp(0.5 * (std::log(g) + std::lgamma(t - m) - std::log(2.0 * t) - std::lgamma(t + m + 1.0)));
  } else {
    const auto& w = std::get<WeylLabels>(labels_);
    power_ = 0.5 * (w.nu - w.mu + 1);
    degree_ = w.mu;
    alpha_ = w.nu - w.mu;
    norm_ = std::exp(0.5 * (std::log(g) + std::lgamma(w.mu + 1.0) - std::log(w.mu + w.nu + 1.0) -
                            std::lgamma(w.nu + 1.0)));
  }
}

QuantumState QuantumState::make(const Labels& labels, const Rational& Z) {
  if (sgn(Z) <= 0) throw std::invalid_argument("Z must be positive");
  if (!valid(labels)) throw std::invalid_argument("inconsistent labels " + describe(labels));
  return QuantumState(labels, Rational(2 * Z / coulomb::principal(labels)));
}

QuantumState QuantumState::with_gamma(const Labels& labels, const Rational& gamma) {
  return QuantumState(labels, gamma);
}

bool QuantumState::physical() const {
  if (is_su()) return true;
  const auto& w = std::get<WeylLabels>(labels_);
  return (w.nu - w.mu) % 2 == 1;
}

std::array<int, 3> QuantumState::phase_labels() const {
  if (const auto* su = std::get_if<SuLabels>(&labels_)) return {su->t, 0, 0};
  const auto& w = std::get<WeylLabels>(labels_);
  return {0, w.mu, w.nu};
}

double QuantumState::value(double rho) const { return std::exp(-0.5 * rho) * reduced(rho, 0); }

double QuantumState::reduced(double rho, int order) const {
  // exp(rho/2) d^k [exp(-rho/2) g] = sum_j C(k,j) (-1/2)^{k-j} g^{(j)},
  // g = N rho^p L(rho), g^{(j)} = N sum_i C(j,i) (p)_i rho^{p-i} L^{(j-i)}.
  double total = 0.0;
  for (int j = 0; j <= order; ++j) {
    double gj = 0.0;
    double falling = 1.0;
    for (int i = 0; i <= j; ++i) {
      if (i > 0) falling *= power_ - (i - 1);
      if (falling == 0.0) break;
      gj += binomial(j, i).get_d() * falling * std::pow(rho, power_ - i) *
            laguerre_derivative(degree_, alpha_, rho, j - i);
    }
    total += binomial(order, j).get_d() * std::pow(-0.5, order - j) * gj;
  }
  return norm_ * total;
}

// ---------------------------------------------------------------------------

SampledFunction& SampledFunction::operator-=(const SampledFunction& o) {
  if (o.reduced.size() != reduced.size()) throw std::invalid_argument("sampled on different rules");
  for (std::size_t k = 0; k < reduced.size(); ++k) reduced[k] -= o.reduced[k];
  return *this;
}

SampledFunction& SampledFunction::operator*=(std::complex<double> c) {
  for (auto& v : reduced) v *= c;
  return *this;
}

std::complex<double> SampledFunction::inner(const SampledFunction& other) const {
  std::complex<double> total = 0.0;
  for (std::size_t k = 0; k < reduced.size(); ++k) total += rule->weights[k] * std::conj(reduced[k]) * other.reduced[k];
  return total / gamma;
}

double SampledFunction::norm() const { return std::sqrt(std::max(0.0, inner(*this).real())); }

namespace {

SampledFunction blank(const QuantumState& state, std::shared_ptr<const QuadratureRule> rule) {
  SampledFunction f;
  f.gamma = state.gamma().get_d();
  f.reduced.assign(rule->nodes.size(), 0.0);
  f.rule = std::move(rule);
  return f;
}

}  // namespace

SampledFunction sample(const QuantumState& state, std::shared_ptr<const QuadratureRule> rule) {
  SampledFunction f = blank(state, std::move(rule));
  for (std::size_t k = 0; k < f.reduced.size(); ++k) f.reduced[k] = state.reduced(f.rule->nodes[k], 0);
  return f;
}

int quadrature_order(const Rational& max_principal) {
  Rational n = max_principal;
  mpz_class ceil_n;
  mpz_cdiv_q(ceil_n.get_mpz_t(), n.get_num_mpz_t(), n.get_den_mpz_t());
  return 2 * static_cast<int>(ceil_n.get_si()) + 8;
}

std::string to_string(Generator g, int direction) {
  std::string name = g == Generator::T ? "T" : g == Generator::A ? "A" : "B";
  return name + (direction > 0 ? "+" : "-");
}

SampledFunction apply_T(int direction, const QuantumState& state, std::shared_ptr<const QuadratureRule> rule) {
  if (!state.is_su()) throw std::invalid_argument("T acts on (t, m) labeled states");
  const double t = std::get<SuLabels>(state.labels()).t;
  SampledFunction f = blank(state, std::move(rule));
  for (std::size_t k = 0; k < f.reduced.size(); ++k) {
    const double rho = f.rule->nodes[k];
    const double v = state.reduced(rho, 0);
    f.reduced[k] = -direction * rho * state.reduced(rho, 1) - t * v + 0.5 * rho * v;
  }
  return f;
}

SampledFunction apply_AB(Generator which, int direction, const QuantumState& state,
                         std::shared_ptr<const QuadratureRule> rule) {
  if (state.is_su()) throw std::invalid_argument("A and B act on (mu, nu) labeled states");
  if (which == Generator::T) throw std::invalid_argument("apply_AB needs A or B");
  const auto& w = std::get<WeylLabels>(state.labels());
  const double diff = w.nu - w.mu;
  SampledFunction f = blank(state, std::move(rule));
  for (std::size_t k = 0; k < f.reduced.size(); ++k) {
    const double rho = f.rule->nodes[k];
    const double v = state.reduced(rho, 0);
    const double dv = state.reduced(rho, 1);
    const double centrifugal =
        which == Generator::A ? (diff - direction) / (2.0 * rho) : -(diff + direction) / (2.0 * rho);
    f.reduced[k] = std::sqrt(rho) * (direction * dv + centrifugal * v - 0.5 * v);
  }
  return f;
}

std::map<std::array<int, 3>, SampledFunction> apply_operator(const OperatorExpr& op, const QuantumState& state,
                                                             std::shared_ptr<const QuadratureRule> rule) {
  const double gamma = state.gamma().get_d();
  const double s_value = 0.5 * gamma;
  const auto labels = state.phase_labels();
  std::map<std::array<int, 3>, SampledFunction> sectors;
  for (const auto& [key, coeff] : op.terms()) {
    std::complex<double> c = coeff.evaluate(s_value);
    for (int v = 0; v < 3; ++v) c *= std::pow(std::complex<double>(0.0, labels[v]), key.deriv[v + 1]);
    if (c == 0.0) continue;
    auto [it, inserted] = sectors.try_emplace(key.phase, blank(state, rule));
    SampledFunction& f = it->second;
    const int dr = key.deriv[0];
    const double radial_scale = std::pow(gamma, dr) * std::pow(gamma, -0.5 * key.r_half_power);
    for (std::size_t k = 0; k < f.reduced.size(); ++k) {
      const double rho = f.rule->nodes[k];
      f.reduced[k] += c * radial_scale * std::pow(rho, 0.5 * key.r_half_power) * state.reduced(rho, dr);
    }
  }
  return sectors;
}

// ---------------------------------------------------------------------------

double action_coefficient(Generator g, int direction, const Labels& labels) {
  if (direction != 1 && direction != -1) throw std::domain_error("direction must be +1 or -1");
  const double d = direction;
  if (g == Generator::T) {
    const auto& su = std::get<SuLabels>(labels);
    const double t = su.t, m = su.m;
    return -std::sqrt(std::max(0.0, (t + d) * (t - d * m) * (t + d * m + d) / t));
  }
  const auto& w = std::get<WeylLabels>(labels);
  const double total = w.mu + w.nu + 1.0;
  const double label = g == Generator::A ? w.mu : w.nu;
  const double value = std::sqrt(std::max(0.0, (total + d) * (label + 0.5 + 0.5 * d) / total));
  return g == Generator::A ? value : -value;
}

std::optional<Labels> shifted_labels(Generator g, int direction, const Labels& labels) {
  Labels out = labels;
  if (g == Generator::T)
    std::get<SuLabels>(out).t += direction;
  else if (g == Generator::A)
    std::get<WeylLabels>(out).mu += direction;
  else
    std::get<WeylLabels>(out).nu += direction;
  if (!valid(out)) return std::nullopt;
  return out;
}

ActionReport check_action(Generator g, int direction, const QuantumState& state, const Tolerances& tol,
                          std::shared_ptr<const QuadratureRule> rule) {
  ActionReport report;
  report.generator = to_string(g, direction);
  report.source = describe(state.labels());
  report.closed = action_coefficient(g, direction, state.labels());
  report.tolerance_coefficient = tol.coefficient;
  report.tolerance_pointwise = tol.pointwise;

  SampledFunction image = g == Generator::T ? apply_T(direction, state, rule) : apply_AB(g, direction, state, rule);
  auto target_labels = shifted_labels(g, direction, state.labels());
  if (!target_labels) {
    // Ladder end: the image must vanish.
    report.target = "0";
    report.numeric = 0.0;
    report.l2_error = image.norm();
    report.coefficient_error = std::abs(report.closed);
    report.pass = report.closed == 0.0 && report.l2_error <= tol.coefficient;
    return report;
  }
  QuantumState target = QuantumState::with_gamma(*target_labels, state.gamma());
  report.target = describe(*target_labels);
  SampledFunction target_fn = sample(target, rule);
  report.numeric = target_fn.inner(image).real();
  if (report.closed == 0.0) {
    report.coefficient_error = std::abs(report.numeric);
    report.l2_error = image.norm();
    report.pass = report.coefficient_error <= tol.coefficient && report.l2_error <= tol.coefficient;
    return report;
  }
  report.coefficient_error = std::abs(report.numeric - report.closed) / std::abs(report.closed);
  SampledFunction expected = target_fn;
  expected *= report.closed;
  SampledFunction diff = image;
  diff -= expected;
  report.l2_error = diff.norm() / expected.norm();
  report.pass = report.coefficient_error <= tol.coefficient && report.l2_error <= tol.pointwise;
  return report;
}

NormReport check_norm(const QuantumState& state, double tol, std::shared_ptr<const QuadratureRule> rule) {
  SampledFunction f = sample(state, std::move(rule));
  NormReport report;
  report.state = describe(state.labels());
  report.norm_squared = f.inner(f).real();
  report.error = std::abs(report.norm_squared - 1.0);
  report.pass = report.error <= tol;
  return report;
}

double schrodinger_residual(const QuantumState& state, std::shared_ptr<const QuadratureRule> rule,
                            double lambda_shift) {
  if (!state.is_su()) throw std::invalid_argument("schrodinger_residual needs (t, m) labels");
  const auto& su = std::get<SuLabels>(state.labels());
  const double gamma = state.gamma().get_d();
  const double q = -state.charge().get_d();
  const double lambda = Rational(2 * energy(state.charge(), state.principal())).get_d() + lambda_shift;
  const double centrifugal = su.m * (su.m + 1.0);
  double max_residual = 0.0;
  double max_psi = 0.0;
  for (double rho : rule->nodes) {
    const double r = rho / gamma;
    const double damp = std::exp(-0.5 * rho);
    const double psi = damp * state.reduced(rho, 0);
    const double psi_rr = gamma * gamma * damp * state.reduced(rho, 2);
    const double residual = psi_rr - 2.0 * q / r * psi - centrifugal / (r * r) * psi + lambda * psi;
    max_residual = std::max(max_residual, std::abs(residual));
    max_psi = std::max(max_psi, std::abs(psi));
  }
  return max_residual / max_psi;
}

CasimirReport check_casimir(const OperatorExpr& casimir, const QuantumState& state, double tol,
                            std::shared_ptr<const QuadratureRule> rule) {
  if (!state.is_su()) throw std::invalid_argument("the su(1,1) Casimir acts on (t, m) labeled states");
  const auto& su = std::get<SuLabels>(state.labels());
  CasimirReport report;
  report.state = describe(state.labels());
  report.eigenvalue = su.m * (su.m + 1.0);

  auto sectors = apply_operator(casimir, state, rule);
  SampledFunction expected = sample(state, rule);
  expected *= report.eigenvalue;
  double stray = 0.0;
  SampledFunction diagonal = expected;
  diagonal *= 0.0;
  for (auto& [phase, fn] : sectors) {
    if (phase == std::array<int, 3>{})
      diagonal = fn;
    else
      stray += fn.norm();
  }
  diagonal -= expected;
  report.l2_error = (diagonal.norm() + stray) / std::max(1.0, report.eigenvalue);
  report.pass = report.l2_error <= tol;
  return report;
}

ChargeShiftReport charge_shift_consistency(const Labels& labels, const Rational& Z, Generator g, int direction) {
  if (direction != 1 && direction != -1) throw std::domain_error("direction must be +1 or -1");
  if (!valid(labels)) throw std::domain_error("inconsistent labels " + describe(labels));
  if ((g == Generator::T) != std::holds_alternative<SuLabels>(labels))
    throw std::domain_error("generator does not act on this labeling");
  ChargeShiftReport r;
  r.generator = to_string(g, direction);
  r.Z = Z;
  r.n = principal(labels);
  const Rational delta = g == Generator::T ? Rational(1) : Rational(1, 2);
  r.n_shifted = r.n + direction * delta;
  if (sgn(r.n_shifted) <= 0) throw std::domain_error("step reaches n' <= 0");
  r.Z_shifted = Z * r.n_shifted / r.n;
  r.gamma = 2 * Z / r.n;
  r.gamma_shifted = 2 * r.Z_shifted / r.n_shifted;
  r.energy = energy(Z, r.n);
  r.energy_shifted = energy(r.Z_shifted, r.n_shifted);
  const Rational label = g == Generator::T ? r.n : Rational(2 * r.n);
  r.q_from_rule = shifted_charge(-Z, label, direction, g == Generator::T ? AlgebraKind::su11 : AlgebraKind::weyl);
  r.integral_charge = is_integer(r.Z_shifted);
  r.pass = r.gamma == r.gamma_shifted && r.energy == r.energy_shifted && r.q_from_rule == -r.Z_shifted;
  return r;
}

}  // namespace ladder::coulomb
