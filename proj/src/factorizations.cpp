#include "ladder/factorizations.h"

#include <cmath>
#include <stdexcept>

namespace ladder {

std::string to_string(FamilyType t) {
  switch (t) {
    case FamilyType::B: return "B";
    case FamilyType::C: return "C";
    case FamilyType::F: return "F";
  }
  return "?";
}

FamilyParams FamilyParams::type_b(Rational a, Rational c, Rational d) {
  if (sgn(a) == 0) throw std::domain_error("type B needs a != 0");
  if (sgn(a) < 0) {
    a = -a;
    d = -d;
  }
  if (sgn(d) <= 0) throw std::domain_error("type B needs d/a > 0");
  FamilyParams p;
  p.type_ = FamilyType::B;
  p.a_ = std::move(a);
  p.c_ = std::move(c);
  p.d_ = std::move(d);
  return p;
}

FamilyParams FamilyParams::type_c(Rational b, Rational c) {
  if (sgn(b) >= 0) throw std::domain_error("type C (class I) needs b < 0");
  FamilyParams p;
  p.type_ = FamilyType::C;
  p.b_ = std::move(b);
  p.c_ = std::move(c);
  return p;
}

FamilyParams FamilyParams::type_f(Rational q) {
  if (sgn(q) >= 0) throw std::domain_error("type F needs q < 0");
  FamilyParams p;
  p.type_ = FamilyType::F;
  p.q_ = std::move(q);
  return p;
}

double FamilyFunctions::variable_at(double x) const {
  return type == FamilyType::B ? std::exp(scale * x) : x;
}

namespace {

OperatorExpr constant(const Rational& value) { return OperatorExpr(Coefficient(Gaussian(value))); }

OperatorExpr r_pow(int n) { return OperatorExpr::r_power(2 * n); }

OperatorExpr potential(const FamilyParams& p, const Rational& m) {
  switch (p.type()) {
    case FamilyType::F:
      return constant(-2 * p.q()) * r_pow(-1) - constant(m * (m + 1)) * r_pow(-2);
    case FamilyType::B: {
      Rational shift = m + p.c() + Rational(1, 2);
      return -(constant(p.d() * p.d()) * r_pow(2)) + constant(2 * p.a() * p.d() * shift) * r_pow(1);
    }
    case FamilyType::C: {
      Rational mc = m + p.c();
      return -(constant(mc * (mc + 1)) * r_pow(-2)) - constant(p.b() * p.b() / 4) * r_pow(2) +
             constant(p.b() * (m - p.c()));
    }
  }
  throw std::logic_error("unknown family");
}

Rational family_L(const FamilyParams& p, const Rational& m) {
  switch (p.type()) {
    case FamilyType::F:
      if (sgn(m) == 0) throw std::domain_error("type F: L(m) has a pole at m = 0");
      return -p.q() * p.q() / (m * m);
    case FamilyType::B: {
      Rational mc = m + p.c();
      return -p.a() * p.a() * mc * mc;
    }
    case FamilyType::C:
      return -2 * p.b() * m + p.b() / 2;
  }
  throw std::logic_error("unknown family");
}

}  // namespace

FamilyFunctions rkl(const FamilyParams& p, const Rational& m) {
  FamilyFunctions f;
  f.type = p.type();
  f.potential = potential(p, m);
  f.L = family_L(p, m);
  switch (p.type()) {
    case FamilyType::F:
      f.k = constant(m) * r_pow(-1) + constant(p.q() / m);
      f.derivative = OperatorExpr::derivative(DerivVar::r);
      break;
    case FamilyType::B:
      f.k = constant(p.d()) * r_pow(1) - constant((m + p.c()) * p.a());
      f.derivative = constant(p.a()) * OperatorExpr::r() * OperatorExpr::derivative(DerivVar::r);
      f.scale = p.a().get_d();
      break;
    case FamilyType::C:
      f.k = constant(m + p.c()) * r_pow(-1) + constant(p.b() / 2) * r_pow(1);
      f.derivative = OperatorExpr::derivative(DerivVar::r);
      break;
  }
  return f;
}

Rational eigenvalue(const FamilyParams& p, const Rational& l) {
  if (p.type() == FamilyType::B) return family_L(p, l);
  if (sgn(l) < 0) throw std::domain_error("class I eigenvalue needs l >= 0");
  return family_L(p, l + 1);
}

std::pair<OperatorExpr, OperatorExpr> ladder(const FamilyParams& p, const Rational& m) {
  FamilyFunctions f = rkl(p, m);
  return {f.derivative + f.k, -f.derivative + f.k};
}

FactorizationCheck check_factorization(const FamilyParams& p, const Rational& m) {
  FamilyFunctions f = rkl(p, m);
  auto [raise, lower] = ladder(p, m);
  const OperatorExpr d2 = f.derivative * f.derivative;
  const OperatorExpr L = constant(f.L);
  FactorizationCheck check;
  check.lowered_residual = lower * raise + L + d2 + f.potential;
  check.raised_residual = raise * lower + L + d2 + potential(p, m - 1);
  return check;
}

// ---------------------------------------------------------------------------

namespace {

void require_f_labels(const Rational& q, const Rational& l, const Rational& m) {
  if (sgn(q) >= 0) throw std::domain_error("q must be negative");
  if (sgn(m) < 0 || l < m) throw std::domain_error("labels must satisfy l >= m >= 0");
}

void require_eps(int eps) {
  if (eps != 1 && eps != -1) throw std::domain_error("epsilon must be +1 or -1");
}

const Rational kHalf(1, 2);

// Relations tying a type B problem at (l_bar, m_bar) to the type C problem it
// maps onto.
void add_b_to_c_rows(std::vector<RelationCheck>& rows, const FamilyParams& bp, const Rational& l_bar,
                     const Rational& m_bar, const FamilyParams& cp, const QuantumMap& map) {
  const Rational ratio = bp.d() / bp.a();
  const Rational lambda_bar = eigenvalue(bp, l_bar);
  const Rational m_hat = map.m_plus_c - cp.c();
  const Rational l_hat = map.l_plus_c - cp.c();
  // The eps = -1 branch gives formal (negative) labels, so read L(l + 1)
  // directly instead of going through the class I domain check.
  const Rational lambda_hat = rkl(cp, l_hat + 1).L;
  const Rational mc = map.m_plus_c;
  rows.push_back({"(mhat+chat)(mhat+chat+1) = -4 lambdabar/abar^2 - 1/4", mc * (mc + 1),
                  -4 * lambda_bar / (bp.a() * bp.a()) - Rational(1, 4)});
  rows.push_back({"bhat^2 = dbar^2/abar^2", cp.b() * cp.b(), ratio * ratio});
  rows.push_back({"bhat (mhat-chat) + lambdahat = 2 (dbar/abar)(mbar+cbar+1/2)",
                  cp.b() * (m_hat - cp.c()) + lambda_hat, 2 * ratio * (m_bar + bp.c() + kHalf)});
}

}  // namespace

TransformResult f_to_b(const Rational& q, const Rational& l, const Rational& m, const Rational& a) {
  require_f_labels(q, l, m);
  if (sgn(a) <= 0) throw std::domain_error("a must be positive");
  TransformResult t{
      "f2b",
      FamilyParams::type_f(q),
      FamilyParams::type_b(a, 0, a * (-q) / (l + 1)),
      l,
      m,
      {l + kHalf, m + kHalf},
      std::nullopt,
      -q / (l + 1),
  };
  return t;
}

TransformResult f_to_c(const Rational& q, const Rational& l, const Rational& m, int eps) {
  require_f_labels(q, l, m);
  require_eps(eps);
  TransformResult t{
      "f2c",
      FamilyParams::type_f(q),
      FamilyParams::type_c(q / (l + 1), 0),
      l,
      m,
      {eps * (2 * m + 1) - kHalf, l + eps * (m + kHalf)},
      eps,
      -q / (l + 1),
  };
  return t;
}

TransformResult b_to_c(const FamilyParams& bp, const Rational& l_bar, const Rational& m_bar, int eps) {
  if (bp.type() != FamilyType::B) throw std::domain_error("b_to_c needs type B parameters");
  require_eps(eps);
  const Rational lc = l_bar + bp.c();
  TransformResult t{
      "b2c",
      bp,
      FamilyParams::type_c(-bp.d() / bp.a(), 0),
      l_bar,
      m_bar,
      {2 * eps * lc - kHalf, m_bar + bp.c() + eps * lc - kHalf},
      eps,
      bp.d() / bp.a(),
  };
  return t;
}

std::vector<RelationCheck> TransformResult::verify() const {
  std::vector<RelationCheck> rows;
  if (kind == "f2b") {
    const Rational q = source.q();
    const Rational lambda = eigenvalue(source, source_l);
    const Rational ratio = target.d() / target.a();
    const Rational l_bar = quantum_map.l_plus_c - target.c();
    const Rational lambda_bar = eigenvalue(target, l_bar);
    rows.push_back({"dbar^2/abar^2 = -lambda", ratio * ratio, -lambda});
    rows.push_back({"(dbar/abar)(mbar+cbar+1/2) = -q", ratio * (quantum_map.m_plus_c + kHalf), -q});
    rows.push_back({"lambdabar/abar^2 = -(m+1/2)^2", lambda_bar / (target.a() * target.a()),
                    -(source_m + kHalf) * (source_m + kHalf)});
    rows.push_back({"dbar/abar = sqrt(-lambda)", ratio, exact_sqrt(Rational(-lambda)).value_or(Rational(-1))});
  } else if (kind == "b2c") {
    add_b_to_c_rows(rows, source, source_l, source_m, target, quantum_map);
  } else if (kind == "f2c") {
    // Route through the intermediate type B problem.
    TransformResult fb = f_to_b(source.q(), source_l, source_m);
    const Rational m_bar = fb.quantum_map.m_plus_c;
    const Rational l_bar = fb.quantum_map.l_plus_c;
    add_b_to_c_rows(rows, fb.target, l_bar, m_bar, target, quantum_map);
    const Rational lambda = eigenvalue(source, source_l);
    rows.push_back({"bhat = q/(l+1)", target.b(), source.q() / (source_l + 1)});
    rows.push_back({"bhat = -sqrt(-lambda)", target.b(), -exact_sqrt(Rational(-lambda)).value_or(Rational(1))});
  }
  rows.push_back({"scale_s^2 = -lambda(target)",
                  scale_s * scale_s,
                  kind == "f2b" ? Rational(-eigenvalue(source, source_l))
                                : Rational(target.b() * target.b())});
  return rows;
}

Rational shifted_charge(const Rational& q, const Rational& label, int direction, AlgebraKind algebra) {
  if (direction != 1 && direction != -1) throw std::domain_error("direction must be +1 or -1");
  if (sgn(label) == 0) throw std::domain_error("zero label");
  if (sgn(label) < 0) throw std::domain_error("label must be positive");
  (void)algebra;  // both rules read q (label +- 1) / label with their own label
  return q * (label + direction) / label;
}

}  // namespace ladder
