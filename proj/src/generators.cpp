#include "ladder/generators.h"

#include <stdexcept>

namespace ladder {

namespace {

OperatorExpr constant(const Rational& value) { return OperatorExpr(Coefficient(Gaussian(value))); }

const OperatorExpr kI = OperatorExpr::i();
const OperatorExpr kS = OperatorExpr::s();
const OperatorExpr kU = OperatorExpr::u();
const OperatorExpr kR = OperatorExpr::r();
const OperatorExpr kSqrtR = OperatorExpr::sqrt_r();
const OperatorExpr kInvSqrtR = OperatorExpr::r_power(-1);
const OperatorExpr kDr = OperatorExpr::derivative(DerivVar::r);
const OperatorExpr kDeta = OperatorExpr::derivative(DerivVar::eta);
const OperatorExpr kDalpha = OperatorExpr::derivative(DerivVar::alpha);
const OperatorExpr kDbeta = OperatorExpr::derivative(DerivVar::beta);

OperatorExpr sign(int dir) { return OperatorExpr(dir); }

}  // namespace

AlgebraReport make_report(std::string name, OperatorExpr lhs, OperatorExpr rhs) {
  AlgebraReport report{std::move(name), std::move(lhs), std::move(rhs), {}, false};
  report.residual = report.lhs - report.rhs;
  report.pass = report.residual.is_zero();
  return report;
}

GeneratorSet build_T() {
  GeneratorSet set{GeneratorSet::Kind::su11, {}, true};
  set.members["T0"] = -(kI * kDeta);
  for (int dir : {1, -1}) {
    OperatorExpr inner = -(sign(dir) * kR * kDr) + kI * kDeta + kS * kR;
    set.members[dir > 0 ? "Tplus" : "Tminus"] = OperatorExpr::phase(PhaseVar::eta, dir) * inner;
  }
  return set;
}

GeneratorSet build_AB() {
  GeneratorSet set{GeneratorSet::Kind::weyl, {}, true};
  const OperatorExpr half_inv_r = constant(Rational(1, 2)) * OperatorExpr::r_power(-2);
  const OperatorExpr label_difference = kI * kDalpha - kI * kDbeta;
  for (int dir : {1, -1}) {
    OperatorExpr a_inner = sign(dir) * kDr + half_inv_r * (label_difference - sign(dir)) - kS;
    OperatorExpr b_inner = sign(dir) * kDr - half_inv_r * (label_difference + sign(dir)) - kS;
    set.members[dir > 0 ? "Aplus" : "Aminus"] = kU * OperatorExpr::phase(PhaseVar::alpha, dir) * kSqrtR * a_inner;
    set.members[dir > 0 ? "Bplus" : "Bminus"] = kU * OperatorExpr::phase(PhaseVar::beta, dir) * kSqrtR * b_inner;
  }
  return set;
}

CasimirResult casimir() {
  const GeneratorSet t = build_T();
  const OperatorExpr& t0 = t["T0"];
  OperatorExpr c = -(t["Tplus"] * t["Tminus"]) + t0 * (t0 - OperatorExpr::identity());
  OperatorExpr rhs = kR * kR * kDr * kDr - constant(2) * kI * kS * kR * kDeta - kS * kS * kR * kR;
  return {c, make_report("-T+T- + T0(T0-1) = r^2 d^2/dr^2 - 2 i s r d/deta - s^2 r^2", c, rhs)};
}

std::vector<AlgebraReport> verify_su11() {
  const GeneratorSet t = build_T();
  return {
      make_report("[T0, T+] = T+", commutator(t["T0"], t["Tplus"]), t["Tplus"]),
      make_report("[T0, T-] = -T-", commutator(t["T0"], t["Tminus"]), -t["Tminus"]),
      make_report("[T+, T-] = -2 T0", commutator(t["Tplus"], t["Tminus"]), constant(-2) * t["T0"]),
  };
}

std::vector<AlgebraReport> verify_casimir() {
  const GeneratorSet t = build_T();
  CasimirResult c = casimir();
  std::vector<AlgebraReport> rows{c.identity};
  for (const char* name : {"T0", "Tplus", "Tminus"})
    rows.push_back(make_report(std::string("[C, ") + name + "] = 0", commutator(c.casimir, t[name]), {}));
  return rows;
}

std::vector<AlgebraReport> verify_weyl() {
  const GeneratorSet g = build_AB();
  const OperatorExpr one = OperatorExpr::identity();
  return {
      make_report("[A-, A+] = 1", commutator(g["Aminus"], g["Aplus"]), one),
      make_report("[B-, B+] = 1", commutator(g["Bminus"], g["Bplus"]), one),
      make_report("[A+, B+] = 0", commutator(g["Aplus"], g["Bplus"]), {}),
      make_report("[A+, B-] = 0", commutator(g["Aplus"], g["Bminus"]), {}),
      make_report("[A-, B+] = 0", commutator(g["Aminus"], g["Bplus"]), {}),
      make_report("[A-, B-] = 0", commutator(g["Aminus"], g["Bminus"]), {}),
  };
}

std::vector<AlgebraReport> verify_jacobi(const std::map<std::string, OperatorExpr>& ops) {
  std::vector<std::pair<std::string, const OperatorExpr*>> list;
  for (const auto& [name, op] : ops) list.emplace_back(name, &op);
  std::vector<AlgebraReport> rows;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j)
      for (std::size_t k = j + 1; k < list.size(); ++k) {
        const OperatorExpr& a = *list[i].second;
        const OperatorExpr& b = *list[j].second;
        const OperatorExpr& c = *list[k].second;
        OperatorExpr jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                           commutator(c, commutator(a, b));
        rows.push_back(make_report("Jacobi(" + list[i].first + ", " + list[j].first + ", " + list[k].first + ")",
                                   jac, {}));
      }
  return rows;
}

std::vector<std::pair<std::string, OperatorExpr>> weyl_bilinears() {
  const GeneratorSet g = build_AB();
  const OperatorExpr &ap = g["Aplus"], &am = g["Aminus"], &bp = g["Bplus"], &bm = g["Bminus"];
  const OperatorExpr half = constant(Rational(1, 2));
  return {
      {"A+A+", ap * ap},
      {"A-A-", am * am},
      {"B+B+", bp * bp},
      {"B-B-", bm * bm},
      {"{A+,A-}/2", half * (ap * am + am * ap)},
      {"{B+,B-}/2", half * (bp * bm + bm * bp)},
      {"A+B+", ap * bp},
      {"A+B-", ap * bm},
      {"A-B+", am * bp},
      {"A-B-", am * bm},
  };
}

// ---------------------------------------------------------------------------

OperatorExpr AffineOperator::at(const Rational& l, const Rational& m) const {
  return base + constant(l) * l_part + constant(m) * m_part;
}

OperatorExpr AffineOperator::substitute(const OperatorExpr& l_op, const OperatorExpr& m_op) const {
  return base + l_part * l_op + m_part * m_op;
}

std::pair<AffineOperator, AffineOperator> transformed_ladders(TransformedKind kind) {
  auto build = [kind](int dir) {
    const Rational half_dir(dir, 2);
    AffineOperator h;
    switch (kind) {
      case TransformedKind::tilde:
        h.base = sign(dir) * kR * kDr + kS * kR - constant(Rational(1, 2) + half_dir);
        h.l_part = constant(-1);
        break;
      case TransformedKind::check1:
        // (2m + 1/2 -+ 1/2) / (2r) = m/r + (1/2 -+ 1/2)/(2r)
        h.base = sign(dir) * kSqrtR * kDr + constant((Rational(1, 2) - half_dir) / 2) * kInvSqrtR - kS * kSqrtR;
        h.m_part = kInvSqrtR;
        break;
      case TransformedKind::check2:
        // -(2m + 3/2 +- 1/2) / (2r) = -m/r - (3/2 +- 1/2)/(2r)
        h.base = sign(dir) * kSqrtR * kDr - constant((Rational(3, 2) + half_dir) / 2) * kInvSqrtR - kS * kSqrtR;
        h.m_part = -kInvSqrtR;
        break;
    }
    return h;
  };
  return {build(1), build(-1)};
}

std::pair<OperatorExpr, OperatorExpr> transformed_ladders(TransformedKind kind, const Rational& l, const Rational& m) {
  auto [plus, minus] = transformed_ladders(kind);
  return {plus.at(l, m), minus.at(l, m)};
}

std::pair<OperatorExpr, OperatorExpr> algebraize_tilde() {
  auto [h_plus, h_minus] = transformed_ladders(TransformedKind::tilde);
  const OperatorExpr t_op = -(kI * kDeta);
  auto build = [&](int dir) {
    // H~ with the opposite sign, at l + 1/2 +- 1/2 = t - 1/2 +- 1/2
    const AffineOperator& h = dir > 0 ? h_minus : h_plus;
    OperatorExpr l_arg = t_op - constant(Rational(1, 2)) + constant(Rational(dir, 2));
    return OperatorExpr::phase(PhaseVar::eta, dir) * h.substitute(l_arg, {});
  };
  return {build(1), build(-1)};
}

std::map<std::string, OperatorExpr> algebraize_check() {
  const OperatorExpr mu_op = -(kI * kDalpha);
  const OperatorExpr nu_op = -(kI * kDbeta);
  const OperatorExpr half = constant(Rational(1, 2));
  const OperatorExpr l_op = half * (mu_op + nu_op - OperatorExpr::identity());
  const OperatorExpr m_op = half * (nu_op - mu_op - OperatorExpr::identity());
  const auto check1 = transformed_ladders(TransformedKind::check1);
  const auto check2 = transformed_ladders(TransformedKind::check2);

  std::map<std::string, OperatorExpr> out;
  for (int dir : {1, -1}) {
    const Rational quarter_dir(dir, 4);
    const Rational quarter(1, 4);
    OperatorExpr l_arg = l_op + constant(quarter_dir - quarter);
    OperatorExpr m_arg_a = m_op + constant(quarter - quarter_dir);
    OperatorExpr m_arg_b = m_op + constant(quarter_dir - quarter);
    const AffineOperator& h1 = dir > 0 ? check1.first : check1.second;
    const AffineOperator& h2 = dir > 0 ? check2.first : check2.second;
    out[dir > 0 ? "Aplus" : "Aminus"] = kU * OperatorExpr::phase(PhaseVar::alpha, dir) * h1.substitute(l_arg, m_arg_a);
    out[dir > 0 ? "Bplus" : "Bminus"] = kU * OperatorExpr::phase(PhaseVar::beta, dir) * h2.substitute(l_arg, m_arg_b);
  }
  return out;
}

std::pair<Rational, Rational> label_shift(TransformedKind kind, int direction) {
  if (direction != 1 && direction != -1) throw std::domain_error("direction must be +1 or -1");
  OperatorExpr generator;
  if (kind == TransformedKind::tilde) {
    // H~+- sits inside T-+.
    auto [tp, tm] = algebraize_tilde();
    generator = direction > 0 ? tm : tp;
  } else {
    auto ops = algebraize_check();
    const char* name = kind == TransformedKind::check1 ? (direction > 0 ? "Aplus" : "Aminus")
                                                       : (direction > 0 ? "Bplus" : "Bminus");
    generator = ops.at(name);
  }
  const auto& phase = generator.terms().begin()->first.phase;
  for (const auto& [key, c] : generator.terms())
    if (key.phase != phase) throw std::logic_error("generator is not homogeneous in the phase grading");
  if (kind == TransformedKind::tilde) return {Rational(phase[0]), Rational(0)};
  Rational dmu(phase[1]), dnu(phase[2]);
  return {Rational((dmu + dnu) / 2), Rational((dnu - dmu) / 2)};
}

}  // namespace ladder
