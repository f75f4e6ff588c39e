// One PASS/FAIL line per acceptance criterion. Exit status is non-zero when
// any criterion fails.

#include "ladder/coulomb.h"
#include "ladder/factorizations.h"
#include "ladder/generators.h"
#include "ladder/opdsl.h"

#include "random_exprs.h"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace ladder;
using namespace ladder::coulomb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("AC%-2d %s  %s  [%s]\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str());
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome all_rows(const std::vector<AlgebraReport>& rows) {
  Outcome o;
  int bad = 0;
  for (const auto& r : rows)
    if (!r.pass || !r.residual.is_zero()) {
      ++bad;
      o.detail += r.name + " residual " + dsl::render(r.residual) + "; ";
    }
  o.pass = bad == 0;
  o.detail += std::to_string(rows.size() - bad) + "/" + std::to_string(rows.size()) + " zero residuals";
  return o;
}

std::shared_ptr<const QuadratureRule> shared_rule() {
  static auto rule = std::make_shared<const QuadratureRule>(gauss_laguerre(quadrature_order(Rational(9))));
  return rule;
}

Rational random_rational(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> den(1, 7);
  const int d = den(rng);
  std::uniform_int_distribution<int> num(lo * d, hi * d);
  Rational q(num(rng), d);
  q.canonicalize();
  return q;
}

Rational random_nonzero(std::mt19937& rng, int lo, int hi) {
  Rational q;
  do q = random_rational(rng, lo, hi);
  while (sgn(q) == 0);
  return q;
}

const int kCharges[] = {1, 2, 6};

}  // namespace

int main() {
  criterion(1, "su(1,1) commutators, s formal", [] { return all_rows(verify_su11()); });

  criterion(2, "Casimir identity", [] { return all_rows({casimir().identity}); });

  criterion(3, "Heisenberg-Weyl relations", [] { return all_rows(verify_weyl()); });

  criterion(4, "closure dimensions 3, 5, 10", [] {
    const GeneratorSet t = build_T();
    const GeneratorSet ab = build_AB();
    std::vector<OperatorExpr> bilinears;
    for (const auto& [name, op] : weyl_bilinears()) bilinears.push_back(op);
    const ClosureReport a = closure_check({t["T0"], t["Tplus"], t["Tminus"]}, 32);
    const ClosureReport b =
        closure_check({ab["Aplus"], ab["Aminus"], ab["Bplus"], ab["Bminus"], OperatorExpr::identity()}, 32);
    const ClosureReport c = closure_check(bilinears, 32);
    Outcome o;
    o.pass = a.closed && b.closed && c.closed && a.dimension == 3 && b.dimension == 5 && c.dimension == 10;
    o.detail = "dims " + std::to_string(a.dimension) + ", " + std::to_string(b.dimension) + ", " +
               std::to_string(c.dimension);
    return o;
  });

  criterion(5, "factorization identities, 20 random points per family", [] {
    std::mt19937 rng(20240101);
    int checked = 0, bad = 0;
    for (int k = 0; k < 20; ++k) {
      const FamilyParams f = FamilyParams::type_f(-Rational(abs(random_nonzero(rng, -6, 6))));
      // Admissible type B: d/a > 0, either sign of a.
      const Rational a = random_nonzero(rng, -4, 4);
      const Rational d = sgn(a) * Rational(abs(random_nonzero(rng, -4, 4)));
      const FamilyParams b = FamilyParams::type_b(a, random_rational(rng, -3, 3), d);
      const FamilyParams c =
          FamilyParams::type_c(-Rational(abs(random_nonzero(rng, -4, 4))), random_rational(rng, -3, 3));
      bad += !check_factorization(f, random_nonzero(rng, -5, 5)).pass();
      bad += !check_factorization(b, random_rational(rng, -5, 5)).pass();
      bad += !check_factorization(c, random_rational(rng, -5, 5)).pass();
      checked += 3;
    }
    return Outcome{bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " points exact"};
  });

  criterion(6, "E_n = lambda/2 from the type F rule, Z in {1,2,6}, n <= 8", [] {
    int bad = 0;
    for (int Z : kCharges)
      for (int n = 1; n <= 8; ++n) bad += energy(Z, n) != eigenvalue(FamilyParams::type_f(-Z), n - 1) / 2;
    return Outcome{bad == 0, std::to_string(24 - bad) + "/24 exact"};
  });

  criterion(7, "T+- actions, 1 <= t <= 6", [] {
    const Tolerances tol;
    double worst_coef = 0, worst_l2 = 0;
    int bad = 0, count = 0;
    for (int Z : kCharges)
      for (int t = 1; t <= 6; ++t)
        for (int m = 0; m < t; ++m)
          for (int dir : {1, -1}) {
            ActionReport r = check_action(Generator::T, dir, QuantumState::make(SuLabels{t, m}, Z), tol, shared_rule());
            ++count;
            bad += !r.pass;
            worst_coef = std::max(worst_coef, r.coefficient_error);
            worst_l2 = std::max(worst_l2, r.l2_error);
          }
    return Outcome{bad == 0, std::to_string(count - bad) + "/" + std::to_string(count) + ", max coef err " +
                                 fmt(worst_coef) + ", max L2 " + fmt(worst_l2)};
  });

  criterion(8, "A+-, B+- actions, mu <= 5, nu <= 7, nu - mu odd", [] {
    const Tolerances tol;
    double worst = 0;
    int bad = 0, count = 0;
    for (int Z : kCharges)
      for (int mu = 0; mu <= 5; ++mu)
        for (int nu = mu + 1; nu <= 7; nu += 2)
          for (Generator g : {Generator::A, Generator::B})
            for (int dir : {1, -1}) {
              ActionReport r = check_action(g, dir, QuantumState::make(WeylLabels{mu, nu}, Z), tol, shared_rule());
              ++count;
              bad += !r.pass;
              worst = std::max(worst, r.coefficient_error);
            }
    return Outcome{bad == 0,
                   std::to_string(count - bad) + "/" + std::to_string(count) + ", max coef err " + fmt(worst)};
  });

  criterion(9, "annihilation: T- at t = m+1, A- at mu = 0", [] {
    double worst = 0;
    for (int Z : kCharges) {
      for (int t = 1; t <= 6; ++t)
        worst = std::max(worst, apply_T(-1, QuantumState::make(SuLabels{t, t - 1}, Z), shared_rule()).norm());
      for (int nu = 1; nu <= 7; nu += 2)
        worst = std::max(worst,
                         apply_AB(Generator::A, -1, QuantumState::make(WeylLabels{0, nu}, Z), shared_rule()).norm());
    }
    return Outcome{worst <= 1e-10, "max norm " + fmt(worst)};
  });

  criterion(10, "normalization |<psi|psi> - 1| <= 1e-12", [] {
    double worst = 0;
    int count = 0;
    for (int Z : kCharges) {
      for (int t = 1; t <= 7; ++t)
        for (int m = 0; m < t; ++m, ++count)
          worst = std::max(worst, check_norm(QuantumState::make(SuLabels{t, m}, Z), 1e-12, shared_rule()).error);
      for (int mu = 0; mu <= 6; ++mu)
        for (int nu = mu; nu <= 8; ++nu, ++count)
          worst = std::max(worst, check_norm(QuantumState::make(WeylLabels{mu, nu}, Z), 1e-12, shared_rule()).error);
    }
    return Outcome{worst <= 1e-12, std::to_string(count) + " states, max error " + fmt(worst)};
  });

  criterion(11, "Schrodinger residual <= 1e-8, perturbed lambda >= 1e-2", [] {
    double worst = 0, weakest_control = 1e300;
    for (int Z : kCharges)
      for (int t = 1; t <= 6; ++t)
        for (int m = 0; m < t; ++m) {
          const QuantumState s = QuantumState::make(SuLabels{t, m}, Z);
          worst = std::max(worst, schrodinger_residual(s, shared_rule()));
          weakest_control = std::min(weakest_control, schrodinger_residual(s, shared_rule(), 0.1));
        }
    return Outcome{worst <= 1e-8 && weakest_control >= 1e-2,
                   "max residual " + fmt(worst) + ", min control " + fmt(weakest_control)};
  });

  criterion(12, "gamma and E unchanged by every ladder step (exact)", [] {
    int bad = 0, count = 0;
    for (int Z : kCharges) {
      for (int t = 1; t <= 6; ++t)
        for (int m = 0; m < t; ++m)
          for (int dir : {1, -1}) {
            if (t + dir < 1) continue;
            ++count;
            bad += !charge_shift_consistency(SuLabels{t, m}, Z, Generator::T, dir).pass;
          }
      for (int mu = 0; mu <= 5; ++mu)
        for (int nu = mu + 1; nu <= 7; nu += 2)
          for (Generator g : {Generator::A, Generator::B})
            for (int dir : {1, -1}) {
              ++count;
              bad += !charge_shift_consistency(WeylLabels{mu, nu}, Z, g, dir).pass;
            }
    }
    return Outcome{bad == 0, std::to_string(count - bad) + "/" + std::to_string(count) + " steps"};
  });

  criterion(13, "parse(render(e)) = e for 1000 generated operators", [] {
    std::mt19937 rng(13);
    int bad = 0;
    std::string first_bad;
    for (int k = 0; k < 1000; ++k) {
      const OperatorExpr e = ladder::testing::random_operator(rng);
      const std::string text = dsl::render(e);
      bool ok = false;
      try {
        ok = dsl::parse(text) == e;
      } catch (const dsl::ParseError&) {
      }
      if (!ok && bad++ == 0) first_bad = text;
    }
    return Outcome{bad == 0, std::to_string(1000 - bad) + "/1000" + (bad ? ", first failure: " + first_bad : "")};
  });

  std::printf("%s: %d of 13 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
