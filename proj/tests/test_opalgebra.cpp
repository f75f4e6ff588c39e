#include "ladder/opalgebra.h"
#include "ladder/opdsl.h"

#include "random_exprs.h"

#include <doctest.h>

using namespace ladder;

namespace {

OperatorExpr P(const char* text) { return dsl::parse(text); }

const OperatorExpr kDr = OperatorExpr::derivative(DerivVar::r);
const OperatorExpr kR = OperatorExpr::r();

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(parse_rational("0.125")) == "1/8");
  CHECK(to_string(parse_rational("-3/4")) == "-3/4");
  CHECK(to_string(parse_rational("010/012")) == "5/6");
  CHECK(to_string(parse_rational("3.07")) == "307/100");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
  CHECK(binomial(6, 2) == 15);
  CHECK(falling_factorial(Rational(1, 2), 2) == Rational(-1, 4));
}

TEST_CASE("coefficient ring reduces u^2 to 1/(2s)") {
  Coefficient u = Coefficient::u();
  CHECK(u * u == Coefficient(Gaussian(Rational(1, 2))) * Coefficient::s(-1));
  CHECK((u * u * Coefficient::s(1)).is_one() == false);
  CHECK((Coefficient(2) * u * u * Coefficient::s(1)).is_one());
  CHECK(Coefficient::s(2).evaluate(0.5) == std::complex<double>(0.25, 0.0));
}

TEST_CASE("normal ordering of products") {
  CHECK(kDr * kR == kR * kDr + OperatorExpr::identity());
  const OperatorExpr e = OperatorExpr::phase(PhaseVar::eta, 1);
  const OperatorExpr deta = OperatorExpr::derivative(DerivVar::eta);
  CHECK(deta * e == e * deta + OperatorExpr::i() * e);
  CHECK(OperatorExpr::sqrt_r() * (OperatorExpr::sqrt_r() * kDr) == kR * kDr);
  CHECK(power(OperatorExpr::sqrt_r(), 2) == kR);
  CHECK(power(kR, -1) == OperatorExpr::r_power(-2));
  CHECK(power(kDr, 0) == OperatorExpr::identity());
  CHECK_THROWS(power(kDr, -1));
  // d/dr r^{-1} = r^{-1} d/dr - r^{-2}
  CHECK(kDr * OperatorExpr::r_power(-2) == OperatorExpr::r_power(-2) * kDr - OperatorExpr::r_power(-4));
}

TEST_CASE("commutator basics") {
  CHECK(commutator(kDr, kR) == OperatorExpr::identity());
  CHECK(commutator(kR, kR).is_zero());
  CHECK(commutator(OperatorExpr::derivative(DerivVar::alpha), OperatorExpr::phase(PhaseVar::alpha, 2)) ==
        OperatorExpr(Coefficient(Gaussian(0, 2))) * OperatorExpr::phase(PhaseVar::alpha, 2));
  CHECK(commutator(OperatorExpr::derivative(DerivVar::beta), OperatorExpr::phase(PhaseVar::alpha, 1)).is_zero());
}

TEST_CASE("substitute_s") {
  CHECK(substitute_s(P("s^2*r"), Rational(1, 2)) == P("1/4*r"));
  CHECK(substitute_s(P("u"), Rational(1, 2)) == OperatorExpr::identity());
  CHECK(substitute_s(P("u*s"), Rational(2)) == P("1"));
  CHECK_THROWS_AS(substitute_s(P("u"), Rational(1)), std::domain_error);
  CHECK_THROWS_AS(substitute_s(P("s"), Rational(0)), std::domain_error);
  CHECK_THROWS_AS(substitute_s(P("s"), Rational(-1)), std::domain_error);
  const OperatorExpr tplus = P("exp(i*eta)*(-r*d/dr + i*d/deta + s*r)");
  CHECK(substitute_s(tplus, Rational(1)) == P("exp(i*eta)*(-r*d/dr + i*d/deta + r)"));
  CHECK_FALSE(substitute_s(tplus, Rational(1)).depends_on_s());
}

TEST_CASE("swap_alpha_beta") {
  const OperatorExpr a = P("exp(i*alpha)*d/dbeta");
  CHECK(swap_alpha_beta(a) == P("exp(i*beta)*d/dalpha"));
  CHECK(swap_alpha_beta(swap_alpha_beta(a)) == a);
}

TEST_CASE("closure_check on small sets") {
  const OperatorExpr x = kR, d = kDr, one = OperatorExpr::identity();
  ClosureReport heis = closure_check({x, d}, 10);
  CHECK(heis.closed);
  CHECK(heis.dimension == 3);
  ClosureReport bounded = closure_check({P("r^2"), P("d/dr^2")}, 2);
  CHECK_FALSE(bounded.closed);
  CHECK_THROWS_AS(closure_check({}, 4), std::invalid_argument);
  CHECK_THROWS_AS(closure_check({x, d, one}, 2), std::invalid_argument);
  CHECK(span_rank({x, x + x, d}) == 2);
  CHECK(span_rank({P("s*r"), kR}) == 2);
}

TEST_CASE("algebraic properties on random operators") {
  ladder::testing::ExprGenerator gen(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const OperatorExpr a = P(gen.expression(2).c_str());
    const OperatorExpr b = P(gen.expression(2).c_str());
    const OperatorExpr c = P(gen.expression(2).c_str());
    CAPTURE(dsl::render(a));
    CAPTURE(dsl::render(b));
    CAPTURE(dsl::render(c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(normalize(a) == a);
    CHECK(normalize(normalize(a)) == normalize(a));
    CHECK(commutator(a, b) == -commutator(b, a));
    CHECK(commutator(a, b + c) == commutator(a, b) + commutator(a, c));
    const OperatorExpr jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                             commutator(c, commutator(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("phase grading is additive under products") {
  ladder::testing::ExprGenerator gen(77);
  auto grade = [](const OperatorExpr& op) { return op.terms().begin()->first.phase; };
  for (int trial = 0; trial < 200; ++trial) {
    const OperatorExpr a = OperatorExpr::phase(PhaseVar::eta, gen.pick(-2, 2)) * P(gen.atom().c_str());
    const OperatorExpr b = OperatorExpr::phase(PhaseVar::beta, gen.pick(-2, 2)) * P(gen.atom().c_str());
    const OperatorExpr ab = a * b;
    if (ab.is_zero()) continue;
    std::array<int, 3> want{};
    for (int v = 0; v < 3; ++v) want[v] = grade(a)[v] + grade(b)[v];
    for (const auto& [key, c] : ab.terms()) CHECK(key.phase == want);
  }
}
