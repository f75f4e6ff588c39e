#include "ladder/factorizations.h"
#include "ladder/opdsl.h"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ladder;

namespace {

Rational random_rational(std::mt19937& rng, int lo, int hi, int max_den = 6) {
  std::uniform_int_distribution<int> num(lo * max_den, hi * max_den);
  std::uniform_int_distribution<int> den(1, max_den);
  const int d = den(rng);
  Rational q(num(rng) * d / max_den, d);
  q.canonicalize();
  return q;
}

Rational nonzero(std::mt19937& rng, int lo, int hi) {
  Rational q;
  do q = random_rational(rng, lo, hi);
  while (sgn(q) == 0);
  return q;
}

OperatorExpr P(const char* text) { return dsl::parse(text); }

}  // namespace

TEST_CASE("admissible parameters") {
  CHECK_THROWS_AS(FamilyParams::type_f(1), std::domain_error);
  CHECK_THROWS_AS(FamilyParams::type_f(0), std::domain_error);
  CHECK_THROWS_AS(FamilyParams::type_c(1, 0), std::domain_error);
  CHECK_THROWS_AS(FamilyParams::type_b(0, 0, 1), std::domain_error);
  CHECK_THROWS_AS(FamilyParams::type_b(1, 0, -1), std::domain_error);
  // a < 0 is absorbed by x -> -x.
  FamilyParams flipped = FamilyParams::type_b(-2, 0, -3);
  CHECK(flipped.a() == 2);
  CHECK(flipped.d() == 3);
}

TEST_CASE("rkl examples") {
  FamilyFunctions f = rkl(FamilyParams::type_f(-1), 1);
  CHECK(f.potential == P("2*r^-1 - 2*r^-2"));
  CHECK(f.k == P("r^-1 - 1"));
  CHECK(f.L == -1);
  CHECK_THROWS_AS(rkl(FamilyParams::type_f(-1), 0), std::domain_error);

  FamilyFunctions b = rkl(FamilyParams::type_b(1, 0, 1), 0);
  CHECK(b.L == 0);
  CHECK(b.k_at(0.7) == doctest::Approx(std::exp(0.7)));

  FamilyFunctions c = rkl(FamilyParams::type_c(-1, 0), 2);
  CHECK(c.L == Rational(7, 2));
}

TEST_CASE("eigenvalue examples") {
  CHECK(eigenvalue(FamilyParams::type_f(-1), 0) == -1);
  CHECK(eigenvalue(FamilyParams::type_f(-3), 2) == -1);
  CHECK(eigenvalue(FamilyParams::type_b(1, Rational(1, 2), 1), 1) == Rational(-9, 4));
  CHECK_THROWS_AS(eigenvalue(FamilyParams::type_f(-1), -1), std::domain_error);
}

TEST_CASE("ladder examples") {
  auto [fp, fm] = ladder::ladder(FamilyParams::type_f(-1), 1);
  CHECK(fp == P("d/dr + r^-1 - 1"));
  CHECK(fm == P("-d/dr + r^-1 - 1"));
  auto [cp, cm] = ladder::ladder(FamilyParams::type_c(-1, 0), 1);
  CHECK(cp == P("d/dr + r^-1 - 1/2*r"));
  CHECK(cm == P("-d/dr + r^-1 - 1/2*r"));
  CHECK(check_factorization(FamilyParams::type_f(-1), 1).pass());
  CHECK(check_factorization(FamilyParams::type_c(-1, 0), 1).pass());
}

TEST_CASE("factorization identities at random points") {
  std::mt19937 rng(4242);
  for (int k = 0; k < 20; ++k) {
    const Rational q = -Rational(abs(nonzero(rng, -5, 5)));
    const Rational m = nonzero(rng, -4, 4);
    CAPTURE(to_string(q));
    CAPTURE(to_string(m));
    CHECK(check_factorization(FamilyParams::type_f(q), m).pass());

    const Rational a = nonzero(rng, -3, 3);
    const FamilyParams b =
        FamilyParams::type_b(a, random_rational(rng, -3, 3), sgn(a) * Rational(abs(nonzero(rng, -3, 3))));
    CHECK(check_factorization(b, random_rational(rng, -4, 4)).pass());

    const FamilyParams c = FamilyParams::type_c(Rational(-abs(nonzero(rng, -3, 3))), random_rational(rng, -3, 3));
    CHECK(check_factorization(c, random_rational(rng, -4, 4)).pass());
  }
}

TEST_CASE("a broken potential is caught") {
  FamilyFunctions f = rkl(FamilyParams::type_f(-1), 2);
  auto [raise, lower] = ladder::ladder(FamilyParams::type_f(-1), 2);
  OperatorExpr wrong = lower * raise + OperatorExpr(Coefficient(Gaussian(f.L))) +
                       f.derivative * f.derivative + f.potential + P("r^-2");
  CHECK_FALSE(wrong.is_zero());
}

TEST_CASE("class I eigenvalues increase and class II decrease away from -c") {
  const FamilyParams f = FamilyParams::type_f(-2);
  const FamilyParams c = FamilyParams::type_c(-1, 0);
  const FamilyParams b = FamilyParams::type_b(1, Rational(1, 3), 2);
  for (int l = 0; l < 10; ++l) {
    CHECK(eigenvalue(f, l) < eigenvalue(f, l + 1));
    CHECK(eigenvalue(c, l) < eigenvalue(c, l + 1));
    CHECK(eigenvalue(b, l) > eigenvalue(b, l + 1));
  }
}

TEST_CASE("f_to_b examples") {
  TransformResult t = f_to_b(-1, 0, 0);
  CHECK(t.target.d() / t.target.a() == 1);
  CHECK(t.quantum_map.m_plus_c == Rational(1, 2));
  CHECK(t.quantum_map.l_plus_c == Rational(1, 2));
  CHECK(t.scale_s == 1);

  CHECK(f_to_b(-2, 1, 0).target.d() == 1);
  TransformResult u = f_to_b(-6, 1, 1, 2);
  CHECK(u.target.d() == 6);
  CHECK(u.scale_s == 3);
  for (const auto& row : u.verify()) CHECK_MESSAGE(row.pass(), row.name);
  CHECK_THROWS_AS(f_to_b(1, 0, 0), std::domain_error);
  CHECK_THROWS_AS(f_to_b(-1, 0, 1), std::domain_error);
}

TEST_CASE("f_to_c examples") {
  TransformResult p = f_to_c(-1, 0, 0, 1);
  CHECK(p.target.b() == -1);
  CHECK(p.quantum_map.m_plus_c == Rational(1, 2));
  CHECK(p.quantum_map.l_plus_c == Rational(1, 2));
  TransformResult n = f_to_c(-1, 0, 0, -1);
  CHECK(n.quantum_map.m_plus_c == Rational(-3, 2));
  CHECK(n.quantum_map.l_plus_c == Rational(-1, 2));
  CHECK_THROWS_AS(f_to_c(-1, 0, 0, 0), std::domain_error);
}

TEST_CASE("b_to_c examples") {
  const FamilyParams b = FamilyParams::type_b(1, 0, 1);
  TransformResult p = b_to_c(b, 1, 1, 1);
  CHECK(p.target.b() == -1);
  CHECK(p.quantum_map.m_plus_c == Rational(3, 2));
  CHECK(p.quantum_map.l_plus_c == Rational(3, 2));
  TransformResult n = b_to_c(b, 1, 1, -1);
  CHECK(n.quantum_map.m_plus_c == Rational(-5, 2));
  CHECK(n.quantum_map.l_plus_c == Rational(-1, 2));
  for (const auto& row : p.verify()) CHECK_MESSAGE(row.pass(), row.name);
  for (const auto& row : n.verify()) CHECK_MESSAGE(row.pass(), row.name);
  // Flipping the sign of a together with d is the x -> -x normalization.
  TransformResult flipped = b_to_c(FamilyParams::type_b(-1, 0, -1), 1, 1, 1);
  CHECK(flipped.quantum_map.m_plus_c == p.quantum_map.m_plus_c);
  CHECK(flipped.quantum_map.l_plus_c == p.quantum_map.l_plus_c);
  CHECK(flipped.target == p.target);
}

TEST_CASE("composition f_to_b then b_to_c equals f_to_c") {
  std::mt19937 rng(99);
  for (int k = 0; k < 40; ++k) {
    const Rational q = -Rational(abs(nonzero(rng, -5, 5)));
    const int l = std::uniform_int_distribution<int>(0, 6)(rng);
    const int m = std::uniform_int_distribution<int>(0, l)(rng);
    const Rational a = Rational(abs(nonzero(rng, -3, 3)));
    for (int eps : {1, -1}) {
      TransformResult fb = f_to_b(q, l, m, a);
      TransformResult bc = b_to_c(fb.target, fb.quantum_map.l_plus_c, fb.quantum_map.m_plus_c, eps);
      TransformResult fc = f_to_c(q, l, m, eps);
      CHECK(bc.target == fc.target);
      CHECK(bc.quantum_map.m_plus_c == fc.quantum_map.m_plus_c);
      CHECK(bc.quantum_map.l_plus_c == fc.quantum_map.l_plus_c);
      for (const auto& row : fc.verify()) CHECK_MESSAGE(row.pass(), row.name);
      for (const auto& row : fb.verify()) CHECK_MESSAGE(row.pass(), row.name);
    }
  }
}

TEST_CASE("the two branches are symmetric about -1/2") {
  for (int l = 0; l < 5; ++l)
    for (int m = 0; m <= l; ++m) {
      TransformResult p = f_to_c(-3, l, m, 1), n = f_to_c(-3, l, m, -1);
      CHECK(p.quantum_map.m_plus_c + n.quantum_map.m_plus_c == -1);
      // (m+c)(m+c+1) is the same on both branches.
      const Rational& x = p.quantum_map.m_plus_c;
      const Rational& y = n.quantum_map.m_plus_c;
      CHECK(x * (x + 1) == y * (y + 1));
    }
}

TEST_CASE("shifted_charge") {
  CHECK(shifted_charge(-6, 2, 1, AlgebraKind::su11) == -9);
  CHECK(shifted_charge(-1, 1, -1, AlgebraKind::su11) == 0);
  CHECK(shifted_charge(-2, 4, 1, AlgebraKind::weyl) == Rational(-5, 2));
  CHECK_THROWS_AS(shifted_charge(-1, 0, 1, AlgebraKind::su11), std::domain_error);
  CHECK_THROWS_AS(shifted_charge(-1, -2, 1, AlgebraKind::su11), std::domain_error);
  CHECK_THROWS_AS(shifted_charge(-1, 2, 0, AlgebraKind::su11), std::domain_error);
}
