#include "ladder/generators.h"
#include "ladder/opdsl.h"

#include "random_exprs.h"

#include <doctest.h>

using namespace ladder;
using dsl::ErrorKind;
using dsl::ParseError;

TEST_CASE("tokenizer positions increase") {
  const auto tokens = dsl::tokenize("exp(-2*i*alpha) * d/dr^2 + 3/4");
  REQUIRE(tokens.size() > 3);
  for (std::size_t k = 1; k < tokens.size(); ++k) CHECK(tokens[k].position > tokens[k - 1].position);
  CHECK(tokens.back().kind == dsl::TokenKind::end);
}

TEST_CASE("parse examples") {
  CHECK(dsl::parse("exp(i*eta)*(-r*d/dr + i*d/deta + s*r)") == build_T()["Tplus"]);
  CHECK(dsl::parse("d/dr*r - r*d/dr") == OperatorExpr::identity());
  CHECK(dsl::parse("sqrt(r)*sqrt(r)") == OperatorExpr::r());
  CHECK(dsl::parse("2^3") == OperatorExpr(8));
  CHECK(dsl::parse("-r^2") == -(OperatorExpr::r() * OperatorExpr::r()));
  CHECK(dsl::parse("r^(-1)") == OperatorExpr::r_power(-2));
  CHECK(dsl::parse("0.5*s") == dsl::parse("1/2*s"));
  CHECK(dsl::parse("exp(-2*i*alpha)") == OperatorExpr::phase(PhaseVar::alpha, -2));
  CHECK(dsl::parse("exp(i*2*beta)") == OperatorExpr::phase(PhaseVar::beta, 2));
  CHECK(dsl::parse("  r  *  d/dr ") == OperatorExpr::r() * OperatorExpr::derivative(DerivVar::r));
}

TEST_CASE("products follow source order") {
  CHECK(dsl::parse("d/dr*r") != dsl::parse("r*d/dr"));
}

TEST_CASE("render examples") {
  CHECK(dsl::render(dsl::parse("r*d/dr")) == "r*d/dr");
  CHECK(dsl::render(OperatorExpr()) == "0");
  CHECK(dsl::render(build_T()["T0"]) == "-i*d/deta");
  CHECK(dsl::render(OperatorExpr::identity()) == "1");
  CHECK(dsl::render(dsl::parse("1/2*i + 1/3")) == "(1/3 + 1/2*i)");
}

TEST_CASE("render and parse round-trip on random expressions") {
  ladder::testing::ExprGenerator gen(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::string src = gen.expression();
    CAPTURE(src);
    const OperatorExpr e = dsl::parse(src);
    const std::string text = dsl::render(e);
    CAPTURE(text);
    CHECK(dsl::parse(text) == e);
    CHECK(dsl::render(dsl::parse(text)) == text);
  }
}

namespace {

struct BadInput {
  const char* text;
  ErrorKind kind;
  std::size_t position;
};

}  // namespace

TEST_CASE("error positions") {
  const BadInput corpus[] = {
      {"r + * d/dr", ErrorKind::syntax, 4},
      {"r^1/2", ErrorKind::non_integer_power, 2},
      {"r^0.5", ErrorKind::non_integer_power, 2},
      {"r @ s", ErrorKind::lexical, 2},
      {"exp(i*theta)", ErrorKind::lexical, 6},
      {"(r + s", ErrorKind::syntax, 6},
      {"d/dx", ErrorKind::lexical, 0},
      {"", ErrorKind::syntax, 0},
      {"r s", ErrorKind::syntax, 2},
      {"(r + d/dr)^-1", ErrorKind::semantic, 10},
      {"r η", ErrorKind::lexical, 2},
  };
  for (const auto& bad : corpus) {
    CAPTURE(bad.text);
    try {
      dsl::parse(bad.text);
      FAIL("no error for input");
    } catch (const ParseError& e) {
      CHECK(e.kind() == bad.kind);
      CHECK(e.position() == bad.position);
    }
  }
}

TEST_CASE("syntax errors list what was expected") {
  try {
    dsl::parse("r +");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::syntax);
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("round-trip on operators built without the parser") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 1000; ++trial) {
    const OperatorExpr e = ladder::testing::random_operator(rng);
    const std::string text = dsl::render(e);
    CAPTURE(text);
    CHECK(dsl::parse(text) == e);
  }
}
