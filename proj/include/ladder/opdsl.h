#pragma once

// Text syntax for OperatorExpr.
//
//   expr    = term { ("+" | "-") term } ;
//   term    = unary { "*" unary } ;
//   unary   = "-" unary | power ;
//   power   = primary [ "^" exponent ] ;
//   exponent= [ "-" ] NUMBER | "(" [ "-" ] NUMBER ")" ;      (integer only)
//   primary = NUMBER | "i" | "s" | "u" | "r" | "sqrt" "(" "r" ")"
//           | "exp" "(" phase ")" | DERIV | "(" expr ")" ;
//   phase   = [ "-" ] factor { "*" factor } ;  one "i", one of eta|alpha|beta,
//                                              at most one integer
//   DERIV   = "d/dr" | "d/deta" | "d/dalpha" | "d/dbeta" ;
//   NUMBER  = digits [ "/" digits | "." digits ] ;
//
// Products are noncommutative and left-associative in source order.

#include "ladder/opalgebra.h"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ladder::dsl {

enum class TokenKind { number, symbol, op, lparen, rparen, derivative, end };

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t position;  // byte offset into the source
};

enum class ErrorKind { lexical, syntax, non_integer_power, semantic };

class ParseError : public std::runtime_error {
 public:
  ParseError(ErrorKind kind, std::size_t position, std::string lexeme, std::string message,
             std::vector<std::string> expected = {});

  ErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }
  const std::string& lexeme() const { return lexeme_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  ErrorKind kind_;
  std::size_t position_;
  std::string lexeme_;
  std::vector<std::string> expected_;
};

std::vector<Token> tokenize(std::string_view text);

struct SourceExpr {
  enum class Kind {
    number,      // value
    imag_unit,
    s,
    u,
    r,
    sqrt_r,
    phase,       // var, exponent = k
    derivative,  // var
    add,
    sub,
    mul,
    neg,
    pow,         // exponent
  };

  Kind kind;
  std::size_t position = 0;
  Rational value{};
  int var = 0;
  int exponent = 0;
  std::vector<SourceExpr> children{};
};

SourceExpr parse_source(std::string_view text);
OperatorExpr evaluate(const SourceExpr& node);

OperatorExpr parse(std::string_view text);

/// Canonical text; parse(render(e)) == e.
std::string render(const OperatorExpr& expr);
std::string render(const Coefficient& c);

}  // namespace ladder::dsl
