#include "ladder/opdsl.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace ladder::dsl {

ParseError::ParseError(ErrorKind kind, std::size_t position, std::string lexeme, std::string message,
                       std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << message << " at offset " << position;
        if (!lexeme.empty()) os << " near '" << lexeme << "'";
        if (!expected.empty()) {
          os << " (expected one of:";
          for (const auto& e : expected) os << ' ' << e;
          os << ')';
        }
        return os.str();
      }()),
      kind_(kind),
      position_(position),
      lexeme_(std::move(lexeme)),
      expected_(std::move(expected)) {}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

constexpr std::string_view kSymbols[] = {"i", "s", "u", "r", "sqrt", "exp", "eta", "alpha", "beta"};

int phase_var_index(std::string_view name) {
  for (int v = 0; v < 3; ++v)
    if (name == kPhaseVarNames[v]) return v;
  return -1;
}

int deriv_var_index(std::string_view name) {
  for (int v = 0; v < 4; ++v)
    if (name == kDerivVarNames[v]) return v;
  return -1;
}

// Length of the UTF-8 sequence starting at text[pos], clamped to the input.
std::size_t utf8_length(std::string_view text, std::size_t pos) {
  auto c = static_cast<unsigned char>(text[pos]);
  std::size_t n = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 1;
  return std::min(n, text.size() - pos);
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (is_digit(c)) {
      while (pos < text.size() && is_digit(text[pos])) ++pos;
      if (pos + 1 < text.size() && (text[pos] == '/' || text[pos] == '.') && is_digit(text[pos + 1])) {
        ++pos;
        while (pos < text.size() && is_digit(text[pos])) ++pos;
      }
      tokens.push_back({TokenKind::number, std::string(text.substr(start, pos - start)), start});
      continue;
    }
    if (is_ident_start(c)) {
      while (pos < text.size() && is_ident_char(text[pos])) ++pos;
      std::string_view ident = text.substr(start, pos - start);
      if (ident == "d" && pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t name_start = pos;
        if (pos < text.size() && text[pos] == 'd') {
          ++pos;
          name_start = pos;
          while (pos < text.size() && is_ident_char(text[pos])) ++pos;
        }
        std::string lexeme(text.substr(start, pos - start));
        if (name_start == pos || deriv_var_index(text.substr(name_start, pos - name_start)) < 0)
          throw ParseError(ErrorKind::lexical, start, lexeme, "unknown derivative");
        tokens.push_back({TokenKind::derivative, lexeme, start});
        continue;
      }
      if (std::find(std::begin(kSymbols), std::end(kSymbols), ident) == std::end(kSymbols))
        throw ParseError(ErrorKind::lexical, start, std::string(ident), "unknown symbol");
      tokens.push_back({TokenKind::symbol, std::string(ident), start});
      continue;
    }
    switch (c) {
      case '+':
      case '-':
      case '*':
      case '^':
        tokens.push_back({TokenKind::op, std::string(1, c), start});
        ++pos;
        continue;
      case '(':
        tokens.push_back({TokenKind::lparen, "(", start});
        ++pos;
        continue;
      case ')':
        tokens.push_back({TokenKind::rparen, ")", start});
        ++pos;
        continue;
      default:
        throw ParseError(ErrorKind::lexical, start, std::string(text.substr(start, utf8_length(text, start))),
                         "unexpected character");
    }
  }
  tokens.push_back({TokenKind::end, "", text.size()});
  return tokens;
}

namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  SourceExpr parse_all() {
    SourceExpr e = parse_expr();
    if (peek().kind != TokenKind::end) fail({"+", "-", "*", ")", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }
  bool at_op(char c) const { return peek().kind == TokenKind::op && peek().lexeme[0] == c; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(ErrorKind::syntax, t.position, t.lexeme,
                     t.kind == TokenKind::end ? "unexpected end of input" : "unexpected token", std::move(expected));
  }

  void expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) fail({what});
    advance();
  }

  static SourceExpr binary(SourceExpr::Kind kind, std::size_t pos, SourceExpr lhs, SourceExpr rhs) {
    SourceExpr node{kind, pos};
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  SourceExpr parse_expr() {
    SourceExpr lhs = parse_term();
    while (at_op('+') || at_op('-')) {
      const Token& op = advance();
      auto kind = op.lexeme[0] == '+' ? SourceExpr::Kind::add : SourceExpr::Kind::sub;
      lhs = binary(kind, op.position, std::move(lhs), parse_term());
    }
    return lhs;
  }

  SourceExpr parse_term() {
    SourceExpr lhs = parse_unary();
    while (at_op('*')) {
      const Token& op = advance();
      lhs = binary(SourceExpr::Kind::mul, op.position, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  SourceExpr parse_unary() {
    if (at_op('-')) {
      const Token& op = advance();
      SourceExpr node{SourceExpr::Kind::neg, op.position};
      node.children.push_back(parse_unary());
      return node;
    }
    return parse_power();
  }

  SourceExpr parse_power() {
    SourceExpr base = parse_primary();
    if (!at_op('^')) return base;
    const Token& caret = advance();
    bool paren = false;
    if (peek().kind == TokenKind::lparen) {
      paren = true;
      advance();
    }
    int sign = 1;
    if (at_op('-')) {
      advance();
      sign = -1;
    }
    if (peek().kind != TokenKind::number) fail({"integer exponent"});
    const Token& num = advance();
    if (num.lexeme.find_first_of("/.") != std::string::npos)
      throw ParseError(ErrorKind::non_integer_power, num.position, num.lexeme, "exponent must be an integer");
    if (paren) expect(TokenKind::rparen, ")");
    SourceExpr node{SourceExpr::Kind::pow, caret.position};
    node.exponent = sign * std::stoi(num.lexeme);
    node.children.push_back(std::move(base));
    return node;
  }

  SourceExpr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::number: {
        advance();
        SourceExpr node{SourceExpr::Kind::number, t.position};
        node.value = parse_rational(t.lexeme);
        return node;
      }
      case TokenKind::derivative: {
        advance();
        SourceExpr node{SourceExpr::Kind::derivative, t.position};
        node.var = deriv_var_index(std::string_view(t.lexeme).substr(3));
        return node;
      }
      case TokenKind::lparen: {
        advance();
        SourceExpr inner = parse_expr();
        expect(TokenKind::rparen, ")");
        return inner;
      }
      case TokenKind::symbol:
        return parse_symbol();
      default:
        fail({"number", "i", "s", "u", "r", "sqrt", "exp", "derivative", "(", "-"});
    }
  }

  SourceExpr parse_symbol() {
    const Token& t = advance();
    using K = SourceExpr::Kind;
    if (t.lexeme == "i") return {K::imag_unit, t.position};
    if (t.lexeme == "s") return {K::s, t.position};
    if (t.lexeme == "u") return {K::u, t.position};
    if (t.lexeme == "r") return {K::r, t.position};
    if (t.lexeme == "sqrt") {
      expect(TokenKind::lparen, "(");
      if (peek().kind != TokenKind::symbol || peek().lexeme != "r") fail({"r"});
      advance();
      expect(TokenKind::rparen, ")");
      return {K::sqrt_r, t.position};
    }
    if (t.lexeme == "exp") {
      expect(TokenKind::lparen, "(");
      SourceExpr node = parse_phase(t.position);
      expect(TokenKind::rparen, ")");
      return node;
    }
    // a bare phase variable outside exp(...)
    --index_;
    fail({"number", "i", "s", "u", "r", "sqrt", "exp", "derivative", "(", "-"});
  }

  SourceExpr parse_phase(std::size_t position) {
    int sign = 1;
    if (at_op('-')) {
      advance();
      sign = -1;
    }
    bool seen_i = false;
    bool seen_int = false;
    int var = -1;
    int k = 1;
    while (true) {
      const Token& f = peek();
      if (f.kind == TokenKind::symbol && f.lexeme == "i" && !seen_i) {
        seen_i = true;
      } else if (f.kind == TokenKind::symbol && phase_var_index(f.lexeme) >= 0 && var < 0) {
        var = phase_var_index(f.lexeme);
      } else if (f.kind == TokenKind::number && !seen_int) {
        if (f.lexeme.find_first_of("/.") != std::string::npos)
          throw ParseError(ErrorKind::non_integer_power, f.position, f.lexeme, "phase multiple must be an integer");
        seen_int = true;
        k = std::stoi(f.lexeme);
      } else {
        std::vector<std::string> expected;
        if (!seen_i) expected.emplace_back("i");
        if (var < 0) expected.insert(expected.end(), {"eta", "alpha", "beta"});
        if (!seen_int) expected.emplace_back("integer");
        fail(expected);
      }
      advance();
      if (!at_op('*')) break;
      advance();
    }
    if (!seen_i) fail({"*", "i"});
    if (var < 0) fail({"*", "eta", "alpha", "beta"});
    SourceExpr node{SourceExpr::Kind::phase, position};
    node.var = var;
    node.exponent = sign * k;
    return node;
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

SourceExpr parse_source(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

OperatorExpr evaluate(const SourceExpr& node) {
  using K = SourceExpr::Kind;
  switch (node.kind) {
    case K::number: return OperatorExpr(Coefficient(Gaussian(node.value)));
    case K::imag_unit: return OperatorExpr::i();
    case K::s: return OperatorExpr::s();
    case K::u: return OperatorExpr::u();
    case K::r: return OperatorExpr::r();
    case K::sqrt_r: return OperatorExpr::sqrt_r();
    case K::phase: return OperatorExpr::phase(static_cast<PhaseVar>(node.var), node.exponent);
    case K::derivative: return OperatorExpr::derivative(static_cast<DerivVar>(node.var));
    case K::add: return evaluate(node.children[0]) + evaluate(node.children[1]);
    case K::sub: return evaluate(node.children[0]) - evaluate(node.children[1]);
    case K::mul: return evaluate(node.children[0]) * evaluate(node.children[1]);
    case K::neg: return -evaluate(node.children[0]);
    case K::pow: {
      OperatorExpr base = evaluate(node.children[0]);
      if (node.exponent < 0 && !base.inverse())
        throw ParseError(ErrorKind::semantic, node.position, "^",
                         "negative power of an expression that has no inverse");
      return power(base, node.exponent);
    }
  }
  throw std::logic_error("unhandled SourceExpr kind");
}

OperatorExpr parse(std::string_view text) { return evaluate(parse_source(text)); }

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct SignedText {
  bool negative = false;
  std::string body;  // "1" stands for an empty factor list
};

std::string join_factors(const std::vector<std::string>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += '*';
    out += f;
  }
  return out;
}

std::string join_signed(const std::vector<SignedText>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k == 0)
      out += parts[k].negative ? "-" : "";
    else
      out += parts[k].negative ? " - " : " + ";
    out += parts[k].body;
  }
  return out;
}

// Gaussian weight as a sign plus a factor list (empty when the weight is +-1).
std::pair<bool, std::vector<std::string>> gaussian_factors(const Gaussian& g) {
  if (sgn(g.im) == 0) {
    Rational a = abs(g.re);
    if (a == 1) return {sgn(g.re) < 0, {}};
    return {sgn(g.re) < 0, {to_string(a)}};
  }
  if (sgn(g.re) == 0) {
    Rational a = abs(g.im);
    if (a == 1) return {sgn(g.im) < 0, {"i"}};
    return {sgn(g.im) < 0, {to_string(a), "i"}};
  }
  std::string text = "(" + to_string(g.re);
  Rational a = abs(g.im);
  text += sgn(g.im) < 0 ? " - " : " + ";
  text += a == 1 ? std::string("i") : to_string(a) + "*i";
  text += ")";
  return {false, {text}};
}

SignedText coefficient_component(const Coefficient::Key& key, const Gaussian& g) {
  auto [negative, factors] = gaussian_factors(g);
  if (key.s_power == 1)
    factors.emplace_back("s");
  else if (key.s_power != 0)
    factors.push_back("s^" + std::to_string(key.s_power));
  if (key.u_power) factors.emplace_back("u");
  return {negative, factors.empty() ? "1" : join_factors(factors)};
}

// Returns the sign and the factor list of a coefficient; an empty list means 1.
std::pair<bool, std::vector<std::string>> coefficient_factors(const Coefficient& c) {
  if (c.terms().size() == 1) {
    const auto& [key, g] = *c.terms().begin();
    auto [negative, factors] = gaussian_factors(g);
    if (key.s_power == 1)
      factors.emplace_back("s");
    else if (key.s_power != 0)
      factors.push_back("s^" + std::to_string(key.s_power));
    if (key.u_power) factors.emplace_back("u");
    return {negative, factors};
  }
  std::vector<SignedText> parts;
  for (const auto& [key, g] : c.terms()) parts.push_back(coefficient_component(key, g));
  return {false, {"(" + join_signed(parts) + ")"}};
}

std::vector<std::string> operator_factors(const MonomialKey& key) {
  std::vector<std::string> out;
  const int p = key.r_half_power;
  if (p != 0) {
    if (p % 2 == 0)
      out.push_back(p == 2 ? std::string("r") : "r^" + std::to_string(p / 2));
    else
      out.push_back(p == 1 ? std::string("sqrt(r)") : "sqrt(r)^" + std::to_string(p));
  }
  for (int v = 0; v < 3; ++v) {
    const int k = key.phase[v];
    if (k == 0) continue;
    std::string arg = k == 1 ? "i*" : k == -1 ? "-i*" : std::to_string(k) + "*i*";
    out.push_back("exp(" + arg + kPhaseVarNames[v] + ")");
  }
  for (int v = 0; v < 4; ++v) {
    const int n = key.deriv[v];
    if (n == 0) continue;
    std::string d = std::string("d/d") + kDerivVarNames[v];
    out.push_back(n == 1 ? d : d + "^" + std::to_string(n));
  }
  return out;
}

}  // namespace

std::string render(const Coefficient& c) {
  if (c.is_zero()) return "0";
  auto [negative, factors] = coefficient_factors(c);
  return (negative ? "-" : "") + (factors.empty() ? std::string("1") : join_factors(factors));
}

std::string render(const OperatorExpr& expr) {
  if (expr.is_zero()) return "0";
  std::vector<SignedText> parts;
  for (const auto& [key, c] : expr.terms()) {
    auto [negative, factors] = coefficient_factors(c);
    auto ops = operator_factors(key);
    factors.insert(factors.end(), ops.begin(), ops.end());
    parts.push_back({negative, factors.empty() ? "1" : join_factors(factors)});
  }
  return join_signed(parts);
}

}  // namespace ladder::dsl
