#include "weylkit/parse.hpp"

#include <cctype>

namespace weylkit {

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < input.size()) {
    char ch = input[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos;
      while (pos < input.size() && std::isdigit(static_cast<unsigned char>(input[pos]))) ++pos;
      out.push_back({TokenKind::integer, std::string(input.substr(start, pos - start)), start});
      continue;
    }
    TokenKind kind;
    switch (ch) {
      case 'X': case 'Y': case 'c': case 's': case 't': case 'i':
        out.push_back({TokenKind::ident, std::string(1, ch), pos});
        ++pos;
        continue;
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '^': kind = TokenKind::caret; break;
      case '/': kind = TokenKind::slash; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      case '[': kind = TokenKind::lbracket; break;
      case ']': kind = TokenKind::rbracket; break;
      case '{': kind = TokenKind::lbrace; break;
      case '}': kind = TokenKind::rbrace; break;
      case ',': kind = TokenKind::comma; break;
      default:
        throw ParseError(pos, "a token", "'" + std::string(1, ch) + "'");
    }
    out.push_back({kind, std::string(1, ch), pos});
    ++pos;
  }
  out.push_back({TokenKind::end, "", input.size()});
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  OperatorExpr run() {
    OperatorExpr e = expr();
    expect(TokenKind::end, "end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }
  bool at(TokenKind kind) const { return peek().kind == kind; }

  bool accept(TokenKind kind) {
    if (!at(kind)) return false;
    ++index_;
    return true;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& tok = peek();
    std::string found = tok.kind == TokenKind::end ? "end of input" : "'" + tok.text + "'";
    throw ParseError(tok.position, expected, found);
  }

  void expect(TokenKind kind, const std::string& what) {
    if (!accept(kind)) fail(what);
  }

  OperatorExpr expr() {
    OperatorExpr lhs = term();
    while (at(TokenKind::plus) || at(TokenKind::minus)) {
      bool minus = advance().kind == TokenKind::minus;
      OperatorExpr rhs = term();
      if (minus) rhs = OperatorExpr::product(OperatorExpr::scalar(PolyCoeff(-1)), rhs);
      lhs = OperatorExpr::sum(lhs, rhs);
    }
    return lhs;
  }

  OperatorExpr term() {
    OperatorExpr lhs = factor();
    while (accept(TokenKind::star)) lhs = OperatorExpr::product(lhs, factor());
    return lhs;
  }

  OperatorExpr factor() {
    OperatorExpr base_expr = base();
    if (accept(TokenKind::caret)) {
      if (!at(TokenKind::integer)) fail("a nonnegative integer exponent");
      base_expr = OperatorExpr::power(base_expr, parse_uint(advance()));
    }
    return base_expr;
  }

  unsigned parse_uint(const Token& tok) {
    try {
      unsigned long v = std::stoul(tok.text);
      if (v > 1u << 20) throw std::out_of_range("too large");
      return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw ParseError(tok.position, "a smaller integer", "'" + tok.text + "'");
    }
  }

  OperatorExpr rational_literal(bool negative) {
    const Token& numerator = advance();  // integer token
    Int num(numerator.text, 10);
    if (negative) num = -num;
    if (accept(TokenKind::slash)) {
      if (!at(TokenKind::integer)) fail("a positive integer denominator");
      const Token& denominator = advance();
      Int den(denominator.text, 10);
      if (den == 0) throw ParseError(denominator.position, "a nonzero denominator", "'0'");
      return OperatorExpr::scalar(PolyCoeff(Rational(num, den)));
    }
    return OperatorExpr::scalar(PolyCoeff(Rational(num)));
  }

  OperatorExpr base() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::ident: {
        advance();
        switch (tok.text[0]) {
          case 'X': return OperatorExpr::generator_x();
          case 'Y': return OperatorExpr::generator_y();
          case 'c': return OperatorExpr::scalar(PolyCoeff::symbol(Symbol::c));
          case 's': return OperatorExpr::scalar(PolyCoeff::symbol(Symbol::s));
          case 't': return OperatorExpr::scalar(PolyCoeff::symbol(Symbol::t));
          case 'i': return OperatorExpr::scalar(PolyCoeff::imaginary_unit());
        }
        fail("a generator or symbol");
      }
      case TokenKind::integer:
        return rational_literal(false);
      case TokenKind::minus:
        // a minus starting a factor must introduce a signed literal
        advance();
        if (!at(TokenKind::integer)) fail("an integer after '-'");
        return rational_literal(true);
      case TokenKind::lparen: {
        advance();
        OperatorExpr inner = expr();
        expect(TokenKind::rparen, "')'");
        return inner;
      }
      case TokenKind::lbracket: {
        advance();
        OperatorExpr lhs = expr();
        expect(TokenKind::comma, "','");
        OperatorExpr rhs = expr();
        expect(TokenKind::rbracket, "']'");
        return OperatorExpr::commutator(lhs, rhs);
      }
      case TokenKind::lbrace: {
        advance();
        OperatorExpr lhs = expr();
        expect(TokenKind::comma, "','");
        OperatorExpr rhs = expr();
        expect(TokenKind::rbrace, "'}'");
        return OperatorExpr::anticommutator(lhs, rhs);
      }
      default:
        fail("an operand");
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

OperatorExpr parse(std::string_view input) { return Parser(tokenize(input)).run(); }

NormalForm parse_to_nf(std::string_view input) { return parse(input).to_normal_form(); }

}  // namespace weylkit
