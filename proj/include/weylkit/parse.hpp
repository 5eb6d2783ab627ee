#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/operator_expr.hpp"

namespace weylkit {

enum class TokenKind {
  ident,     // X Y c s t i
  integer,   // digit run
  plus,
  minus,
  star,
  caret,
  slash,
  lparen,
  rparen,
  lbracket,
  rbracket,
  lbrace,
  rbrace,
  comma,
  end
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;  // byte offset into the source
};

/// Parse failure with the exact source position and what was expected.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found)
      : std::runtime_error("parse error at position " + std::to_string(position) +
                           ": expected " + expected + ", found " + found),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

std::vector<Token> tokenize(std::string_view input);

/// Grammar (whitespace insignificant; '^' binds tighter than '*' binds
/// tighter than '+'/'-'):
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := 'X' | 'Y' | 'c' | 's' | 't' | 'i' | rational
///             | '(' expr ')' | '[' expr ',' expr ']' | '{' expr ',' expr '}'
///   rational := '-'? uint ('/' uint)?
/// Implicit multiplication is rejected; exponents are literal nonnegative
/// integers.
OperatorExpr parse(std::string_view input);

/// parse + evaluate.
NormalForm parse_to_nf(std::string_view input);

}  // namespace weylkit
