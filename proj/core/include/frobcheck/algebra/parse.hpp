#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "frobcheck/algebra/polynomial.hpp"

namespace frobcheck {

/// Token stream shared by the polynomial parser and the Chow class
/// expression parser.
class Lexer {
 public:
  enum class Kind { Ident, Number, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };

  struct Token {
    Kind kind;
    std::string text;
    std::size_t pos;
  };

  explicit Lexer(std::string_view text);

  const Token& peek() const { return tokens_[index_]; }
  Token next() { return tokens_[index_ < tokens_.size() - 1 ? index_++ : index_]; }
  bool accept(Kind k);
  Token expect(Kind k, const char* what);
  bool at_end() const { return peek().kind == Kind::End; }

 private:
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

/// Parses
///   expr   := term (('+'|'-') term)*      (optional leading '-')
///   term   := coeff ('*'? factor)* | factor ('*'? factor)*
///   factor := ident ('^' uint)?
/// Coefficients are reduced mod p digit by digit.
Polynomial parse_poly(std::string_view text, const VariableSet& vars, Prime p);

/// Splits "a, b,c" into trimmed identifiers.
std::vector<std::string> parse_name_list(std::string_view text);

}  // namespace frobcheck
