#include "frobcheck/algebra/parse.hpp"

#include <cctype>
#include <limits>

#include "frobcheck/errors.hpp"

namespace frobcheck {

Lexer::Lexer(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      tokens_.push_back({Kind::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      tokens_.push_back({Kind::Number, std::string(text.substr(start, i - start)), start});
      continue;
    }
    Kind k;
    switch (c) {
      case '+': k = Kind::Plus; break;
      case '-': k = Kind::Minus; break;
      case '*': k = Kind::Star; break;
      case '^': k = Kind::Caret; break;
      case '(': k = Kind::LParen; break;
      case ')': k = Kind::RParen; break;
      case ',': k = Kind::Comma; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    tokens_.push_back({k, std::string(1, c), i});
    ++i;
  }
  tokens_.push_back({Kind::End, "", text.size()});
}

bool Lexer::accept(Kind k) {
  if (peek().kind != k) return false;
  next();
  return true;
}

Lexer::Token Lexer::expect(Kind k, const char* what) {
  if (peek().kind != k) {
    const auto& t = peek();
    throw ParseError(std::string("expected ") + what +
                         (t.kind == Kind::End ? std::string(", found end of input")
                                              : ", found '" + t.text + "'"),
                     t.pos);
  }
  return next();
}

namespace {

unsigned parse_exponent(const Lexer::Token& t) {
  unsigned long v = 0;
  for (char c : t.text) {
    v = v * 10 + static_cast<unsigned>(c - '0');
    if (v > std::numeric_limits<Monomial::Exponent>::max()) throw ExponentOverflow();
  }
  return static_cast<unsigned>(v);
}

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableSet& vars, Prime p)
      : lex_(text), vars_(vars), p_(p) {}

  Polynomial parse() {
    std::vector<Term> terms;
    bool negate = lex_.accept(Lexer::Kind::Minus);
    terms.push_back(term(negate));
    while (true) {
      if (lex_.accept(Lexer::Kind::Plus)) {
        terms.push_back(term(false));
      } else if (lex_.accept(Lexer::Kind::Minus)) {
        terms.push_back(term(true));
      } else {
        break;
      }
    }
    if (!lex_.at_end()) throw ParseError("unexpected '" + lex_.peek().text + "'", lex_.peek().pos);
    return Polynomial::from_terms(p_, vars_, std::move(terms));
  }

 private:
  Term term(bool negate) {
    Coeff c = 1;
    Monomial m(vars_.size());
    const auto& first = lex_.peek();
    if (first.kind == Lexer::Kind::Number) {
      c = 0;
      for (char d : lex_.next().text) c = p_.add(p_.mul(c, 10 % p_.value()), static_cast<Coeff>(d - '0') % p_.value());
    } else if (first.kind == Lexer::Kind::Ident) {
      m = m * factor();
    } else {
      lex_.expect(Lexer::Kind::Ident, "a coefficient or variable");
    }
    while (true) {
      if (lex_.accept(Lexer::Kind::Star)) {
        m = m * factor();
      } else if (lex_.peek().kind == Lexer::Kind::Ident) {
        m = m * factor();
      } else {
        break;
      }
    }
    return {std::move(m), negate ? p_.neg(c) : c};
  }

  Monomial factor() {
    const auto tok = lex_.expect(Lexer::Kind::Ident, "a variable");
    auto idx = vars_.index_of(tok.text);
    if (!idx) throw UnknownVariable(tok.text, tok.pos);
    unsigned e = 1;
    if (lex_.accept(Lexer::Kind::Caret)) e = parse_exponent(lex_.expect(Lexer::Kind::Number, "an exponent"));
    return Monomial::variable(vars_.size(), *idx, e);
  }

  Lexer lex_;
  const VariableSet& vars_;
  Prime p_;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const VariableSet& vars, Prime p) {
  return PolyParser(text, vars, p).parse();
}

std::vector<std::string> parse_name_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    if (piece.empty()) throw ParseError("empty name in list", start);
    out.emplace_back(piece);
    start = end + 1;
  }
  return out;
}

}  // namespace frobcheck
