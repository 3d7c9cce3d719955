#include "paramsurf/parser.hpp"

#include <cctype>
#include <set>

#include "paramsurf/errors.hpp"

namespace paramsurf {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;  // 1-based
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& cur() const { return cur_; }

  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    const size_t pos = i_ + 1;
    if (i_ >= text_.size()) {
      cur_ = {Tok::End, "", pos};
      return;
    }
    const char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      cur_ = {Tok::Int, text_.substr(i_, j - i_), pos};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
        ++j;
      cur_ = {Tok::Ident, text_.substr(i_, j - i_), pos};
      i_ = j;
      return;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw InputError("malformed syntax: unexpected character '" + std::string(1, c) +
                         "' at position " + std::to_string(pos));
    }
    cur_ = {k, std::string(1, c), pos};
    ++i_;
  }

 private:
  const std::string& text_;
  size_t i_ = 0;
  Token cur_;
};

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : lex_(text), vars_(vars) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
      if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
    }
  }

  MultiPoly parse() {
    MultiPoly p = parse_expr();
    if (lex_.cur().kind != Tok::End) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("malformed syntax: " + what + " at position " +
                     std::to_string(lex_.cur().pos));
  }

  MultiPoly parse_expr() {
    MultiPoly p = parse_term();
    while (lex_.cur().kind == Tok::Plus || lex_.cur().kind == Tok::Minus) {
      const bool minus = lex_.cur().kind == Tok::Minus;
      lex_.advance();
      const MultiPoly q = parse_term();
      p = minus ? p - q : p + q;
    }
    return p;
  }

  MultiPoly parse_term() {
    MultiPoly p = parse_unary();
    while (lex_.cur().kind == Tok::Star) {
      lex_.advance();
      p = p * parse_unary();
    }
    if (lex_.cur().kind == Tok::Int || lex_.cur().kind == Tok::Ident ||
        lex_.cur().kind == Tok::LParen) {
      fail("missing operator (implicit multiplication is not allowed)");
    }
    return p;
  }

  MultiPoly parse_unary() {
    if (lex_.cur().kind == Tok::Minus) {
      lex_.advance();
      return -parse_unary();
    }
    return parse_factor();
  }

  MultiPoly parse_factor() {
    MultiPoly base = parse_primary();
    if (lex_.cur().kind == Tok::Caret) {
      lex_.advance();
      if (lex_.cur().kind == Tok::Minus)
        throw InputError("negative exponent at position " + std::to_string(lex_.cur().pos));
      if (lex_.cur().kind != Tok::Int) fail("exponent must be an integer literal");
      const long e = std::stol(lex_.cur().text);
      if (e > 512) throw InputError("exponent too large at position " + std::to_string(lex_.cur().pos));
      lex_.advance();
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly parse_primary() {
    const Token t = lex_.cur();
    switch (t.kind) {
      case Tok::Int: {
        lex_.advance();
        Rational value{BigInt(t.text)};
        if (lex_.cur().kind == Tok::Slash) {
          lex_.advance();
          if (lex_.cur().kind != Tok::Int)
            fail("'/' is only allowed inside rational literals");
          const BigInt den(lex_.cur().text);
          if (den == 0)
            throw InputError("zero denominator at position " + std::to_string(lex_.cur().pos));
          value /= Rational(den);
          lex_.advance();
        }
        return MultiPoly::constant(vars_, value);
      }
      case Tok::Ident: {
        lex_.advance();
        MultiPoly v(vars_);
        for (size_t i = 0; i < vars_.size(); ++i) {
          if (vars_[i] == t.text) return MultiPoly::variable(vars_, t.text);
        }
        throw InputError("unknown identifier '" + t.text + "' at position " +
                         std::to_string(t.pos));
      }
      case Tok::LParen: {
        lex_.advance();
        MultiPoly p = parse_expr();
        if (lex_.cur().kind != Tok::RParen) fail("expected ')'");
        lex_.advance();
        return p;
      }
      case Tok::Slash:
        fail("'/' is only allowed inside rational literals");
      default:
        fail("expected a number, variable, or '('");
    }
  }

  Lexer lex_;
  const std::vector<std::string>& vars_;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

}  // namespace paramsurf
