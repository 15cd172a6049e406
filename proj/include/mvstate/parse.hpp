#pragma once

// Textual input syntax.
//
//   signature := 'T' | factor ('*' factor)*          T is the terminal algebra
//   factor    := 'M' INT ('^' INT)?                   M2^3 = M2*M2*M2
//
//   identity  := term '=' term
//   term      := meet ('\/' meet)*
//   meet      := sum ('/\' sum)*
//   sum       := prod (('(+)' | '(-)') prod)*
//   prod      := unary ('(.)' unary)*
//   unary     := 'neg' '(' term ')' | IDENT | '0' | '1' | '(' term ')'
//
// Binary connectives associate to the left. The grammar is LL(1) over the
// token stream; '(+)', '(-)' and '(.)' are single tokens.

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvstate/algebra.hpp"
#include "mvstate/term.hpp"

namespace mvstate {

namespace detail {

struct Token {
  enum class Type { Ident, Int, Sym, End } type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) {
        out.push_back({Token::Type::End, "end of input", line_, col_});
        return out;
      }
      const std::size_t line = line_, col = col_;
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string s;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          s += advance();
        out.push_back({Token::Type::Ident, std::move(s), line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) s += advance();
        out.push_back({Token::Type::Int, std::move(s), line, col});
      } else if (c == '(' && pos_ + 2 < text_.size() && text_[pos_ + 2] == ')' &&
                 (text_[pos_ + 1] == '+' || text_[pos_ + 1] == '-' || text_[pos_ + 1] == '.')) {
        std::string s;
        for (int i = 0; i < 3; ++i) s += advance();
        out.push_back({Token::Type::Sym, std::move(s), line, col});
      } else if ((c == '/' || c == '\\') && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == (c == '/' ? '\\' : '/')) {
        std::string s;
        s += advance();
        s += advance();
        out.push_back({Token::Type::Sym, std::move(s), line, col});
      } else if (c == '(' || c == ')' || c == '*' || c == '^' || c == '=') {
        out.push_back({Token::Type::Sym, std::string(1, advance()), line, col});
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
    }
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  FiniteMvAlgebra signature() {
    if (peek_ident("T")) {
      next();
      expect_end();
      return FiniteMvAlgebra();
    }
    IntVector chains;
    do {
      const Token& m = peek();
      if (!(m.type == Token::Type::Ident && !m.text.empty() && m.text[0] == 'M'))
        throw ParseError("expected a chain factor", m.line, m.column, {"M<k>", "T"});
      next();
      Integer k = 0;
      if (m.text.size() > 1) {
        // "M3" lexes as one identifier
        k = digits(m, m.text.substr(1));
      } else {
        k = integer();
      }
      if (k < 1) throw ParseError("chain parameter must be >= 1", m.line, m.column);
      Integer times = 1;
      if (accept("^")) {
        const Token& e = peek();
        times = integer();
        if (times < 1) throw ParseError("exponent must be >= 1", e.line, e.column);
      }
      for (Integer i = 0; i < times; ++i) chains.push_back(k);
    } while (accept("*"));
    expect_end();
    return FiniteMvAlgebra(std::move(chains));
  }

  MvTerm whole_term() {
    MvTerm t = term();
    expect_end();
    return t;
  }

  std::pair<MvTerm, MvTerm> identity() {
    MvTerm l = term();
    expect("=");
    MvTerm r = term();
    expect_end();
    return {std::move(l), std::move(r)};
  }

private:
  static inline const std::vector<std::string> kTermStart{"neg", "<variable>", "0", "1", "("};

  MvTerm term() {
    MvTerm t = meet();
    while (accept("\\/")) t = MvTerm::join(std::move(t), meet());
    return t;
  }
  MvTerm meet() {
    MvTerm t = sum();
    while (accept("/\\")) t = MvTerm::meet(std::move(t), sum());
    return t;
  }
  MvTerm sum() {
    MvTerm t = prod();
    while (true) {
      if (accept("(+)")) t = MvTerm::oplus(std::move(t), prod());
      else if (accept("(-)")) t = MvTerm::ominus(std::move(t), prod());
      else return t;
    }
  }
  MvTerm prod() {
    MvTerm t = unary();
    while (accept("(.)")) t = MvTerm::odot(std::move(t), unary());
    return t;
  }
  MvTerm unary() {
    const Token& tok = peek();
    if (tok.type == Token::Type::Ident) {
      next();
      if (tok.text == "neg") {
        expect("(");
        MvTerm inner = term();
        expect(")");
        return MvTerm::neg(std::move(inner));
      }
      return MvTerm::var(tok.text);
    }
    if (tok.type == Token::Type::Int) {
      next();
      if (tok.text == "0") return MvTerm::zero();
      if (tok.text == "1") return MvTerm::one();
      throw ParseError("only the constants 0 and 1 are allowed", tok.line, tok.column, {"0", "1"});
    }
    if (accept("(")) {
      MvTerm inner = term();
      expect(")");
      return inner;
    }
    throw ParseError("unexpected '" + tok.text + "'", tok.line, tok.column, kTermStart);
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool peek_ident(const char* s) const { return peek().type == Token::Type::Ident && peek().text == s; }

  bool accept(const char* sym) {
    if (peek().type == Token::Type::Sym && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const char* sym) {
    if (!accept(sym)) throw ParseError("unexpected '" + peek().text + "'", peek().line, peek().column, {sym});
  }
  void expect_end() {
    if (peek().type != Token::Type::End)
      throw ParseError("unexpected '" + peek().text + "'", peek().line, peek().column, {"end of input"});
  }
  Integer integer() {
    const Token& t = peek();
    if (t.type != Token::Type::Int) throw ParseError("expected an integer", t.line, t.column, {"<integer>"});
    next();
    return digits(t, t.text);
  }
  static Integer digits(const Token& t, const std::string& s) {
    if (s.empty() || s.size() > 9) throw ParseError("bad integer '" + s + "'", t.line, t.column, {"<integer>"});
    Integer v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad integer '" + s + "'", t.line, t.column, {"<integer>"});
      v = v * 10 + (c - '0');
    }
    return v;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FiniteMvAlgebra parse_algebra(std::string_view text) { return detail::Parser(text).signature(); }

inline MvTerm parse_term(std::string_view text) { return detail::Parser(text).whole_term(); }

inline std::pair<MvTerm, MvTerm> parse_identity(std::string_view text) { return detail::Parser(text).identity(); }

}  // namespace mvstate
