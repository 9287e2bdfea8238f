#pragma once

// Small recursive-descent parser shared by the Laurent polynomial and
// quantum-torus text formats.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*
//   factor  := primary ['^' ['-'] digits]
//   primary := rational | symbol | '(' expr ')'
//
// Products are formed left to right, so noncommutative algebras get the
// written order.

#include <cctype>
#include <functional>
#include <string>

#include "skeinwb/errors.hpp"
#include "skeinwb/rational.hpp"

namespace skeinwb::detail {

template <class Algebra>
class ExpressionParser {
 public:
  /// `atom(symbol, exponent)` must return the element for symbol^exponent or
  /// throw ParseError for an unknown symbol.
  using AtomFn = std::function<Algebra(char, int, std::size_t)>;
  using ScalarFn = std::function<Algebra(const GaussianRational&)>;

  ExpressionParser(std::string text, AtomFn atom, ScalarFn scalar)
      : text_(std::move(text)), atom_(std::move(atom)), scalar_(std::move(scalar)) {}

  Algebra parse() {
    pos_ = 0;
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Algebra result = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Algebra expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Algebra acc = term();
    if (negate) acc = scalar_(GaussianRational(-1)) * acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Algebra rhs = term();
      if (c == '+') {
        acc = acc + rhs;
      } else {
        acc = acc - rhs;
      }
    }
    return acc;
  }

  bool starts_factor() const {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Algebra term() {
    Algebra acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  int exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", pos_);
    int e = std::stoi(text_.substr(start, pos_ - start));
    return neg ? -e : e;
  }

  Algebra power(const Algebra& base, int e, std::size_t where) {
    if (e < 0) throw ParseError("negative exponent only allowed on symbols", where);
    Algebra acc = scalar_(GaussianRational(1));
    for (int k = 0; k < e; ++k) acc = acc * base;
    return acc;
  }

  Algebra factor() {
    skip_ws();
    std::size_t where = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      Algebra inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return power(inner, exponent(), where);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q = parse_rational_literal(text_, pos_);
      return power(scalar_(GaussianRational(q)), exponent(), where);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      return atom_(c, exponent(), where);
    }
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string text_;
  AtomFn atom_;
  ScalarFn scalar_;
  std::size_t pos_ = 0;
};

}  // namespace skeinwb::detail
