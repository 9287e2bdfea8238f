#include "skeinwb/laurent.hpp"

#include "skeinwb/detail/expression_parser.hpp"
#include "skeinwb/detail/term_format.hpp"
#include "skeinwb/errors.hpp"

namespace skeinwb {

namespace detail {

void append_term(std::string& out, const GaussianRational& c, const std::string& mono) {
  bool first = out.empty();
  bool negative = (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
  GaussianRational mag = negative ? -c : c;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (mono.empty()) {
    out += to_string(mag);
  } else if (mag == GaussianRational(1)) {
    out += mono;
  } else {
    out += to_string(mag) + "*" + mono;
  }
}

std::string power_string(const std::string& symbol, int exponent) {
  if (exponent == 0) return {};
  if (exponent == 1) return symbol;
  return symbol + "^" + std::to_string(exponent);
}

}  // namespace detail

int LaurentPoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Coeff() : it->second;
}

LaurentPoly::Coeff LaurentPoly::at_minus_one() const {
  Coeff acc;
  for (const auto& [k, c] : terms_) {
    if (k % 2 == 0) {
      acc += c;
    } else {
      acc -= c;
    }
  }
  return acc;
}

void LaurentPoly::add_term(int exponent, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LaurentPoly loop_value() { return -(LaurentPoly::t(2) + LaurentPoly::t(-2)); }

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    detail::append_term(out, it->second, detail::power_string("t", it->first));
  return out;
}

LaurentPoly parse_laurent(const std::string& text) {
  detail::ExpressionParser<LaurentPoly> parser(
      text,
      [](char sym, int e, std::size_t where) -> LaurentPoly {
        if (sym == 't') return LaurentPoly::t(e);
        if (sym == 'i') {
          if (e < 0) throw ParseError("negative power of i", where);
          GaussianRational z(1);
          for (int k = 0; k < e; ++k) z *= GaussianRational::i();
          return LaurentPoly(z);
        }
        throw ParseError(std::string("unknown symbol '") + sym + "' in Laurent polynomial", where);
      },
      [](const GaussianRational& c) { return LaurentPoly(c); });
  return parser.parse();
}

}  // namespace skeinwb
