#include "skeinwb/dual.hpp"

#include <charconv>
#include <cstdlib>

#include "skeinwb/errors.hpp"

namespace skeinwb {

ExactDual eval_dual_exact(const LaurentPoly& p) {
  ExactDual acc;
  for (const auto& [n, c] : p.terms()) {
    // t^n -> (-1)^n (1 - n e)
    GaussianRational signed_c = (n % 2 == 0) ? c : -c;
    acc.value += signed_c;
    acc.deriv -= GaussianRational(n) * signed_c;
  }
  return acc;
}

DualScalar eval_dual(const LaurentPoly& p) { return to_numeric(eval_dual_exact(p)); }

namespace {

std::string shortest(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

std::string pair_string(std::complex<double> z) {
  return "(" + shortest(z.real()) + "," + shortest(z.imag()) + ")";
}

std::complex<double> parse_pair(const std::string& s, std::size_t& pos) {
  auto expect = [&](char c) {
    if (pos >= s.size() || s[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto number = [&]() {
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("expected number", pos);
    pos += static_cast<std::size_t>(end - begin);
    return v;
  };
  expect('(');
  double re = number();
  expect(',');
  double im = number();
  expect(')');
  return {re, im};
}

}  // namespace

std::string to_string(const DualScalar& x) { return pair_string(x.value) + "+" + pair_string(x.deriv) + "e"; }

DualScalar parse_dual(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::size_t pos = 0;
  auto value = parse_pair(s, pos);
  if (pos >= s.size() || s[pos] != '+') throw ParseError("expected '+'", pos);
  ++pos;
  auto deriv = parse_pair(s, pos);
  if (pos >= s.size() || s[pos] != 'e') throw ParseError("expected 'e'", pos);
  ++pos;
  if (pos != s.size()) throw ParseError("trailing characters", pos);
  return {value, deriv};
}

std::string to_string(const ExactDual& x) {
  if (x.deriv.is_zero()) return to_string(x.value);
  std::string d = to_string(x.deriv);
  // Gaussian rationals with both parts print parenthesized already.
  if (d == "1") d.clear();
  if (d == "-1") d = "-";
  if (x.value.is_zero()) return d + "e";
  if (!d.empty() && d[0] == '-') return to_string(x.value) + " - " + d.substr(1) + "e";
  return to_string(x.value) + " + " + d + "e";
}

}  // namespace skeinwb
