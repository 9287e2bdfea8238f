#include "skeinwb/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "skeinwb/errors.hpp"

namespace skeinwb {

GaussianRational GaussianRational::inverse() const {
  Rational n = re * re + im * im;
  if (n == 0) throw std::domain_error("division by zero Gaussian rational");
  return {re / n, -im / n};
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return z.re.str();
  std::string imag;
  Rational mag = abs(z.im);
  if (mag == 1) {
    imag = "i";
  } else {
    imag = mag.str() + "i";
  }
  if (z.re == 0) return (z.im < 0 ? "-" : "") + imag;
  return "(" + z.re.str() + (z.im < 0 ? "-" : "+") + imag + ")";
}

Rational parse_rational_literal(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) throw ParseError("expected number", pos);
  Rational num(boost::multiprecision::cpp_int(s.substr(start, pos - start)));
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (dstart == pos) throw ParseError("expected denominator", pos);
    boost::multiprecision::cpp_int den(s.substr(dstart, pos - dstart));
    if (den == 0) throw ParseError("zero denominator", dstart);
    num /= Rational(den);
  }
  return num;
}

}  // namespace skeinwb
