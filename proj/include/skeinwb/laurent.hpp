#pragma once

#include <map>
#include <string>

#include "skeinwb/rational.hpp"

namespace skeinwb {

/// Exact Laurent polynomial in t with Gaussian-rational coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Coeff = GaussianRational;
  using Terms = std::map<int, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(Coeff c) { add_term(0, std::move(c)); }  // NOLINT: constants embed
  LaurentPoly(int c) : LaurentPoly(Coeff(c)) {}      // NOLINT

  static LaurentPoly monomial(Coeff c, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, std::move(c));
    return p;
  }
  /// t^k
  static LaurentPoly t(int k = 1) { return monomial(Coeff(1), k); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_degree() const;  // 0 for the zero polynomial
  int max_degree() const;
  Coeff coeff(int exponent) const;

  /// Value at t = -1.
  Coeff at_minus_one() const;

  void add_term(int exponent, const Coeff& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Coeff& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Coeff& c) { return a *= c; }
  friend LaurentPoly operator*(const Coeff& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  Terms terms_;
};

/// The loop value -(t^2 + t^-2).
LaurentPoly loop_value();

/// Descending exponents, e.g. "-t^3 + 2*t^-1"; "0" for zero.
std::string to_string(const LaurentPoly& p);

/// Accepts sums/products of rational literals, `i`, `t^k` and parentheses.
LaurentPoly parse_laurent(const std::string& text);

}  // namespace skeinwb
