#pragma once

// Quantum torus Z[t^+-1]<L^+-1, M^+-1>/(LM - t^2 ML), its action on sequences
// and the zeroth/first order symbol maps into C[L^+-1, M^+-1].

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skeinwb/laurent.hpp"

namespace skeinwb {

/// Exponent pair (a, b) of the normal-ordered monomial L^a M^b.
using Monomial = std::pair<int, int>;

class TorusElement {
 public:
  using Terms = std::map<Monomial, LaurentPoly>;

  TorusElement() = default;
  TorusElement(LaurentPoly c) { add_term({0, 0}, c); }  // NOLINT: scalars embed
  static TorusElement monomial(int a, int b, LaurentPoly c = LaurentPoly(1));
  static TorusElement L(int a = 1) { return monomial(a, 0); }
  static TorusElement M(int b = 1) { return monomial(0, b); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(Monomial m) const;
  void add_term(Monomial m, const LaurentPoly& c);

  TorusElement operator-() const;
  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(const TorusElement& p, const TorusElement& q);
  friend bool operator==(const TorusElement& a, const TorusElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

 private:
  Terms terms_;
};

/// Element of the commutative ring C[L^+-1, M^+-1] with exact coefficients.
class CommutativeLM {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  CommutativeLM() = default;
  static CommutativeLM monomial(int a, int b, GaussianRational c = GaussianRational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coeff(Monomial m) const;
  void add_term(Monomial m, const GaussianRational& c);

  CommutativeLM operator-() const;
  CommutativeLM& operator+=(const CommutativeLM& o);
  CommutativeLM& operator-=(const CommutativeLM& o);
  friend CommutativeLM operator+(CommutativeLM a, const CommutativeLM& b) { return a += b; }
  friend CommutativeLM operator-(CommutativeLM a, const CommutativeLM& b) { return a -= b; }
  friend CommutativeLM operator*(const CommutativeLM& f, const CommutativeLM& g);
  friend CommutativeLM operator*(const GaussianRational& c, const CommutativeLM& f);
  friend bool operator==(const CommutativeLM& a, const CommutativeLM& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const CommutativeLM& a, const CommutativeLM& b) { return !(a == b); }

 private:
  Terms terms_;
};

/// Finite window [base, base + values.size()) of a sequence Z -> Z[t^+-1].
struct RSequence {
  int base = 0;
  std::vector<LaurentPoly> values;

  int lo() const { return base; }
  int hi() const { return base + static_cast<int>(values.size()) - 1; }
  bool contains(int n) const { return n >= lo() && n <= hi(); }
  const LaurentPoly& at(int n) const { return values.at(static_cast<std::size_t>(n - base)); }
  friend bool operator==(const RSequence& a, const RSequence& b) = default;
};

/// Normal-ordered product, using M^b L^c = t^(-2bc) L^c M^b.
TorusElement multiply(const TorusElement& p, const TorusElement& q);

/// L^a M^b -> L^-a M^-b, coefficients untouched.
TorusElement sigma(const TorusElement& p);

/// (L f)_n = f_(n+1), (M f)_n = t^(2n) f_n. The result lives on the window
/// where every shifted index stays inside f's window; throws WindowTooSmall
/// when that window is empty.
RSequence act(const TorusElement& p, const RSequence& f);

/// Coefficients evaluated at t = -1.
CommutativeLM symbol0(const TorusElement& p);

/// Coefficient-wise e-part of t -> -1 + e (no factor of i, no ordering
/// correction).
CommutativeLM epsilon_part(const TorusElement& p);

/// First-order symbol i * (epsilon_part(p) - D(symbol0(p))) where D is the
/// Weyl-ordering correction L^a M^b -> ab L^a M^b. Vanishes on L, M and on
/// every Weyl-ordered monomial t^(-ab) L^a M^b.
CommutativeLM symbol1(const TorusElement& p);

/// Uncorrected variant i * epsilon_part(p); kept for comparison.
CommutativeLM symbol1_standard(const TorusElement& p);

/// {L^a M^b, L^c M^d} = 2(bc - ad) L^(a+c) M^(b+d), extended bilinearly.
CommutativeLM poisson_bracket(const CommutativeLM& f, const CommutativeLM& g);

/// Finds the single constant c with
///   symbol1(PQ) = symbol0(P) symbol1(Q) + symbol1(P) symbol0(Q) + c {symbol0 P, symbol0 Q}
/// over all supplied pairs. Throws CalibrationFailure when no pair has a
/// nonzero bracket or when the pairs disagree.
GaussianRational calibrate_product_rule_constant(const std::vector<std::pair<TorusElement, TorusElement>>& pairs);

/// Residual of the product rule for one pair at constant c.
CommutativeLM product_rule_residual(const TorusElement& p, const TorusElement& q, const GaussianRational& c);

std::string to_string(const TorusElement& p);
std::string to_string(const CommutativeLM& f);
std::string to_string(const RSequence& f);

/// Terms like "t^2*L^1*M^-3" joined by +/-; parentheses group Laurent
/// coefficients, e.g. "(t - t^-1)*L*M". Products follow written order.
TorusElement parse_torus(const std::string& text);

/// JSON-like: {"base": -2, "values": ["1", "t^2", ...]}.
RSequence parse_sequence(const std::string& json_text);

}  // namespace skeinwb
