#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "skeinwb/laurent.hpp"
#include "skeinwb/rational.hpp"

namespace skeinwb {

/// value + deriv * e with e^2 = 0. `Scalar` is std::complex<double> for numeric
/// evaluation or GaussianRational for exact symbol calculus.
template <class Scalar>
struct Dual {
  Scalar value{};
  Scalar deriv{};

  Dual() = default;
  Dual(Scalar v) : value(std::move(v)) {}  // NOLINT: scalars embed
  Dual(Scalar v, Scalar d) : value(std::move(v)), deriv(std::move(d)) {}

  static Dual epsilon() { return {Scalar(0), Scalar(1)}; }

  Dual operator-() const { return {-value, -deriv}; }
  Dual& operator+=(const Dual& o) {
    value += o.value;
    deriv += o.deriv;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value -= o.value;
    deriv -= o.deriv;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    deriv = value * o.deriv + deriv * o.value;
    value *= o.value;
    return *this;
  }

  /// (a + e b)^-1 = a^-1 - e b a^-2; requires a != 0.
  Dual inverse() const {
    if (value == Scalar(0)) throw std::domain_error("dual number with zero value part is not invertible");
    Scalar inv = Scalar(1) / value;
    return {inv, -deriv * inv * inv};
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend bool operator==(const Dual& a, const Dual& b) { return a.value == b.value && a.deriv == b.deriv; }
  friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }
};

using DualScalar = Dual<std::complex<double>>;
using ExactDual = Dual<GaussianRational>;

inline DualScalar dual_mul(const DualScalar& x, const DualScalar& y) { return x * y; }

/// Image of p under t -> -1 + e, exact.
ExactDual eval_dual_exact(const LaurentPoly& p);

/// Image of p under t -> -1 + e, as complex doubles.
DualScalar eval_dual(const LaurentPoly& p);

inline DualScalar to_numeric(const ExactDual& x) { return {x.value.to_complex(), x.deriv.to_complex()}; }

/// "(re,im)+(re,im)e" with shortest round-trip doubles.
std::string to_string(const DualScalar& x);
DualScalar parse_dual(const std::string& text);

std::string to_string(const ExactDual& x);

}  // namespace skeinwb
