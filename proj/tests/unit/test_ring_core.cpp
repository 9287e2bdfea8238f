#include <random>

#include "doctest.h"
#include "skeinwb/dual.hpp"
#include "skeinwb/errors.hpp"
#include "skeinwb/laurent.hpp"
#include "skeinwb/sampling.hpp"

using namespace skeinwb;

TEST_CASE("gaussian rationals") {
  GaussianRational half = Rational(1, 2);
  CHECK(half + half == GaussianRational(1));
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK((GaussianRational(3) / GaussianRational(Rational(1), Rational(1))) ==
        GaussianRational(Rational(3, 2), Rational(-3, 2)));
  CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);
  CHECK(to_string(GaussianRational(Rational(1), Rational(-2))) == "(1-2i)");
}

TEST_CASE("dual multiplication") {
  CHECK(dual_mul({-1.0, 1.0}, {-1.0, -1.0}) == DualScalar(1.0, 0.0));
  CHECK(dual_mul({3.0, 0.0}, {4.0, 0.0}) == DualScalar(12.0, 0.0));
  CHECK(dual_mul({2.0, 3.0}, {5.0, 7.0}) == DualScalar(10.0, 29.0));
  ExactDual eps = ExactDual::epsilon();
  CHECK(eps * eps == ExactDual());
}

TEST_CASE("dual inverse") {
  ExactDual x(GaussianRational(2), GaussianRational(3));
  CHECK(x * x.inverse() == ExactDual(GaussianRational(1)));
  CHECK_THROWS_AS(ExactDual::epsilon().inverse(), std::domain_error);
}

TEST_CASE("eval_dual basic images") {
  CHECK(eval_dual_exact(LaurentPoly::t(1)) == ExactDual(GaussianRational(-1), GaussianRational(1)));
  CHECK(eval_dual_exact(LaurentPoly::t(-1)) == ExactDual(GaussianRational(-1), GaussianRational(-1)));
  CHECK(eval_dual_exact(LaurentPoly::t(2) + LaurentPoly::t(-2)) == ExactDual(GaussianRational(2)));
  CHECK(eval_dual_exact(loop_value()) == ExactDual(GaussianRational(-2)));
}

TEST_CASE("eval_dual powers against repeated multiplication") {
  // Independent route: multiply the image of t (or t^-1) |n| times.
  ExactDual t(GaussianRational(-1), GaussianRational(1));
  ExactDual tinv = t.inverse();
  ExactDual acc(GaussianRational(1));
  for (int n = 0; n <= 20; ++n) {
    CHECK(eval_dual_exact(LaurentPoly::t(n)) == acc);
    acc *= t;
  }
  acc = ExactDual(GaussianRational(1));
  for (int n = 0; n >= -20; --n) {
    CHECK(eval_dual_exact(LaurentPoly::t(n)) == acc);
    acc *= tinv;
  }
}

TEST_CASE("eval_dual is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 200; ++s) {
    LaurentPoly p = random_laurent(rng, 4, 7);
    LaurentPoly q = random_laurent(rng, 4, 7);
    CHECK(eval_dual_exact(p * q) == eval_dual_exact(p) * eval_dual_exact(q));
    CHECK(eval_dual_exact(p - q) == eval_dual_exact(p) - eval_dual_exact(q));
    CHECK(std::abs(eval_dual(p).value - eval_dual_exact(p).value.to_complex()) < 1e-12);
  }
}

TEST_CASE("laurent polynomials") {
  LaurentPoly p = parse_laurent("t^2 - 3*t^-1 + 5");
  CHECK(p.coeff(2) == GaussianRational(1));
  CHECK(p.coeff(-1) == GaussianRational(-3));
  CHECK(p.coeff(0) == GaussianRational(5));
  CHECK(p.min_degree() == -1);
  CHECK(p.max_degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(LaurentPoly::t(3) * LaurentPoly::t(-3) == LaurentPoly(1));
  CHECK(loop_value() == -(LaurentPoly::t(2) + LaurentPoly::t(-2)));
  CHECK_THROWS_AS(parse_laurent("t^^2"), ParseError);
}

TEST_CASE("laurent text roundtrip") {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 100; ++s) {
    LaurentPoly p = random_laurent(rng, 5, 9);
    CHECK(parse_laurent(to_string(p)) == p);
  }
}

TEST_CASE("dual text roundtrip") {
  DualScalar x(std::complex<double>(1.5, -2.0), std::complex<double>(0.25, 3.0));
  CHECK(parse_dual(to_string(x)) == x);
  CHECK_THROWS_AS(parse_dual("(1,0)+(2,0)"), ParseError);
}

TEST_CASE("exact dual formatting") {
  CHECK(to_string(ExactDual(GaussianRational(-2), GaussianRational(6))) == "-2 + 6e");
  CHECK(to_string(ExactDual(GaussianRational(1), GaussianRational(-3))) == "1 - 3e");
  CHECK(to_string(ExactDual(GaussianRational(0), GaussianRational(1))) == "e");
  CHECK(to_string(ExactDual(GaussianRational(4))) == "4");
}
