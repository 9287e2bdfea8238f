#include "skeinwb/sampling.hpp"

namespace skeinwb {

namespace {

GaussianRational small_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> re(-3, 3);
  std::uniform_int_distribution<int> im(-1, 1);
  GaussianRational c(Rational(re(rng)), Rational(im(rng)));
  return c.is_zero() ? GaussianRational(1) : c;
}

}  // namespace

LaurentPoly random_laurent(std::mt19937_64& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> count(1, terms);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  LaurentPoly p;
  for (int k = count(rng); k > 0; --k) p.add_term(exp(rng), small_coefficient(rng));
  return p;
}

TorusElement random_torus_element(std::mt19937_64& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> count(1, terms);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  TorusElement p;
  for (int k = count(rng); k > 0; --k) {
    int a = exp(rng);
    int b = exp(rng);
    p.add_term({a, b}, random_laurent(rng, 2, 3));
  }
  return p;
}

}  // namespace skeinwb
