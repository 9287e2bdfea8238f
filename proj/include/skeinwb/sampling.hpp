#pragma once

// Seeded random samples of exact algebraic objects.

#include <random>

#include "skeinwb/laurent.hpp"
#include "skeinwb/quantum_torus.hpp"

namespace skeinwb {

/// Up to `terms` terms with exponents in [-max_exp, max_exp] and small
/// Gaussian-integer coefficients.
LaurentPoly random_laurent(std::mt19937_64& rng, int terms = 3, int max_exp = 4);

/// Up to `terms` monomials L^a M^b with |a|, |b| <= max_exp.
TorusElement random_torus_element(std::mt19937_64& rng, int terms = 4, int max_exp = 5);

}  // namespace skeinwb
