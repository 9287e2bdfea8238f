#pragma once

// Brute-force Kauffman state sum: enumerates all 2^n smoothings and traces the
// resulting loops port by port. Shares no code with the recursive resolver and
// serves as its oracle.

#include "skeinwb/diagram.hpp"
#include "skeinwb/skein.hpp"

namespace skeinwb {

/// Throws std::invalid_argument for more than 20 crossings.
LaurentSkein state_sum_enumerate(const Diagram& d);

}  // namespace skeinwb
