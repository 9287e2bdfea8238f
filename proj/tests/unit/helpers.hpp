#pragma once

#include <complex>

#include "skeinwb/sl2.hpp"

namespace testing {

inline double rel_err(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / (1.0 + std::abs(a) + std::abs(b));
}

inline skeinwb::Representation rep(std::initializer_list<skeinwb::SL2> imgs) {
  return skeinwb::Representation(std::vector<skeinwb::SL2>(imgs));
}

}  // namespace testing
