#pragma once

#include <string>

#include "skeinwb/rational.hpp"

namespace skeinwb::detail {

/// Appends "c*mono" to a sum being printed, folding signs of real or purely
/// imaginary coefficients into " + " / " - ". An empty `mono` is the unit.
void append_term(std::string& out, const GaussianRational& c, const std::string& mono);

/// "t^3", "t", "" for exponent 0. `symbol` is the variable name.
std::string power_string(const std::string& symbol, int exponent);

}  // namespace skeinwb::detail
