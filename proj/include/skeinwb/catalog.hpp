#pragma once

// Named example diagrams and random diagram generators.

#include <array>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skeinwb/diagram.hpp"

namespace skeinwb {

/// unknot, kink, hopf, trefoil, figure8, labelled_kink, torus_pair,
/// parallel_pair, disjoint_pair.
std::vector<std::pair<std::string, Diagram>> builtin_diagrams();
Diagram builtin_diagram(const std::string& name);

/// Diagram from planar-diagram code: each crossing lists the arc labels at
/// its ports counterclockwise starting with the incoming under-strand.
Diagram from_pd_code(const std::vector<std::array<int, 4>>& pd);

/// Random 4-valent diagram: random port matching, over-pairs and labels.
Diagram random_diagram(std::mt19937_64& rng, int crossings, int genus, std::size_t max_label = 2);

/// Two closed curves 'a' and 'b' meeting only at `crossings` points, each
/// visiting the crossings in a random order and direction.
Diagram random_two_curve_diagram(std::mt19937_64& rng, int crossings, int genus, std::size_t max_label = 2);

}  // namespace skeinwb
