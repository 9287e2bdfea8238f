#pragma once

// Group-labelled 4-valent link diagrams.
//
// Each crossing has four ports numbered counterclockwise 0..3 (E, N, W, S).
// The strands through a crossing are 0-2 and 1-3; `over` names the pair that
// passes over. Edges join two ports and carry a word read from `from` to `to`.

#include <optional>
#include <string>
#include <vector>

#include "skeinwb/word.hpp"

namespace skeinwb {

struct Port {
  int crossing = 0;
  int port = 0;
  friend bool operator==(const Port&, const Port&) = default;
  friend auto operator<=>(const Port&, const Port&) = default;
};

enum class Over { P02, P13 };

struct Crossing {
  Over over = Over::P02;
};

struct Edge {
  Port from;
  Port to;
  GroupWord label;
  /// Optional curve marker used by two-curve diagrams ('a' or 'b').
  std::optional<char> curve;
};

struct Diagram {
  int genus = 0;
  std::vector<Crossing> crossings;
  std::vector<Edge> edges;
  /// Closed components that meet no crossing.
  std::vector<GroupWord> free_loops;

  /// Throws MalformedDiagram unless every port is used by exactly one edge
  /// end and every label fits the genus.
  void validate() const;
  std::size_t num_crossings() const { return crossings.size(); }
};

Diagram parse_diagram(const std::string& json_text);
Diagram load_diagram(const std::string& path);
std::string to_json_string(const Diagram& d);

const char* to_string(Over o);

}  // namespace skeinwb
