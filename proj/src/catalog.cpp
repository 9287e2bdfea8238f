#include "skeinwb/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "skeinwb/errors.hpp"

namespace skeinwb {

Diagram from_pd_code(const std::vector<std::array<int, 4>>& pd) {
  Diagram d;
  std::map<int, std::vector<Port>> ends;
  for (std::size_t c = 0; c < pd.size(); ++c) {
    d.crossings.push_back({Over::P13});
    for (int p = 0; p < 4; ++p) ends[pd[c][static_cast<std::size_t>(p)]].push_back({static_cast<int>(c), p});
  }
  for (const auto& [arc, ports] : ends) {
    if (ports.size() != 2) throw MalformedDiagram("arc " + std::to_string(arc) + " must appear exactly twice");
    d.edges.push_back({ports[0], ports[1], {}, std::nullopt});
  }
  d.validate();
  return d;
}

namespace {

Diagram two_curves(std::vector<Edge> edges, int genus, std::size_t crossings) {
  Diagram d;
  d.genus = genus;
  d.crossings.assign(crossings, Crossing{Over::P02});
  d.edges = std::move(edges);
  d.validate();
  return d;
}

Edge marked(Port from, Port to, const char* label, char curve) {
  return {from, to, GroupWord::parse(label), curve};
}

}  // namespace

std::vector<std::pair<std::string, Diagram>> builtin_diagrams() {
  std::vector<std::pair<std::string, Diagram>> out;

  Diagram unknot;
  unknot.free_loops.push_back({});
  out.emplace_back("unknot", unknot);

  Diagram kink;
  kink.crossings.push_back({Over::P02});
  kink.edges.push_back({{0, 0}, {0, 3}, {}, std::nullopt});
  kink.edges.push_back({{0, 1}, {0, 2}, {}, std::nullopt});
  out.emplace_back("kink", kink);

  out.emplace_back("hopf", from_pd_code({{4, 1, 3, 2}, {2, 3, 1, 4}}));
  out.emplace_back("trefoil", from_pd_code({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}));
  out.emplace_back("figure8", from_pd_code({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}));

  Diagram labelled = kink;
  labelled.genus = 1;
  labelled.edges[0].label = GroupWord::parse("a");
  out.emplace_back("labelled_kink", labelled);

  // One intersection of a curve labelled a with a curve labelled b.
  out.emplace_back("torus_pair", two_curves({marked({0, 2}, {0, 0}, "a", 'a'), marked({0, 3}, {0, 1}, "b", 'b')}, 2, 1));

  // b crosses a upward at X0 and back downward at X1, bounding a bigon.
  out.emplace_back("parallel_pair", two_curves({marked({0, 0}, {1, 2}, "", 'a'), marked({1, 0}, {0, 2}, "a", 'a'),
                                                marked({0, 1}, {1, 1}, "", 'b'), marked({1, 3}, {0, 3}, "b", 'b')},
                                               2, 2));

  Diagram disjoint;
  disjoint.genus = 2;
  disjoint.free_loops = {GroupWord::parse("a"), GroupWord::parse("b")};
  out.emplace_back("disjoint_pair", disjoint);
  return out;
}

Diagram builtin_diagram(const std::string& name) {
  for (auto& [n, d] : builtin_diagrams())
    if (n == name) return d;
  throw ParseError("unknown builtin diagram '" + name + "'");
}

namespace {

GroupWord random_label(std::mt19937_64& rng, int genus, std::size_t max_label) {
  if (genus == 0 || max_label == 0) return {};
  std::uniform_int_distribution<std::size_t> len(0, max_label);
  return random_word(rng, genus, len(rng));
}

}  // namespace

Diagram random_diagram(std::mt19937_64& rng, int crossings, int genus, std::size_t max_label) {
  Diagram d;
  d.genus = genus;
  std::bernoulli_distribution coin(0.5);
  for (int c = 0; c < crossings; ++c) d.crossings.push_back({coin(rng) ? Over::P02 : Over::P13});
  std::vector<Port> ports;
  for (int c = 0; c < crossings; ++c)
    for (int p = 0; p < 4; ++p) ports.push_back({c, p});
  std::shuffle(ports.begin(), ports.end(), rng);
  for (std::size_t k = 0; k + 1 < ports.size(); k += 2)
    d.edges.push_back({ports[k], ports[k + 1], random_label(rng, genus, max_label), std::nullopt});
  d.validate();
  return d;
}

Diagram random_two_curve_diagram(std::mt19937_64& rng, int crossings, int genus, std::size_t max_label) {
  if (crossings < 1) throw std::invalid_argument("random_two_curve_diagram needs at least one crossing");
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  auto curve = [&](int in_a, int in_b, char mark) {
    std::vector<int> visit(static_cast<std::size_t>(crossings));
    std::iota(visit.begin(), visit.end(), 0);
    std::shuffle(visit.begin(), visit.end(), rng);
    std::vector<std::pair<int, int>> through;  // (in, out) port per visit
    for (std::size_t k = 0; k < visit.size(); ++k) through.push_back(coin(rng) ? std::pair{in_a, in_b} : std::pair{in_b, in_a});
    for (std::size_t k = 0; k < visit.size(); ++k) {
      std::size_t next = (k + 1) % visit.size();
      edges.push_back({{visit[k], through[k].second}, {visit[next], through[next].first},
                       random_label(rng, genus, max_label), mark});
    }
  };
  curve(0, 2, 'a');
  curve(1, 3, 'b');
  return two_curves(std::move(edges), genus, static_cast<std::size_t>(crossings));
}

}  // namespace skeinwb
