#include "skeinwb/diagram.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "skeinwb/errors.hpp"

namespace skeinwb {

using nlohmann::json;

const char* to_string(Over o) { return o == Over::P02 ? "02" : "13"; }

void Diagram::validate() const {
  if (genus < 0) throw MalformedDiagram("negative genus");
  std::vector<int> uses(crossings.size() * 4, 0);
  auto touch = [&](const Port& p, std::size_t edge) {
    if (p.crossing < 0 || static_cast<std::size_t>(p.crossing) >= crossings.size() || p.port < 0 || p.port > 3)
      throw MalformedDiagram("edge " + std::to_string(edge) + " refers to nonexistent port [" +
                             std::to_string(p.crossing) + "," + std::to_string(p.port) + "]");
    ++uses[static_cast<std::size_t>(p.crossing * 4 + p.port)];
  };
  auto check_label = [&](const GroupWord& w, const std::string& where) {
    if (w.max_generator() > genus)
      throw MalformedDiagram(where + " label " + to_string(w) + " exceeds genus " + std::to_string(genus));
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    touch(edges[e].from, e);
    touch(edges[e].to, e);
    check_label(edges[e].label, "edge " + std::to_string(e));
  }
  for (const GroupWord& w : free_loops) check_label(w, "free loop");
  for (std::size_t k = 0; k < uses.size(); ++k) {
    if (uses[k] != 1)
      throw MalformedDiagram("port [" + std::to_string(k / 4) + "," + std::to_string(k % 4) + "] is used " +
                             std::to_string(uses[k]) + " times (expected 1)");
  }
}

namespace {

Port parse_port(const json& j, const char* field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError(std::string("edge field \"") + field + "\" must be [crossing, port]");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

Diagram parse_diagram(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("diagram: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw ParseError("diagram: top level must be an object");
  Diagram d;
  try {
    d.genus = j.value("genus", 0);
    for (const auto& c : j.value("crossings", json::array())) {
      std::string over = c.value("over", "02");
      if (over == "02") {
        d.crossings.push_back({Over::P02});
      } else if (over == "13") {
        d.crossings.push_back({Over::P13});
      } else {
        throw ParseError("crossing \"over\" must be \"02\" or \"13\"");
      }
    }
    for (const auto& e : j.value("edges", json::array())) {
      if (!e.is_object() || !e.contains("from") || !e.contains("to"))
        throw ParseError("each edge needs \"from\" and \"to\"");
      Edge edge;
      edge.from = parse_port(e["from"], "from");
      edge.to = parse_port(e["to"], "to");
      edge.label = GroupWord::parse(e.value("label", ""));
      if (e.contains("curve")) {
        std::string c = e["curve"].get<std::string>();
        if (c != "a" && c != "b") throw ParseError("edge \"curve\" must be \"a\" or \"b\"");
        edge.curve = c[0];
      }
      d.edges.push_back(std::move(edge));
    }
    for (const auto& w : j.value("free_loops", json::array())) d.free_loops.push_back(GroupWord::parse(w.get<std::string>()));
  } catch (const json::exception& e) {
    throw ParseError(std::string("diagram: ") + e.what());
  }
  d.validate();
  return d;
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open diagram file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

std::string to_json_string(const Diagram& d) {
  json j;
  j["genus"] = d.genus;
  j["crossings"] = json::array();
  for (const Crossing& c : d.crossings) j["crossings"].push_back({{"over", to_string(c.over)}});
  j["edges"] = json::array();
  for (const Edge& e : d.edges) {
    json je = {{"from", {e.from.crossing, e.from.port}}, {"to", {e.to.crossing, e.to.port}}, {"label", to_string(e.label)}};
    if (e.curve) je["curve"] = std::string(1, *e.curve);
    j["edges"].push_back(je);
  }
  j["free_loops"] = json::array();
  for (const GroupWord& w : d.free_loops) j["free_loops"].push_back(to_string(w));
  return j.dump();
}

}  // namespace skeinwb
