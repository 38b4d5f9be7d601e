#pragma once

// Wire formats: comma-separated integer lists for splitting types, rows and
// windows; the documented JSON shapes for fillings, chain models and braid
// graphs. Counts always travel as decimal strings.

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnk/braid.hpp"
#include "bnk/chain.hpp"
#include "bnk/diagram.hpp"
#include "bnk/filling.hpp"
#include "bnk/splitting.hpp"

namespace bnk {

using Json = nlohmann::json;

inline std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    long long v;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: " + text);
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("not an integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

inline SplittingType parse_splitting(const std::string& text) {
  return SplittingType(parse_int_list(text));
}

inline Diagram parse_rows(const std::string& text) { return Diagram(parse_int_list(text)); }

inline std::string join(const std::vector<long long>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

inline Json to_json(const Filling& f) {
  Json boxes = Json::array();
  for (const auto& [pos, symbol] : f.boxes())
    boxes.push_back({{"r", pos.first}, {"c", pos.second}, {"symbol", symbol}});
  return Json{{"k", f.k()}, {"word", f.word()}, {"boxes", boxes}};
}

inline Json to_json(const ChainModel& m) {
  Json states = Json::array();
  for (const ComponentState& s : m.states())
    states.push_back(s.special ? "c:" + std::to_string(s.residue) : std::string("generic"));
  return Json{{"k", m.k()}, {"g", m.g()}, {"d", m.d()}, {"states", states}};
}

inline ChainModel chain_from_json(const Json& j) {
  std::vector<ComponentState> states;
  for (const auto& s : j.at("states")) {
    const std::string text = s.get<std::string>();
    if (text == "generic")
      states.push_back(ComponentState::generic());
    else if (text.rfind("c:", 0) == 0)
      states.push_back(ComponentState::special_residue(std::stoi(text.substr(2))));
    else
      throw std::invalid_argument("bad component state: " + text);
  }
  ChainModel m(j.at("k").get<int>(), j.at("d").get<long long>(), std::move(states));
  if (m.g() != j.at("g").get<int>()) throw std::invalid_argument("g does not match states");
  return m;
}

inline Json to_json(const BraidGraph& g) {
  Json nodes = Json::array();
  for (const Filling& f : g.nodes) nodes.push_back(f.word());
  Json edges = Json::array();
  for (const BraidEdge& e : g.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"move", std::string(1, e.move)}, {"pos", e.pos}});
  return Json{{"nodes", nodes}, {"edges", edges}, {"connected", g.connected}};
}

}  // namespace bnk
