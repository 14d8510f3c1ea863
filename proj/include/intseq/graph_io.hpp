#pragma once

// JSON and DOT renderings of CrystalGraph.

#include "intseq/crystalcore.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace intseq {

inline constexpr int graph_format_version = 1;

inline nlohmann::json graph_to_json(const CrystalGraph &g) {
  nlohmann::json j;
  j["version"] = graph_format_version;
  j["algebra"] = {{"family", std::string(1, family_char(g.spec.family))}, {"rank", g.spec.rank}};
  auto &vs = j["vertices"] = nlohmann::json::array();
  for (const auto &v : g.vertices)
    vs.push_back({{"id", v.id}, {"element", v.element}, {"weight", v.weight.coeffs}, {"eps", v.eps}, {"phi", v.phi}});
  auto &es = j["edges"] = nlohmann::json::array();
  for (const auto &e : g.edges) es.push_back({{"from", e.from}, {"to", e.to}, {"color", e.color}});
  j["highest"] = g.highest;
  return j;
}

inline std::string export_json(const CrystalGraph &g) { return graph_to_json(g).dump(2) + "\n"; }

/// Inverse of graph_to_json. Throws std::invalid_argument on schema errors.
inline CrystalGraph graph_from_json(const nlohmann::json &j) {
  try {
    if (j.at("version").get<int>() != graph_format_version)
      throw std::invalid_argument("unsupported graph format version " + j.at("version").dump());
    CrystalGraph g;
    const auto &alg = j.at("algebra");
    g.spec = AlgebraSpec(parse_family(alg.at("family").get<std::string>()), alg.at("rank").get<int>());
    const auto n = static_cast<std::size_t>(g.spec.rank);
    for (const auto &jv : j.at("vertices")) {
      GraphVertex v;
      v.id = jv.at("id").get<int>();
      if (v.id != static_cast<int>(g.vertices.size())) throw std::invalid_argument("vertex ids must be 0, 1, 2, ... in order");
      v.element = jv.at("element").get<std::string>();
      v.weight = Weight(jv.at("weight").get<std::vector<int>>());
      v.eps = jv.at("eps").get<std::vector<int>>();
      v.phi = jv.at("phi").get<std::vector<int>>();
      if (v.weight.size() != n || v.eps.size() != n || v.phi.size() != n)
        throw std::invalid_argument("vertex " + std::to_string(v.id) + " has tables of the wrong length");
      g.vertices.push_back(std::move(v));
    }
    const int count = static_cast<int>(g.vertices.size());
    for (const auto &je : j.at("edges")) {
      GraphEdge e{je.at("from").get<int>(), je.at("to").get<int>(), je.at("color").get<int>()};
      if (e.from < 0 || e.from >= count || e.to < 0 || e.to >= count || e.color < 1 || e.color > g.spec.rank)
        throw std::invalid_argument("edge out of range: " + je.dump());
      g.edges.push_back(e);
    }
    g.highest = j.at("highest").get<std::vector<int>>();
    for (int h : g.highest)
      if (h < 0 || h >= count) throw std::invalid_argument("highest vertex out of range");
    return g;
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

inline CrystalGraph import_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

/// One directed edge per f-edge, labelled with its color.
inline std::string export_dot(const CrystalGraph &g) {
  std::ostringstream out;
  out << "digraph \"" << g.spec.name() << "\" {\n";
  for (const auto &v : g.vertices) out << "  " << v.id << " [label=\"" << v.element << "\"];\n";
  for (const auto &e : g.edges) out << "  " << e.from << " -> " << e.to << " [label=\"" << e.color << "\"];\n";
  out << "}\n";
  return out.str();
}

} // namespace intseq
