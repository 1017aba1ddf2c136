#include "eqg/graph_io.hpp"

#include <sstream>

#include "eqg/errors.hpp"

namespace eqg {

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const LabeledGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << dot_quote(name) << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "  " << v << " [label=" << dot_quote(g.vertex(v).label) << "];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json to_json(const LabeledGraph& g, const nlohmann::ordered_json& metadata) {
  nlohmann::ordered_json doc;
  auto labels = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices()) labels.push_back(v.label);
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  doc["vertices"] = std::move(labels);
  doc["edges"] = std::move(edges);
  if (!metadata.is_null()) doc["metadata"] = metadata;
  return doc;
}

LabeledGraph graph_from_json(const nlohmann::json& doc) {
  try {
    const auto labels = doc.at("vertices").get<std::vector<std::string>>();
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < labels.size(); ++i) vs.push_back(Vertex{static_cast<Element>(i), labels[i]});
    LabeledGraph g(std::move(vs));
    for (const auto& e : doc.at("edges")) {
      const auto u = e.at(0).get<std::size_t>();
      const auto v = e.at(1).get<std::size_t>();
      if (u >= labels.size() || v >= labels.size() || u == v) throw SpecError("invalid edge in graph JSON");
      g.add_edge(u, v);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace eqg
