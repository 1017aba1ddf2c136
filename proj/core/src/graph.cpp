#include "eqg/graph.hpp"

#include <stdexcept>

namespace eqg {

LabeledGraph::LabeledGraph(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  adj_.assign(vertices_.size(), ElementSet(vertices_.size()));
}

void LabeledGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertices_.size() || v >= vertices_.size()) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (adj_[u].contains(v)) return;
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++edge_count_;
}

std::optional<std::size_t> LabeledGraph::find_element(Element element) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].element == element) return v;
  return std::nullopt;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < vertices_.size(); ++u)
    adj_[u].for_each([&](Element v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

LabeledGraph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<Vertex> vs(n);
  for (std::size_t i = 0; i < n; ++i) vs[i] = Vertex{static_cast<Element>(i), std::to_string(i)};
  LabeledGraph g(std::move(vs));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

LabeledGraph complete_graph(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return make_graph(n, es);
}

LabeledGraph star_graph(std::size_t leaves) {
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return make_graph(leaves + 1, es);
}

LabeledGraph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return make_graph(a + b, es);
}

LabeledGraph cycle_graph(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return make_graph(n, es);
}

LabeledGraph path_graph(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return make_graph(n, es);
}

}  // namespace eqg
