#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eqg/element_set.hpp"

namespace eqg {

/// A graph vertex carries the group element it stands for and a display label.
struct Vertex {
  Element element = 0;
  std::string label;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph: symmetric adjacency, no self-loops.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::vector<Vertex> vertices);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// Adds {u, v}; idempotent. Throws std::invalid_argument on a self-loop or bad index.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].contains(v); }
  const ElementSet& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }

  /// Vertex carrying `element`, if any.
  std::optional<std::size_t> find_element(Element element) const;

  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertices_ == b.vertices_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<ElementSet> adj_;
  std::size_t edge_count_ = 0;
};

/// Graph with unlabeled vertices 0..n-1 (labels are the indices).
LabeledGraph make_graph(std::size_t n, const std::vector<Edge>& edges);
LabeledGraph complete_graph(std::size_t n);
LabeledGraph star_graph(std::size_t leaves);
LabeledGraph complete_bipartite_graph(std::size_t a, std::size_t b);
LabeledGraph cycle_graph(std::size_t n);
LabeledGraph path_graph(std::size_t n);

/// Result of a size-gated exact algorithm: either a value or a "skipped" marker.
struct Skipped {
  std::string algorithm;
  std::size_t vertices = 0;
  std::size_t gate = 0;
};

template <class T>
class Gated {
 public:
  Gated(T value) : state_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Gated(Skipped s) : state_(std::move(s)) {}    // NOLINT(google-explicit-constructor)

  bool skipped() const { return std::holds_alternative<Skipped>(state_); }
  const T& value() const { return std::get<T>(state_); }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  const Skipped& skip_info() const { return std::get<Skipped>(state_); }

 private:
  std::variant<T, Skipped> state_;
};

}  // namespace eqg
