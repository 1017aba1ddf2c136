#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eqg/graph.hpp"

namespace eqg {

struct GraphProfile {
  bool connected = false;
  bool complete = false;
  bool bipartite = false;
  bool tree = false;
  /// At least two vertices, a center adjacent to all others and no other edges.
  bool star = false;
  /// Connected and every degree even.
  bool eulerian = false;
  std::optional<std::size_t> regular_degree;
  std::vector<std::size_t> degree_sequence;  // by vertex index
};

/// Requires at least one vertex.
GraphProfile profile(const LabeledGraph& g);

std::vector<std::vector<std::size_t>> connected_components(const LabeledGraph& g);
bool is_connected(const LabeledGraph& g);

/// Closed walk (first == last) using every edge once, when the graph is Eulerian.
std::optional<std::vector<std::size_t>> euler_circuit(const LabeledGraph& g);

/// Union-find test: some component has at least as many edges as vertices.
bool has_cycle(const LabeledGraph& g);

inline constexpr std::size_t kCliqueGate = 40;
inline constexpr std::size_t kHamiltonianGate = 20;
inline constexpr std::size_t kCircumferenceGate = 14;
inline constexpr std::size_t kPlanarityGate = 30;

/// Largest clique, ascending vertex order; branch and bound with greedy-coloring bounds.
Gated<std::vector<std::size_t>> maximum_clique(const LabeledGraph& g, std::size_t gate = kCliqueGate);
Gated<std::size_t> clique_number(const LabeledGraph& g, std::size_t gate = kCliqueGate);

/// Hamiltonian cycle as a closed walk starting and ending at vertex 0, or nullopt.
/// Graphs with fewer than three vertices have none.
Gated<std::optional<std::vector<std::size_t>>> hamiltonian_cycle(const LabeledGraph& g,
                                                                 std::size_t gate = kHamiltonianGate);
/// Closed walk visiting every vertex exactly once along edges.
bool is_hamiltonian_cycle(const LabeledGraph& g, const std::vector<std::size_t>& cycle);

/// Length of the longest simple cycle (>= 3 vertices), 0 if acyclic.
Gated<std::size_t> circumference(const LabeledGraph& g, std::size_t gate = kCircumferenceGate);

/// Proper coloring with at most k colors, if one exists.
Gated<std::optional<std::vector<std::size_t>>> k_coloring(const LabeledGraph& g, std::size_t k,
                                                          std::size_t gate = kCliqueGate);

/// A subdivision of K5 or K3,3 contained in a graph.
struct KuratowskiWitness {
  enum class Kind { K5, K33 };
  Kind kind = Kind::K5;
  /// Branch vertices: 5 for K5; for K3,3 the first three form one side.
  std::vector<std::size_t> branch;
  /// One path per branch pair (both endpoints included), internally disjoint.
  std::vector<std::vector<std::size_t>> paths;
};

struct PlanarityResult {
  bool planar = true;
  std::optional<KuratowskiWitness> witness;
};

Gated<PlanarityResult> is_planar(const LabeledGraph& g, std::size_t gate = kPlanarityGate);
/// Checks that the witness is a genuine K5 / K3,3 subdivision inside `g`.
bool validate_kuratowski_witness(const LabeledGraph& g, const KuratowskiWitness& w);

/// Vertices adjacent to every other vertex.
std::vector<std::size_t> cone_vertices(const LabeledGraph& g);

/// Some vertex is adjacent to all others and removing it leaves exactly two
/// disjoint cliques of sizes a and b with no edges between them.
/// Throws std::invalid_argument unless |V| = a + b + 1.
bool is_apex_double_clique(const LabeledGraph& g, std::size_t a, std::size_t b);

/// Throws std::invalid_argument if v is not a vertex.
LabeledGraph delete_vertex(const LabeledGraph& g, std::size_t v);
/// Induced subgraph on `subset` (kept in ascending vertex order).
LabeledGraph induced(const LabeledGraph& g, std::vector<std::size_t> subset);

}  // namespace eqg
