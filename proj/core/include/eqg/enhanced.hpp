#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eqg/algorithms.hpp"
#include "eqg/graph.hpp"
#include "eqg/group.hpp"

namespace eqg {

/// Enhanced power graph: x ~ y iff both lie in a common cyclic subgroup.
/// Vertex i is element i. Built from the pairs inside each maximal cyclic subgroup.
LabeledGraph enhanced_power_graph(const FiniteGroup& group);

/// Enhanced quotient graph on (G \ H) ∪ {e}: x ~ y iff xH = yH or both cosets
/// lie in <zH> for some z. Vertex 0 is e; the rest follow in element order.
/// Throws std::invalid_argument when H = G.
LabeledGraph enhanced_quotient_graph(const QuotientGroup& q);
LabeledGraph enhanced_quotient_graph(const FiniteGroup& group, const Subgroup& kernel);

/// Removes the vertex carrying the identity. Throws std::invalid_argument if absent.
LabeledGraph deleted(const LabeledGraph& g);

/// Cayley graph on G: g ~ h iff h g^-1 ∈ C. C must be inverse-closed and omit e.
LabeledGraph cayley_graph(const FiniteGroup& group, const std::vector<Element>& connection);

/// Terms of the closed-form degree expression for a vertex g ∉ H.
struct DegreeFormulaTerms {
  Element g = 0;
  /// Maximal cyclic subgroups of G/H containing <gH>, as coset-index lists,
  /// by decreasing size then lexicographically.
  std::vector<std::vector<std::size_t>> maximal_cyclics;
  /// |A_i|: overlap of subgroup i with the union of the earlier ones (0 for the first).
  std::vector<std::size_t> overlap_sizes;
  long long formula_value = 0;
  std::size_t actual_degree = 0;
};

/// Throws std::invalid_argument if g ∈ H.
DegreeFormulaTerms degree_formula(const QuotientGroup& q, Element g);
DegreeFormulaTerms degree_formula(const QuotientGroup& q, const LabeledGraph& quotient_graph, Element g);

struct CliqueFormulas {
  std::size_t s = 0;  // highest element order in G/H
  /// |H|^(s-1) + 1; nullopt if it overflows 64 bits.
  std::optional<std::uint64_t> paper_value;
  std::uint64_t coset_value = 0;  // (s-1)|H| + 1
  std::optional<std::size_t> exact_omega;
  bool omega_skipped = false;
};

CliqueFormulas clique_formulas(const QuotientGroup& q, bool compute_exact, std::size_t clique_gate = kCliqueGate);
CliqueFormulas clique_formulas(const QuotientGroup& q, const LabeledGraph& quotient_graph, bool compute_exact,
                               std::size_t clique_gate = kCliqueGate);

/// Lifts a Hamiltonian cycle of the enhanced power graph of G/H (coset indices,
/// closed, starting at coset 0) to a Hamiltonian cycle of the enhanced quotient
/// graph, returned as closed element walk e, a1H..., a2H..., ..., e.
/// Throws std::invalid_argument if the input is not such a cycle.
std::vector<Element> lift_hamiltonian(const QuotientGroup& q, const std::vector<std::size_t>& quotient_cycle);

struct EmbeddedCopy {
  LabeledGraph copy;  // induced on {e} ∪ transversal
  bool isomorphic = false;  // representative -> coset is an isomorphism onto the quotient's power graph
};

/// `transversal` holds one element of each coset other than H.
/// Throws std::invalid_argument on an invalid transversal.
EmbeddedCopy embedded_copies(const QuotientGroup& q, const std::vector<Element>& transversal);
EmbeddedCopy embedded_copies(const QuotientGroup& q, const LabeledGraph& quotient_graph,
                             const LabeledGraph& quotient_power_graph, const std::vector<Element>& transversal);

/// |H|^([G:H]-1), nullopt on overflow.
std::optional<std::uint64_t> admissible_transversal_count(const QuotientGroup& q);

/// Vertex of `g` in an enhanced graph (looked up by element).
std::size_t vertex_of(const LabeledGraph& g, Element element);

}  // namespace eqg
