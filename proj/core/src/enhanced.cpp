#include "eqg/enhanced.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace eqg {

namespace {

std::optional<std::uint64_t> checked_power_plus_one(std::uint64_t base, std::size_t exponent) {
  unsigned __int128 acc = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    acc *= base;
    if (acc > static_cast<unsigned __int128>(UINT64_MAX - 1)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc) + 1;
}

// Cyclic subgroup of G/H generated by coset c, as a set of coset indices.
ElementSet coset_cycle(const FiniteGroup& quotient_table, std::size_t c) {
  ElementSet out(quotient_table.order());
  Element x = kIdentity;
  do {
    out.insert(x);
    x = quotient_table.multiply(x, static_cast<Element>(c));
  } while (x != kIdentity);
  return out;
}

}  // namespace

LabeledGraph enhanced_power_graph(const FiniteGroup& group) {
  std::vector<Vertex> vs;
  vs.reserve(group.order());
  for (Element g = 0; g < group.order(); ++g) vs.push_back(Vertex{g, group.label(g)});
  LabeledGraph out(std::move(vs));
  for (const auto& c : maximal_cyclic_subgroups(group)) {
    const auto members = c.members();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) out.add_edge(members[i], members[j]);
  }
  return out;
}

LabeledGraph enhanced_quotient_graph(const QuotientGroup& q) {
  const auto& G = q.parent();
  if (q.index() == 1) throw std::invalid_argument("enhanced quotient graph is undefined for H = G");

  std::vector<Vertex> vs{Vertex{kIdentity, G.label(kIdentity)}};
  for (Element g = 0; g < G.order(); ++g)
    if (q.coset_of(g) != 0) vs.push_back(Vertex{g, G.label(g)});
  LabeledGraph out(std::move(vs));

  // Vertices of each coset (coset 0 contributes only e).
  std::vector<std::vector<std::size_t>> by_coset(q.index());
  for (std::size_t v = 0; v < out.vertex_count(); ++v) by_coset[q.coset_of(out.vertex(v).element)].push_back(v);

  for (const auto& members : by_coset)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) out.add_edge(members[i], members[j]);

  // xH, yH ∈ <zH> for some z ∈ G.
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Element z = 0; z < G.order(); ++z) {
    auto cyc = coset_cycle(q.group(), q.coset_of(z));
    if (!seen.insert(cyc).second) continue;
    const auto cosets = cyc.members();
    for (std::size_t a = 0; a < cosets.size(); ++a)
      for (std::size_t b = a + 1; b < cosets.size(); ++b)
        for (auto u : by_coset[cosets[a]])
          for (auto v : by_coset[cosets[b]]) out.add_edge(u, v);
  }
  return out;
}

LabeledGraph enhanced_quotient_graph(const FiniteGroup& group, const Subgroup& kernel) {
  return enhanced_quotient_graph(QuotientGroup(group, kernel));
}

LabeledGraph deleted(const LabeledGraph& g) {
  const auto e = g.find_element(kIdentity);
  if (!e) throw std::invalid_argument("graph has no identity vertex");
  return delete_vertex(g, *e);
}

LabeledGraph cayley_graph(const FiniteGroup& group, const std::vector<Element>& connection) {
  const auto n = group.order();
  ElementSet c(n);
  for (Element x : connection) {
    if (x >= n) throw std::invalid_argument("connection element out of range");
    c.insert(x);
  }
  if (c.contains(kIdentity)) throw std::invalid_argument("connection set contains the identity");
  c.for_each([&](Element x) {
    if (!c.contains(group.inverse(x))) throw std::invalid_argument("connection set is not closed under inverses");
  });

  std::vector<Vertex> vs;
  for (Element g = 0; g < n; ++g) vs.push_back(Vertex{g, group.label(g)});
  LabeledGraph out(std::move(vs));
  for (Element g = 0; g < n; ++g)
    for (Element h = g + 1; h < n; ++h)
      if (c.contains(group.multiply(h, group.inverse(g)))) out.add_edge(g, h);
  return out;
}

std::size_t vertex_of(const LabeledGraph& g, Element element) {
  const auto v = g.find_element(element);
  if (!v) throw std::invalid_argument("element " + std::to_string(element) + " is not a vertex");
  return *v;
}

DegreeFormulaTerms degree_formula(const QuotientGroup& q, Element g) {
  return degree_formula(q, enhanced_quotient_graph(q), g);
}

DegreeFormulaTerms degree_formula(const QuotientGroup& q, const LabeledGraph& quotient_graph, Element g) {
  if (g >= q.parent().order()) throw std::invalid_argument("element out of range");
  const auto coset = q.coset_of(g);
  if (coset == 0) throw std::invalid_argument("degree formula requires g outside H");

  std::vector<std::vector<std::size_t>> containing;
  for (const auto& c : maximal_cyclic_subgroups(q.group()))
    if (c.contains(coset)) {
      std::vector<std::size_t> m;
      c.for_each([&](Element x) { m.push_back(x); });
      containing.push_back(std::move(m));
    }
  std::sort(containing.begin(), containing.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });

  DegreeFormulaTerms t;
  t.g = g;
  const auto h = static_cast<long long>(q.kernel().size());
  std::set<std::size_t> counted;
  for (std::size_t i = 0; i < containing.size(); ++i) {
    const auto& c = containing[i];
    std::size_t overlap = 0;
    for (auto x : c) overlap += counted.contains(x) ? 1 : 0;
    t.overlap_sizes.push_back(overlap);
    const auto size = static_cast<long long>(c.size());
    if (i == 0)
      t.formula_value += (size - 1) * h + 1;
    else
      t.formula_value += (size - static_cast<long long>(overlap)) * h;
    counted.insert(c.begin(), c.end());
  }
  t.maximal_cyclics = std::move(containing);
  t.actual_degree = quotient_graph.degree(vertex_of(quotient_graph, g));
  return t;
}

CliqueFormulas clique_formulas(const QuotientGroup& q, bool compute_exact, std::size_t clique_gate) {
  return clique_formulas(q, enhanced_quotient_graph(q), compute_exact, clique_gate);
}

CliqueFormulas clique_formulas(const QuotientGroup& q, const LabeledGraph& quotient_graph, bool compute_exact,
                               std::size_t clique_gate) {
  CliqueFormulas f;
  f.s = *order_spectrum(q).pi_e.rbegin();
  const auto h = q.kernel().size();
  f.paper_value = checked_power_plus_one(h, f.s - 1);
  f.coset_value = static_cast<std::uint64_t>((f.s - 1) * h + 1);
  if (compute_exact) {
    const auto omega = clique_number(quotient_graph, clique_gate);
    if (omega.skipped())
      f.omega_skipped = true;
    else
      f.exact_omega = *omega;
  }
  return f;
}

std::vector<Element> lift_hamiltonian(const QuotientGroup& q, const std::vector<std::size_t>& quotient_cycle) {
  const auto k = q.index();
  if (k < 3) throw std::invalid_argument("a quotient with fewer than 3 cosets has no Hamiltonian cycle");
  const auto power_graph = enhanced_power_graph(q.group());
  if (quotient_cycle.empty() || quotient_cycle.front() != 0 || !is_hamiltonian_cycle(power_graph, quotient_cycle))
    throw std::invalid_argument("input is not a Hamiltonian cycle of the quotient's enhanced power graph through H");

  std::vector<Element> lifted{kIdentity};
  for (std::size_t i = 1; i + 1 < quotient_cycle.size(); ++i)
    for (Element x : q.cosets()[quotient_cycle[i]]) lifted.push_back(x);
  lifted.push_back(kIdentity);
  return lifted;
}

EmbeddedCopy embedded_copies(const QuotientGroup& q, const std::vector<Element>& transversal) {
  return embedded_copies(q, enhanced_quotient_graph(q), enhanced_power_graph(q.group()), transversal);
}

EmbeddedCopy embedded_copies(const QuotientGroup& q, const LabeledGraph& quotient_graph,
                             const LabeledGraph& quotient_power_graph, const std::vector<Element>& transversal) {
  const auto k = q.index();
  if (transversal.size() + 1 != k) throw std::invalid_argument("transversal must pick one element per coset other than H");
  std::vector<bool> hit(k, false);
  hit[0] = true;
  std::vector<std::size_t> subset{vertex_of(quotient_graph, kIdentity)};
  for (Element x : transversal) {
    if (x >= q.parent().order()) throw std::invalid_argument("transversal element out of range");
    const auto c = q.coset_of(x);
    if (hit[c]) throw std::invalid_argument("transversal hits coset " + std::to_string(c) + " twice or hits H");
    hit[c] = true;
    subset.push_back(vertex_of(quotient_graph, x));
  }

  EmbeddedCopy out{induced(quotient_graph, subset), true};
  const auto& copy = out.copy;
  for (std::size_t i = 0; i < copy.vertex_count() && out.isomorphic; ++i)
    for (std::size_t j = i + 1; j < copy.vertex_count() && out.isomorphic; ++j) {
      const auto ci = q.coset_of(copy.vertex(i).element);
      const auto cj = q.coset_of(copy.vertex(j).element);
      out.isomorphic = copy.adjacent(i, j) == quotient_power_graph.adjacent(ci, cj);
    }
  return out;
}

std::optional<std::uint64_t> admissible_transversal_count(const QuotientGroup& q) {
  auto v = checked_power_plus_one(q.kernel().size(), q.index() - 1);
  if (!v) return std::nullopt;
  return *v - 1;
}

}  // namespace eqg
