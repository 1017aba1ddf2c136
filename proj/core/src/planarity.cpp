#include <algorithm>
#include <iterator>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "eqg/algorithms.hpp"

namespace eqg {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(std::size_t n, const std::vector<Edge>& edges) {
  BoostGraph bg(n);
  int index = 0;
  for (auto [u, v] : edges) {
    auto [e, ok] = boost::add_edge(u, v, bg);
    (void)ok;
    boost::put(boost::edge_index, bg, e, index++);
  }
  return bg;
}

bool planar_edges(std::size_t n, const std::vector<Edge>& edges) {
  auto bg = to_boost(n, edges);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::vector<Edge> kuratowski_edges(std::size_t n, const std::vector<Edge>& edges) {
  auto bg = to_boost(n, edges);
  std::vector<boost::graph_traits<BoostGraph>::edge_descriptor> found;
  boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(found));
  std::vector<Edge> out;
  for (const auto& e : found) {
    auto u = boost::source(e, bg);
    auto v = boost::target(e, bg);
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Reduce a non-planar edge set to a minimal one: every edge is then needed,
// so the set is exactly a K5 or K3,3 subdivision.
std::vector<Edge> minimize(std::size_t n, std::vector<Edge> edges) {
  for (std::size_t i = 0; i < edges.size();) {
    auto trial = edges;
    trial.erase(trial.begin() + static_cast<long>(i));
    if (!planar_edges(n, trial))
      edges = std::move(trial);
    else
      ++i;
  }
  return edges;
}

std::optional<KuratowskiWitness> classify(const std::vector<Edge>& edges) {
  std::map<std::size_t, std::vector<std::size_t>> nbrs;
  for (auto [u, v] : edges) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  for (auto& [v, ns] : nbrs) std::sort(ns.begin(), ns.end());

  std::vector<std::size_t> branch;
  for (const auto& [v, ns] : nbrs)
    if (ns.size() >= 3) branch.push_back(v);
  const std::set<std::size_t> branch_set(branch.begin(), branch.end());

  // Trace each path leaving a branch vertex until it reaches another branch vertex.
  std::vector<std::vector<std::size_t>> paths;
  std::map<std::size_t, std::set<std::size_t>> branch_adj;
  for (auto b : branch) {
    for (auto first : nbrs[b]) {
      std::vector<std::size_t> path{b};
      std::size_t prev = b;
      std::size_t cur = first;
      while (!branch_set.contains(cur)) {
        if (nbrs[cur].size() != 2) return std::nullopt;
        path.push_back(cur);
        const auto next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
        prev = cur;
        cur = next;
      }
      path.push_back(cur);
      if (b < cur) {
        paths.push_back(path);
        branch_adj[b].insert(cur);
        branch_adj[cur].insert(b);
      }
    }
  }

  KuratowskiWitness w;
  if (branch.size() == 5 && paths.size() == 10) {
    w.kind = KuratowskiWitness::Kind::K5;
    w.branch = branch;
  } else if (branch.size() == 6 && paths.size() == 9) {
    w.kind = KuratowskiWitness::Kind::K33;
    // The side containing the least branch vertex comes first.
    std::vector<std::size_t> left{branch.front()};
    std::vector<std::size_t> right(branch_adj[branch.front()].begin(), branch_adj[branch.front()].end());
    for (auto b : branch)
      if (b != branch.front() && std::find(right.begin(), right.end(), b) == right.end()) left.push_back(b);
    if (left.size() != 3 || right.size() != 3) return std::nullopt;
    w.branch = left;
    w.branch.insert(w.branch.end(), right.begin(), right.end());
  } else {
    return std::nullopt;
  }
  std::sort(paths.begin(), paths.end());
  w.paths = std::move(paths);
  return w;
}

}  // namespace

Gated<PlanarityResult> is_planar(const LabeledGraph& g, std::size_t gate) {
  const auto n = g.vertex_count();
  if (n > gate) return Skipped{"is_planar", n, gate};
  const auto edges = g.edges();
  PlanarityResult result;
  // Euler bound prune: a planar graph on n >= 3 vertices has at most 3n - 6 edges.
  const bool too_dense = n >= 3 && edges.size() > 3 * n - 6;
  if (!too_dense && (n < 5 || edges.size() < 9 || planar_edges(n, edges))) return result;

  result.planar = false;
  result.witness = classify(minimize(n, kuratowski_edges(n, edges)));
  return result;
}

bool validate_kuratowski_witness(const LabeledGraph& g, const KuratowskiWitness& w) {
  const bool k5 = w.kind == KuratowskiWitness::Kind::K5;
  const std::size_t nb = k5 ? 5 : 6;
  if (w.branch.size() != nb) return false;
  const std::set<std::size_t> branch(w.branch.begin(), w.branch.end());
  if (branch.size() != nb) return false;

  std::set<std::pair<std::size_t, std::size_t>> required;
  if (k5) {
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        required.emplace(std::min(w.branch[i], w.branch[j]), std::max(w.branch[i], w.branch[j]));
  } else {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 3; j < 6; ++j)
        required.emplace(std::min(w.branch[i], w.branch[j]), std::max(w.branch[i], w.branch[j]));
  }
  if (w.paths.size() != required.size()) return false;

  std::set<std::size_t> interior_used;
  std::set<std::pair<std::size_t, std::size_t>> covered;
  for (const auto& p : w.paths) {
    if (p.size() < 2) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] >= g.vertex_count() || p[i + 1] >= g.vertex_count() || !g.adjacent(p[i], p[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (branch.contains(p[i]) || !interior_used.insert(p[i]).second) return false;
    }
    covered.emplace(std::min(p.front(), p.back()), std::max(p.front(), p.back()));
  }
  return covered == required;
}

}  // namespace eqg
