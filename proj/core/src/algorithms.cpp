#include "eqg/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace eqg {

namespace {

using Mask = std::uint64_t;

// Bitmask algorithms cannot go past 64 vertices whatever the caller's gate says.
constexpr std::size_t kMaskCap = 64;
constexpr std::size_t kCircumferenceCap = 25;

Mask bit(std::size_t v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const LabeledGraph& g) {
  std::vector<Mask> a(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) g.neighbors(v).for_each([&](Element u) { a[v] |= bit(u); });
  return a;
}

std::size_t lowest(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

Skipped skip(const char* name, const LabeledGraph& g, std::size_t gate) { return Skipped{name, g.vertex_count(), gate}; }

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::vector<std::vector<std::size_t>> connected_components(const LabeledGraph& g) {
  const auto n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      comp.push_back(v);
      g.neighbors(v).for_each([&](Element u) {
        if (!seen[u]) {
          seen[u] = true;
          q.push(u);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const LabeledGraph& g) { return connected_components(g).size() <= 1; }

GraphProfile profile(const LabeledGraph& g) {
  const auto n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("profile requires at least one vertex");
  GraphProfile p;
  p.degree_sequence.resize(n);
  for (std::size_t v = 0; v < n; ++v) p.degree_sequence[v] = g.degree(v);
  p.connected = is_connected(g);
  p.complete = g.edge_count() == n * (n - 1) / 2;
  if (std::all_of(p.degree_sequence.begin(), p.degree_sequence.end(), [&](auto d) { return d == p.degree_sequence[0]; }))
    p.regular_degree = p.degree_sequence[0];

  // Two-coloring by breadth-first layering.
  std::vector<int> color(n, -1);
  p.bipartite = true;
  for (std::size_t s = 0; s < n && p.bipartite; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty() && p.bipartite) {
      const auto v = q.front();
      q.pop();
      g.neighbors(v).for_each([&](Element u) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          p.bipartite = false;
        }
      });
    }
  }

  p.tree = p.connected && g.edge_count() + 1 == n;
  p.star = p.tree && n >= 2 &&
           std::any_of(p.degree_sequence.begin(), p.degree_sequence.end(), [&](auto d) { return d == n - 1; });
  p.eulerian =
      p.connected && std::all_of(p.degree_sequence.begin(), p.degree_sequence.end(), [](auto d) { return d % 2 == 0; });
  return p;
}

std::optional<std::vector<std::size_t>> euler_circuit(const LabeledGraph& g) {
  if (g.vertex_count() == 0 || !profile(g).eulerian) return std::nullopt;
  const auto n = g.vertex_count();

  // Hierholzer: follow unused edges until stuck, splicing sub-circuits on backtrack.
  std::vector<std::vector<std::size_t>> nbrs(n);
  for (std::size_t v = 0; v < n; ++v) g.neighbors(v).for_each([&](Element u) { nbrs[v].push_back(u); });
  std::vector<std::size_t> next(n, 0);
  std::vector<ElementSet> used(n, ElementSet(n));

  std::vector<std::size_t> stack{0};
  std::vector<std::size_t> circuit;
  while (!stack.empty()) {
    const auto v = stack.back();
    while (next[v] < nbrs[v].size() && used[v].contains(nbrs[v][next[v]])) ++next[v];
    if (next[v] == nbrs[v].size()) {
      circuit.push_back(v);
      stack.pop_back();
      continue;
    }
    const auto u = nbrs[v][next[v]];
    used[v].insert(u);
    used[u].insert(v);
    stack.push_back(u);
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

bool has_cycle(const LabeledGraph& g) {
  DisjointSets ds(g.vertex_count());
  for (auto [u, v] : g.edges())
    if (!ds.unite(u, v)) return true;
  return false;
}

namespace {

// Maximum clique search: vertices are ordered by greedy color classes and
// a branch is cut when |current| + colors left cannot beat the incumbent.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  std::vector<std::size_t> run() {
    const auto n = adj_.size();
    Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
    if (n > 0) {
      best_ = {0};
    }
    expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void color_sort(Mask candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& bounds) const {
    std::size_t color = 0;
    Mask uncolored = candidates;
    while (uncolored != 0) {
      ++color;
      Mask q = uncolored;
      while (q != 0) {
        const auto v = lowest(q);
        q &= ~bit(v);
        q &= ~adj_[v];
        uncolored &= ~bit(v);
        order.push_back(v);
        bounds.push_back(color);
      }
    }
  }

  void expand(Mask candidates) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> bounds;
    color_sort(candidates, order, bounds);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bounds[i] <= best_.size()) return;
      const auto v = order[i];
      current_.push_back(v);
      const Mask next = candidates & adj_[v];
      if (next == 0) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      candidates &= ~bit(v);
    }
  }

  std::vector<Mask> adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

Gated<std::vector<std::size_t>> maximum_clique(const LabeledGraph& g, std::size_t gate) {
  const auto limit = std::min(gate, kMaskCap);
  if (g.vertex_count() > limit) return skip("clique_number", g, limit);
  return CliqueSearch(adjacency_masks(g)).run();
}

Gated<std::size_t> clique_number(const LabeledGraph& g, std::size_t gate) {
  auto c = maximum_clique(g, gate);
  if (c.skipped()) return c.skip_info();
  return c->size();
}

namespace {

struct StateKey {
  Mask visited;
  std::size_t end;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};
struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const { return std::hash<Mask>{}(k.visited * 31 + k.end); }
};

class HamiltonSearch {
 public:
  explicit HamiltonSearch(std::vector<Mask> adj) : adj_(std::move(adj)), n_(adj_.size()) {
    full_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
  }

  std::optional<std::vector<std::size_t>> run() {
    path_ = {0};
    if (!extend(0, bit(0))) return std::nullopt;
    path_.push_back(0);
    return path_;
  }

 private:
  bool extend(std::size_t end, Mask visited) {
    if (visited == full_) return (adj_[end] & bit(0)) != 0;
    const StateKey key{visited, end};
    if (failed_.contains(key)) return false;

    // Degree pruning: every unvisited vertex still needs two usable neighbors.
    const Mask open = full_ & ~visited;
    const Mask usable = open | bit(end) | bit(0);
    for (Mask m = open; m != 0; m &= m - 1) {
      const auto u = lowest(m);
      if (std::popcount(adj_[u] & usable) < 2) {
        failed_.insert(key);
        return false;
      }
    }

    for (Mask m = adj_[end] & open; m != 0; m &= m - 1) {
      const auto v = lowest(m);
      path_.push_back(v);
      if (extend(v, visited | bit(v))) return true;
      path_.pop_back();
    }
    failed_.insert(key);
    return false;
  }

  std::vector<Mask> adj_;
  std::size_t n_;
  Mask full_ = 0;
  std::vector<std::size_t> path_;
  std::unordered_set<StateKey, StateKeyHash> failed_;
};

}  // namespace

Gated<std::optional<std::vector<std::size_t>>> hamiltonian_cycle(const LabeledGraph& g, std::size_t gate) {
  const auto limit = std::min(gate, kMaskCap);
  if (g.vertex_count() > limit) return skip("hamiltonian_cycle", g, limit);
  const auto n = g.vertex_count();
  using Result = std::optional<std::vector<std::size_t>>;
  if (n < 3) return Result{};
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) < 2) return Result{};
  if (!is_connected(g)) return Result{};
  return HamiltonSearch(adjacency_masks(g)).run();
}

bool is_hamiltonian_cycle(const LabeledGraph& g, const std::vector<std::size_t>& cycle) {
  const auto n = g.vertex_count();
  if (n < 3 || cycle.size() != n + 1 || cycle.front() != cycle.back()) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (cycle[i] >= n || seen[cycle[i]]) return false;
    seen[cycle[i]] = true;
    if (!g.adjacent(cycle[i], cycle[i + 1])) return false;
  }
  return true;
}

Gated<std::size_t> circumference(const LabeledGraph& g, std::size_t gate) {
  const auto limit = std::min(gate, kCircumferenceCap);
  const auto n = g.vertex_count();
  if (n > limit) return skip("circumference", g, limit);
  const auto adj = adjacency_masks(g);

  // For each start s (the least vertex of the cycle), explore every simple path
  // through vertices > s; paths with the same vertex set and endpoint are merged.
  std::size_t best = 0;
  for (std::size_t s = 0; s < n && n - s > best; ++s) {
    const auto m = n - s - 1;
    if (m < 2) break;
    const auto local = [&](Mask global) { return static_cast<std::uint32_t>(global >> (s + 1)); };
    std::vector<std::uint32_t> ends(std::size_t{1} << m, 0);
    const auto start_nbrs = local(adj[s]);
    for (std::uint32_t b = start_nbrs; b != 0; b &= b - 1) ends[b & (~b + 1)] |= b & (~b + 1);
    for (std::size_t mask = 1; mask < ends.size(); ++mask) {
      const auto e = ends[mask];
      if (e == 0) continue;
      const auto count = static_cast<std::size_t>(std::popcount(mask));
      if (count >= 2 && (e & start_nbrs) != 0) best = std::max(best, count + 1);
      for (std::uint32_t b = e; b != 0; b &= b - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(b)) + s + 1;
        for (std::uint32_t nb = local(adj[v]) & ~static_cast<std::uint32_t>(mask); nb != 0; nb &= nb - 1) {
          const auto low = nb & (~nb + 1);
          ends[mask | low] |= low;
        }
      }
    }
    if (best == n) break;
  }
  return best;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const LabeledGraph& g, std::size_t k) : g_(g), k_(k), color_(g.vertex_count(), kNone) {}

  std::optional<std::vector<std::size_t>> run() {
    if (!assign(0, 0)) return std::nullopt;
    return color_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool assign(std::size_t v, std::size_t used) {
    if (v == color_.size()) return true;
    // Colors above `used` are interchangeable; only the first fresh one is tried.
    const auto limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      bool clash = false;
      g_.neighbors(v).for_each([&](Element u) {
        if (u < v && color_[u] == c) clash = true;
      });
      if (clash) continue;
      color_[v] = c;
      if (assign(v + 1, std::max(used, c + 1))) return true;
    }
    color_[v] = kNone;
    return false;
  }

  const LabeledGraph& g_;
  std::size_t k_;
  std::vector<std::size_t> color_;
};

}  // namespace

Gated<std::optional<std::vector<std::size_t>>> k_coloring(const LabeledGraph& g, std::size_t k, std::size_t gate) {
  if (g.vertex_count() > gate) return skip("k_coloring", g, gate);
  using Result = std::optional<std::vector<std::size_t>>;
  if (k == 0) return g.vertex_count() == 0 ? Result{std::vector<std::size_t>{}} : Result{};
  return ColoringSearch(g, k).run();
}

std::vector<std::size_t> cone_vertices(const LabeledGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) + 1 == g.vertex_count()) out.push_back(v);
  return out;
}

namespace {

bool is_clique(const LabeledGraph& g, const std::vector<std::size_t>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace

bool is_apex_double_clique(const LabeledGraph& g, std::size_t a, std::size_t b) {
  if (g.vertex_count() != a + b + 1)
    throw std::invalid_argument("apex double clique requires |V| = a + b + 1");
  std::vector<std::size_t> want;
  if (a > 0) want.push_back(a);
  if (b > 0) want.push_back(b);
  std::sort(want.begin(), want.end());
  for (auto apex : cone_vertices(g)) {
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (v != apex) rest.push_back(v);
    const auto sub = induced(g, rest);
    const auto comps = connected_components(sub);
    std::vector<std::size_t> sizes;
    bool cliques = true;
    for (const auto& c : comps) {
      sizes.push_back(c.size());
      cliques = cliques && is_clique(sub, c);
    }
    std::sort(sizes.begin(), sizes.end());
    if (cliques && sizes == want) return true;
  }
  return false;
}

LabeledGraph delete_vertex(const LabeledGraph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
  std::vector<std::size_t> keep;
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    if (u != v) keep.push_back(u);
  return induced(g, std::move(keep));
}

LabeledGraph induced(const LabeledGraph& g, std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<Vertex> vs;
  for (auto v : subset) {
    if (v >= g.vertex_count()) throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
    vs.push_back(g.vertex(v));
  }
  LabeledGraph out(std::move(vs));
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (g.adjacent(subset[i], subset[j])) out.add_edge(i, j);
  return out;
}

}  // namespace eqg
