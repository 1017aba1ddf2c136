#include "eqg/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "eqg/errors.hpp"

namespace eqg {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

void check_shape(std::size_t n, const std::vector<std::string>& labels, const std::vector<Element>& table) {
  if (n == 0) throw InvariantError("group table is empty");
  if (labels.size() != n) throw InvariantError("label count does not match the table size");
  for (Element v : table)
    if (v >= n) throw InvariantError("table entry " + std::to_string(v) + " out of range");
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<Element> table)
    : FiniteGroup(Trusted{}, std::move(name), std::move(labels), std::move(table)) {
  validate();
}

FiniteGroup::FiniteGroup(Trusted, std::string name, std::vector<std::string> labels, std::vector<Element> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  std::size_t n = 0;
  while (n * n < table_.size()) ++n;
  if (n * n != table_.size()) throw InvariantError("table is not square");
  n_ = n;
  check_shape(n_, labels_, table_);
  for (std::size_t j = 0; j < n_; ++j)
    if (table_[j] != j || table_[j * n_] != j)
      throw InvariantError("index 0 is not the identity (violated at element " + std::to_string(j) + ")");

  inverse_.assign(n_, 0);
  std::vector<bool> found(n_, false);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (table_[i * n_ + j] == kIdentity) {
        inverse_[i] = static_cast<Element>(j);
        found[i] = true;
        break;
      }
    }
    if (!found[i]) throw InvariantError("element " + std::to_string(i) + " has no inverse");
  }

  orders_.assign(n_, 0);
  for (std::size_t g = 0; g < n_; ++g) {
    Element x = static_cast<Element>(g);
    std::size_t k = 1;
    while (x != kIdentity) {
      x = multiply(x, static_cast<Element>(g));
      if (++k > n_) throw InvariantError("element " + std::to_string(g) + " has no finite order within |G|");
    }
    orders_[g] = k;
  }
}

void FiniteGroup::validate() const {
  check_shape(n_, labels_, table_);
  std::vector<char> seen(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n_; ++j) {
      auto v = table_[i * n_ + j];
      if (seen[v]) throw InvariantError("row " + std::to_string(i) + " repeats entry " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (std::size_t j = 0; j < n_; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n_; ++i) {
      auto v = table_[i * n_ + j];
      if (seen[v]) throw InvariantError("column " + std::to_string(j) + " repeats entry " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (std::size_t j = 0; j < n_; ++j)
    if (table_[j] != j || table_[j * n_] != j)
      throw InvariantError("index 0 is not the identity (violated at element " + std::to_string(j) + ")");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const auto ij = table_[i * n_ + j];
      for (std::size_t k = 0; k < n_; ++k)
        if (table_[ij * n_ + k] != table_[i * n_ + table_[j * n_ + k]])
          throw InvariantError("associativity fails at triple " + triple(i, j, k));
    }
}

const std::string& FiniteGroup::label(Element g) const {
  check_index(g);
  return labels_[g];
}

void FiniteGroup::check_index(Element g) const {
  if (g >= n_) throw std::out_of_range("element index " + std::to_string(g) + " out of range for order " + std::to_string(n_));
}

Element FiniteGroup::power(Element g, long long k) const {
  check_index(g);
  const auto ord = static_cast<long long>(orders_[g]);
  k %= ord;
  if (k < 0) k += ord;
  Element x = kIdentity;
  for (long long i = 0; i < k; ++i) x = multiply(x, g);
  return x;
}

std::size_t FiniteGroup::element_order(Element g) const {
  check_index(g);
  return orders_[g];
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (table_[i * n_ + j] != table_[j * n_ + i]) return false;
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::table_rows() const {
  std::vector<std::vector<Element>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(table_.begin() + static_cast<long>(i * n_), table_.begin() + static_cast<long>((i + 1) * n_));
  return rows;
}

FiniteGroup FiniteGroup::with_anchor(std::string anchor, std::vector<Element> members) const {
  FiniteGroup copy = *this;
  copy.anchors_[std::move(anchor)] = std::move(members);
  return copy;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool Subgroup::contains(Element g) const { return std::binary_search(members.begin(), members.end(), g); }

ElementSet generate(const FiniteGroup& group, const ElementSet& generators) {
  const auto n = group.order();
  ElementSet closed(n);
  closed.insert(kIdentity);
  std::vector<Element> frontier{kIdentity};
  const auto gens = generators.members();
  // In a finite group, closure under right multiplication by generators gives the subgroup.
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    for (Element g : gens) {
      const Element y = group.multiply(x, g);
      if (!closed.contains(y)) {
        closed.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return closed;
}

bool is_normal(const FiniteGroup& group, const ElementSet& members) {
  const auto hs = members.members();
  for (Element g = 0; g < group.order(); ++g)
    for (Element h : hs)
      if (!members.contains(group.multiply(group.multiply(g, h), group.inverse(g)))) return false;
  return true;
}

Subgroup make_subgroup(const FiniteGroup& group, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Element m : members)
    if (m >= group.order()) throw InvariantError("subgroup member " + std::to_string(m) + " out of range");
  const auto set = ElementSet::from(group.order(), members);
  if (!set.contains(kIdentity)) throw InvariantError("subgroup does not contain the identity");
  for (Element a : members) {
    if (!set.contains(group.inverse(a)))
      throw InvariantError("subgroup not closed under inverses at element " + std::to_string(a));
    for (Element b : members)
      if (!set.contains(group.multiply(a, b)))
        throw InvariantError("subgroup not closed: " + std::to_string(a) + " * " + std::to_string(b));
  }
  return Subgroup{std::move(members), is_normal(group, set)};
}

Subgroup cyclic_subgroup(const FiniteGroup& group, Element g) {
  const auto ord = group.element_order(g);
  std::vector<Element> members;
  Element x = kIdentity;
  for (std::size_t k = 0; k < ord; ++k) {
    members.push_back(x);
    x = group.multiply(x, g);
  }
  std::sort(members.begin(), members.end());
  const auto set = ElementSet::from(group.order(), members);
  return Subgroup{std::move(members), is_normal(group, set)};
}

std::vector<Element> generators_of(const FiniteGroup& group, Element g) {
  const auto ord = group.element_order(g);
  std::vector<Element> out;
  for (std::size_t k = 1; k <= ord; ++k)
    if (std::gcd(k, ord) == 1) out.push_back(group.power(g, static_cast<long long>(k)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& group, std::size_t bound) {
  const auto n = group.order();
  if (n > bound)
    throw BoundError("subgroup enumeration bound exceeded: |G| = " + std::to_string(n) + " > " + std::to_string(bound));

  std::unordered_set<ElementSet, ElementSetHash> cyclic_set;
  for (Element g = 0; g < n; ++g) cyclic_set.insert(ElementSet::from(n, cyclic_subgroup(group, g).members));
  std::vector<ElementSet> cyclics(cyclic_set.begin(), cyclic_set.end());
  std::sort(cyclics.begin(), cyclics.end());

  std::unordered_set<ElementSet, ElementSetHash> found(cyclics.begin(), cyclics.end());
  std::vector<ElementSet> work(cyclics.begin(), cyclics.end());
  while (!work.empty()) {
    const ElementSet s = work.back();
    work.pop_back();
    for (const auto& c : cyclics) {
      if (c.is_subset_of(s)) continue;
      ElementSet joined = generate(group, s | c);
      if (found.insert(joined).second) work.push_back(std::move(joined));
    }
  }

  std::vector<ElementSet> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Subgroup> out;
  out.reserve(sorted.size());
  for (const auto& s : sorted) out.push_back(Subgroup{s.members(), is_normal(group, s)});
  return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& group, std::size_t bound) {
  auto subs = all_subgroups(group, bound);
  std::erase_if(subs, [](const Subgroup& s) { return !s.normal; });
  return subs;
}

Subgroup center(const FiniteGroup& group) {
  std::vector<Element> members;
  for (Element z = 0; z < group.order(); ++z) {
    bool central = true;
    for (Element g = 0; g < group.order() && central; ++g) central = group.multiply(z, g) == group.multiply(g, z);
    if (central) members.push_back(z);
  }
  return Subgroup{std::move(members), true};
}

Subgroup trivial_subgroup(const FiniteGroup&) { return Subgroup{{kIdentity}, true}; }

std::vector<ElementSet> maximal_cyclic_subgroups(const FiniteGroup& group) {
  const auto n = group.order();
  std::unordered_set<ElementSet, ElementSetHash> uniq;
  for (Element g = 0; g < n; ++g) uniq.insert(ElementSet::from(n, cyclic_subgroup(group, g).members));
  std::vector<ElementSet> all(uniq.begin(), uniq.end());
  std::sort(all.begin(), all.end());
  std::vector<ElementSet> maximal;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool contained = false;
    for (std::size_t j = i + 1; j < all.size() && !contained; ++j)
      contained = all[j].size() > all[i].size() && all[i].is_subset_of(all[j]);
    if (!contained) maximal.push_back(all[i]);
  }
  return maximal;
}

namespace {

FiniteGroup build_quotient_table(const FiniteGroup& parent, const std::vector<std::vector<Element>>& cosets,
                                 const std::vector<std::size_t>& coset_of) {
  const auto k = cosets.size();
  std::vector<Element> table(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = parent.label(cosets[i].front()) + "H";
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = static_cast<Element>(coset_of[parent.multiply(cosets[i].front(), cosets[j].front())]);
  }
  return FiniteGroup(FiniteGroup::Trusted{}, parent.name() + "/H", std::move(labels), std::move(table));
}

}  // namespace

QuotientGroup::QuotientGroup(FiniteGroup parent, Subgroup kernel)
    : parent_(std::move(parent)),
      kernel_(std::move(kernel)),
      table_(FiniteGroup::Trusted{}, "trivial", {"e"}, {0}) {
  const auto n = parent_.order();
  const auto hset = ElementSet::from(n, kernel_.members);
  if (!hset.contains(kIdentity)) throw InvariantError("kernel does not contain the identity");
  for (Element g = 0; g < n; ++g)
    for (Element h : kernel_.members)
      if (!hset.contains(parent_.multiply(parent_.multiply(g, h), parent_.inverse(g))))
        throw InvariantError("subgroup is not normal: g = " + std::to_string(g) + ", h = " + std::to_string(h) +
                             " gives g h g^-1 outside H");
  kernel_.normal = true;

  coset_of_.assign(n, static_cast<std::size_t>(-1));
  for (Element g = 0; g < n; ++g) {
    if (coset_of_[g] != static_cast<std::size_t>(-1)) continue;
    std::vector<Element> coset;
    for (Element h : kernel_.members) coset.push_back(parent_.multiply(g, h));
    std::sort(coset.begin(), coset.end());
    for (Element x : coset) coset_of_[x] = cosets_.size();
    cosets_.push_back(std::move(coset));
  }
  table_ = build_quotient_table(parent_, cosets_, coset_of_);
}

QuotientGroup quotient(const FiniteGroup& group, const Subgroup& kernel) { return QuotientGroup(group, kernel); }

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime_power(std::size_t n, std::size_t* prime) {
  const auto ps = prime_divisors(n);
  if (ps.size() != 1) return false;
  if (prime != nullptr) *prime = ps.front();
  return true;
}

OrderSpectrum order_spectrum(const FiniteGroup& group) {
  OrderSpectrum s;
  for (Element g = 0; g < group.order(); ++g) s.pi_e.insert(group.element_order(g));
  for (auto o : s.pi_e)
    for (auto p : prime_divisors(o)) s.pi.insert(p);
  for (auto o : s.pi_e) {
    bool maximal = true;
    for (auto other : s.pi_e)
      if (other != o && other % o == 0) maximal = false;
    if (maximal) s.mu.insert(o);
  }
  return s;
}

bool has_cyclic_sylow(const FiniteGroup& group, std::size_t p) {
  const auto n = group.order();
  if (!is_prime(p) || n % p != 0)
    throw std::invalid_argument(std::to_string(p) + " is not a prime divisor of " + std::to_string(n));
  std::size_t part = 1;
  for (auto m = n; m % p == 0; m /= p) part *= p;
  for (Element g = 0; g < n; ++g)
    if (group.element_order(g) == part) return true;
  return false;
}

bool has_unique_minimal_subgroup(const FiniteGroup& group) {
  if (group.order() == 1) throw std::invalid_argument("the trivial group has no minimal subgroup");
  std::optional<ElementSet> first;
  for (Element g = 1; g < group.order(); ++g) {
    if (!is_prime(group.element_order(g))) continue;
    auto c = ElementSet::from(group.order(), cyclic_subgroup(group, g).members);
    if (!first)
      first = std::move(c);
    else if (!(c == *first))
      return false;
  }
  return true;
}

bool is_cyclic(const FiniteGroup& group) {
  for (Element g = 0; g < group.order(); ++g)
    if (group.element_order(g) == group.order()) return true;
  return false;
}

bool is_generalized_quaternion(const FiniteGroup& group) {
  const auto n = group.order();
  if (n < 8 || (n & (n - 1)) != 0) return false;
  if (is_cyclic(group)) return false;
  return has_unique_minimal_subgroup(group);
}

bool is_elementary_abelian_2group(const FiniteGroup& group) {
  if (group.order() < 2) return false;
  for (Element g = 1; g < group.order(); ++g)
    if (group.element_order(g) != 2) return false;
  return true;
}

}  // namespace eqg
