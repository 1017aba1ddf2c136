#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eqg/element_set.hpp"

namespace eqg {

/// A finite group given by its complete multiplication table.
///
/// Element 0 is the identity. The constructor checks the Latin-square,
/// identity and associativity invariants and throws InvariantError naming the
/// first violation. Objects are immutable after construction.
class FiniteGroup {
 public:
  /// `table` is row-major: table[i * n + j] = i * j.
  FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<Element> table);

  /// Skips the O(n^3) associativity check; for tables derived from already
  /// validated groups (direct products, quotients, built-in families).
  struct Trusted {};
  FiniteGroup(Trusted, std::string name, std::vector<std::string> labels, std::vector<Element> table);

  /// Re-runs every table invariant check; throws InvariantError.
  void validate() const;

  const std::string& name() const { return name_; }
  std::size_t order() const { return n_; }
  const std::string& label(Element g) const;
  const std::vector<std::string>& labels() const { return labels_; }

  Element multiply(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element power(Element g, long long k) const;
  /// Smallest k >= 1 with g^k = e. Throws std::out_of_range on a bad index.
  std::size_t element_order(Element g) const;

  bool is_abelian() const;
  std::vector<std::vector<Element>> table_rows() const;

  /// Named element subsets a family constructor registers (e.g. "alternating").
  const std::map<std::string, std::vector<Element>>& anchors() const { return anchors_; }
  FiniteGroup with_anchor(std::string anchor, std::vector<Element> members) const;
  FiniteGroup renamed(std::string name) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  void check_index(Element g) const;

  std::string name_;
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> orders_;
  std::map<std::string, std::vector<Element>> anchors_;
};

/// Subgroup of some FiniteGroup; members are strictly increasing.
struct Subgroup {
  std::vector<Element> members;
  bool normal = false;

  std::size_t size() const { return members.size(); }
  bool contains(Element g) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// Closure of `generators` under the group operation.
ElementSet generate(const FiniteGroup& group, const ElementSet& generators);

/// Validates that `members` is a subgroup (and sets the normal flag). Throws InvariantError.
Subgroup make_subgroup(const FiniteGroup& group, std::vector<Element> members);
bool is_normal(const FiniteGroup& group, const ElementSet& members);

Subgroup cyclic_subgroup(const FiniteGroup& group, Element g);
/// Elements x of <g> with <x> = <g>.
std::vector<Element> generators_of(const FiniteGroup& group, Element g);

inline constexpr std::size_t kDefaultSubgroupBound = 64;

/// Every subgroup, sorted by (size, members). Throws BoundError if |G| > bound.
std::vector<Subgroup> all_subgroups(const FiniteGroup& group, std::size_t bound = kDefaultSubgroupBound);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& group, std::size_t bound = kDefaultSubgroupBound);

Subgroup center(const FiniteGroup& group);
Subgroup trivial_subgroup(const FiniteGroup& group);

/// The maximal cyclic subgroups, in ascending (size, members) order.
std::vector<ElementSet> maximal_cyclic_subgroups(const FiniteGroup& group);

/// Quotient G/H. Coset 0 is H; the remaining cosets are ordered by least member.
class QuotientGroup {
 public:
  /// Throws InvariantError (naming a pair g, h with g h g^-1 outside H) if H is not normal.
  QuotientGroup(FiniteGroup parent, Subgroup kernel);

  const FiniteGroup& parent() const { return parent_; }
  const Subgroup& kernel() const { return kernel_; }
  const FiniteGroup& group() const { return table_; }
  std::size_t index() const { return cosets_.size(); }
  const std::vector<std::vector<Element>>& cosets() const { return cosets_; }
  std::size_t coset_of(Element g) const { return coset_of_.at(g); }

 private:
  FiniteGroup parent_;
  Subgroup kernel_;
  std::vector<std::vector<Element>> cosets_;
  std::vector<std::size_t> coset_of_;
  FiniteGroup table_;
};

QuotientGroup quotient(const FiniteGroup& group, const Subgroup& kernel);

struct OrderSpectrum {
  std::set<std::size_t> pi_e;  // element orders
  std::set<std::size_t> pi;    // primes dividing some element order
  std::set<std::size_t> mu;    // maximal element orders under divisibility
};

OrderSpectrum order_spectrum(const FiniteGroup& group);
inline OrderSpectrum order_spectrum(const QuotientGroup& q) { return order_spectrum(q.group()); }

bool is_prime(std::size_t p);
std::vector<std::size_t> prime_divisors(std::size_t n);
/// True iff n = p^k for a prime p and k >= 1; sets `prime`.
bool is_prime_power(std::size_t n, std::size_t* prime = nullptr);

/// Throws std::invalid_argument if p is not a prime divisor of |G|.
bool has_cyclic_sylow(const FiniteGroup& group, std::size_t p);

/// All prime-order elements generate the same subgroup. Throws std::invalid_argument on the trivial group.
bool has_unique_minimal_subgroup(const FiniteGroup& group);
inline bool has_unique_minimal_subgroup(const QuotientGroup& q) { return has_unique_minimal_subgroup(q.group()); }

/// Noncyclic 2-group of order >= 8 with a unique minimal subgroup.
bool is_generalized_quaternion(const FiniteGroup& group);
inline bool is_generalized_quaternion(const QuotientGroup& q) { return is_generalized_quaternion(q.group()); }

bool is_cyclic(const FiniteGroup& group);
inline bool is_cyclic(const QuotientGroup& q) { return is_cyclic(q.group()); }

/// Every non-identity element has order 2 (and the group is nontrivial).
bool is_elementary_abelian_2group(const FiniteGroup& group);

}  // namespace eqg
