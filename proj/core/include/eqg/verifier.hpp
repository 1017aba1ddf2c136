#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqg/algorithms.hpp"
#include "eqg/enhanced.hpp"
#include "eqg/group.hpp"

namespace eqg {

enum class ClaimKind { MustPass, Adjudicated };

struct Claim {
  std::string id;  // "C01" .. "C22"
  ClaimKind kind = ClaimKind::MustPass;
  std::string description;
};

/// The fixed registry of 22 claims, in id order.
const std::vector<Claim>& claim_registry();
/// Throws SpecError for an unknown id.
const Claim& find_claim(std::string_view id);
/// "all", "must-pass", "adjudicated" or a comma list of ids. Throws SpecError.
std::vector<std::string> select_claims(std::string_view selector);

enum class Verdict { Holds, Fails, Skipped, Inapplicable };
std::string_view to_string(Verdict v);

struct ClaimVerdict {
  std::string claim;
  std::string group;
  std::vector<Element> subgroup;
  Verdict verdict = Verdict::Holds;
  /// Structured counterexample when the verdict is fails; some claims also
  /// attach evidence to other verdicts. Null when absent.
  nlohmann::ordered_json witness;
  std::chrono::microseconds elapsed{0};
};

/// Size gates for the exact algorithms the claims rely on.
struct Gates {
  std::size_t clique = kCliqueGate;
  /// Raised above the graph-level default so every quotient of order <= 24 is decided.
  std::size_t hamiltonian = 24;
  std::size_t circumference = kCircumferenceGate;
  std::size_t planarity = kPlanarityGate;
};

/// One (G, H) pair with every graph the claims need, built once.
class Instance {
 public:
  /// H must be normal and proper. Throws InvariantError / std::invalid_argument.
  Instance(std::string spec, FiniteGroup group, Subgroup kernel);

  const std::string& spec() const { return spec_; }
  const FiniteGroup& group() const { return quotient_.parent(); }
  const Subgroup& kernel() const { return quotient_.kernel(); }
  const QuotientGroup& quotient() const { return quotient_; }
  /// 𝒢_H(G)
  const LabeledGraph& quotient_graph() const { return quotient_graph_; }
  /// 𝒢(G/H), vertex i = coset i
  const LabeledGraph& quotient_power_graph() const { return quotient_power_graph_; }
  /// 𝒢*_H(G)
  const LabeledGraph& deleted_quotient_graph() const { return deleted_quotient_graph_; }
  /// 𝒢(G)
  const LabeledGraph& power_graph() const { return power_graph_; }

 private:
  std::string spec_;
  QuotientGroup quotient_;
  LabeledGraph quotient_graph_;
  LabeledGraph quotient_power_graph_;
  LabeledGraph deleted_quotient_graph_;
  LabeledGraph power_graph_;
};

ClaimVerdict check_claim(std::string_view claim_id, const Instance& instance, const Gates& gates = {});

/// Re-evaluates the defining predicate on the witness of a fails verdict and
/// reports whether the violation is reproduced. Works from freshly built graphs.
bool recheck_witness(const ClaimVerdict& verdict, const FiniteGroup& group, const Subgroup& kernel,
                     const Gates& gates = {});

/// Cone check of 𝒢_{H×{0}}(G × Z_n): every (e, a) with gcd(a, n) = 1.
/// Returns the witness-style record: {"n", "cone_elements", "missing"}.
nlohmann::ordered_json check_cone_product(const FiniteGroup& group, const Subgroup& kernel, std::size_t n);

struct CatalogEntry {
  std::string spec;
  FiniteGroup group;
  std::vector<Subgroup> subgroups;  // proper normal subgroups
};

inline constexpr std::size_t kMaxCatalogOrder = 64;

/// Group specs of the default catalog, in catalog order. Throws BoundError above 64.
std::vector<std::string> default_catalog_specs(std::size_t max_order);
std::vector<CatalogEntry> default_catalog(std::size_t max_order);
/// A catalog entry for one spec and either all proper normal subgroups or the given one.
CatalogEntry catalog_entry(const std::string& spec, const std::vector<Subgroup>& subgroups = {});

struct ClaimCounts {
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t skipped = 0;
  std::size_t inapplicable = 0;
};

struct Report {
  std::vector<ClaimVerdict> verdicts;  // sorted by (claim, catalog position, subgroup)
  std::map<std::string, ClaimCounts> summary;
  bool must_pass_failed() const;
};

struct SweepOptions {
  std::vector<std::string> claims;
  std::size_t parallelism = 1;
  Gates gates;
};

Report sweep(const std::vector<CatalogEntry>& catalog, const SweepOptions& options);

nlohmann::ordered_json verdict_to_json(const ClaimVerdict& v, bool timings = false);
/// Line-delimited JSON, one record per verdict.
std::string to_jsonl(const Report& report, bool timings = false);
std::string summary_table(const Report& report);

}  // namespace eqg
