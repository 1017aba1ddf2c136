#include <algorithm>
#include <atomic>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "eqg/errors.hpp"
#include "eqg/families.hpp"
#include "eqg/verifier.hpp"

namespace eqg {

namespace {

struct BaseEntry {
  std::string spec;
  std::size_t order;
};

std::vector<BaseEntry> base_entries(std::size_t max_order) {
  std::vector<BaseEntry> out;
  for (std::size_t n = 1; n <= max_order; ++n) out.push_back({"cyclic:" + std::to_string(n), n});
  for (std::size_t n = 3; 2 * n <= max_order; ++n) out.push_back({"dihedral:" + std::to_string(n), 2 * n});
  for (std::size_t n = 2; 4 * n <= max_order; ++n) out.push_back({"dicyclic:" + std::to_string(n), 4 * n});
  if (6 <= max_order) out.push_back({"symmetric:3", 6});
  if (24 <= max_order) out.push_back({"symmetric:4", 24});
  for (std::size_t p : {2u, 3u}) {
    std::size_t order = p * p;
    for (std::size_t k = 2; order <= max_order; ++k, order *= p)
      out.push_back({"elab:" + std::to_string(p) + "^" + std::to_string(k), order});
  }
  return out;
}

}  // namespace

std::vector<std::string> default_catalog_specs(std::size_t max_order) {
  if (max_order > kMaxCatalogOrder)
    throw BoundError("catalog max order " + std::to_string(max_order) + " exceeds " + std::to_string(kMaxCatalogOrder));
  const auto base = base_entries(max_order);
  std::vector<std::string> out;
  for (const auto& b : base) out.push_back(b.spec);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[i].order == 1 || base[j].order == 1) continue;
      if (base[i].order * base[j].order > max_order) continue;
      out.push_back(base[i].spec + " x " + base[j].spec);
    }
  return out;
}

CatalogEntry catalog_entry(const std::string& spec, const std::vector<Subgroup>& subgroups) {
  auto group = make_group(spec);
  std::vector<Subgroup> chosen = subgroups;
  if (chosen.empty()) {
    for (auto& h : normal_subgroups(group))
      if (h.size() < group.order()) chosen.push_back(std::move(h));
  }
  return CatalogEntry{spec, std::move(group), std::move(chosen)};
}

std::vector<CatalogEntry> default_catalog(std::size_t max_order) {
  std::vector<CatalogEntry> out;
  for (const auto& spec : default_catalog_specs(max_order)) out.push_back(catalog_entry(spec));
  return out;
}

bool Report::must_pass_failed() const {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const ClaimVerdict& v) {
    return v.verdict == Verdict::Fails && find_claim(v.claim).kind == ClaimKind::MustPass;
  });
}

Report sweep(const std::vector<CatalogEntry>& catalog, const SweepOptions& options) {
  for (const auto& id : options.claims) find_claim(id);

  struct Task {
    std::size_t entry;
    std::size_t subgroup;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = 0; j < catalog[i].subgroups.size(); ++j) tasks.push_back({i, j});

  std::vector<std::vector<ClaimVerdict>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const auto& entry = catalog[tasks[t].entry];
      const auto& kernel = entry.subgroups[tasks[t].subgroup];
      try {
        const Instance in(entry.spec, entry.group, kernel);
        for (const auto& id : options.claims) {
          try {
            results[t].push_back(check_claim(id, in, options.gates));
          } catch (const Error& e) {
            ClaimVerdict v;
            v.claim = id;
            v.group = entry.spec;
            v.subgroup = kernel.members;
            v.verdict = Verdict::Skipped;
            v.witness = nlohmann::ordered_json{{"reason", e.what()}};
            results[t].push_back(std::move(v));
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };

  const auto threads = std::max<std::size_t>(1, std::min(options.parallelism, tasks.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  Report report;
  for (auto& r : results)
    for (auto& v : r) report.verdicts.push_back(std::move(v));
  // Tasks are already in (catalog, subgroup) order; a stable sort by claim finishes the ordering.
  std::stable_sort(report.verdicts.begin(), report.verdicts.end(),
                   [](const ClaimVerdict& a, const ClaimVerdict& b) { return a.claim < b.claim; });
  for (const auto& id : options.claims) report.summary[id];
  for (const auto& v : report.verdicts) {
    auto& c = report.summary[v.claim];
    switch (v.verdict) {
      case Verdict::Holds: ++c.holds; break;
      case Verdict::Fails: ++c.fails; break;
      case Verdict::Skipped: ++c.skipped; break;
      case Verdict::Inapplicable: ++c.inapplicable; break;
    }
  }
  return report;
}

nlohmann::ordered_json verdict_to_json(const ClaimVerdict& v, bool timings) {
  nlohmann::ordered_json out;
  out["claim"] = v.claim;
  out["group"] = v.group;
  out["subgroup"] = v.subgroup;
  out["verdict"] = std::string(to_string(v.verdict));
  out["witness"] = v.witness;
  out["ms"] = timings ? nlohmann::ordered_json(static_cast<double>(v.elapsed.count()) / 1000.0) : nlohmann::ordered_json(nullptr);
  return out;
}

std::string to_jsonl(const Report& report, bool timings) {
  std::string out;
  for (const auto& v : report.verdicts) {
    out += verdict_to_json(v, timings).dump();
    out += '\n';
  }
  return out;
}

std::string summary_table(const Report& report) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "claim" << std::setw(13) << "kind" << std::right << std::setw(7) << "holds"
     << std::setw(7) << "fails" << std::setw(9) << "skipped" << std::setw(14) << "inapplicable" << '\n';
  for (const auto& [id, c] : report.summary) {
    const auto kind = find_claim(id).kind == ClaimKind::MustPass ? "must-pass" : "adjudicated";
    os << std::left << std::setw(6) << id << std::setw(13) << kind << std::right << std::setw(7) << c.holds
       << std::setw(7) << c.fails << std::setw(9) << c.skipped << std::setw(14) << c.inapplicable << '\n';
  }
  return os.str();
}

}  // namespace eqg
