#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "eqg/algorithms.hpp"
#include "eqg/enhanced.hpp"
#include "eqg/errors.hpp"
#include "eqg/families.hpp"
#include "eqg/graph_io.hpp"
#include "eqg/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMustPassFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string group;
  std::string subgroup;
  std::string graph = "enhanced-power";
  std::string connection;
  std::string format = "summary";
  std::string out;
  std::string claim;
  std::string claims = "must-pass";
  std::size_t max_order = 24;
  std::size_t parallelism = 1;
  bool timings = false;
  eqg::Gates gates;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw eqg::SpecError("cannot open output file '" + o.out + "'");
  f << text;
}

std::vector<eqg::Element> parse_indices(const std::string& text) {
  std::vector<eqg::Element> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(static_cast<eqg::Element>(std::stoul(token, &used)));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw eqg::SpecError("bad element index '" + token + "'");
    }
  }
  return out;
}

eqg::Subgroup single_subgroup(const eqg::FiniteGroup& g, const std::string& selector) {
  if (selector.empty()) throw eqg::SpecError("--subgroup is required for quotient graphs");
  auto subs = eqg::resolve_subgroups(g, selector);
  if (subs.size() != 1) throw eqg::SpecError("--subgroup must select exactly one subgroup for build");
  return subs.front();
}

std::string summarize(const eqg::LabeledGraph& g) {
  const auto p = eqg::profile(g);
  std::ostringstream os;
  os << "vertices: " << g.vertex_count() << '\n' << "edges: " << g.edge_count() << '\n';
  os << "connected: " << std::boolalpha << p.connected << '\n';
  os << "complete: " << p.complete << '\n';
  os << "bipartite: " << p.bipartite << '\n';
  os << "eulerian: " << p.eulerian << '\n';
  os << "degrees:";
  for (auto d : p.degree_sequence) os << ' ' << d;
  os << '\n';
  const auto omega = eqg::clique_number(g);
  os << "clique_number: " << (omega.skipped() ? std::string("skipped") : std::to_string(*omega)) << '\n';
  const auto cones = eqg::cone_vertices(g);
  os << "cone_vertices:";
  for (auto v : cones) os << ' ' << g.vertex(v).label;
  os << '\n';
  return os.str();
}

int run_build(const Options& o) {
  const auto group = eqg::make_group(o.group);
  eqg::LabeledGraph g = [&] {
    if (o.graph == "enhanced-power") return eqg::enhanced_power_graph(group);
    if (o.graph == "deleted-power") return eqg::deleted(eqg::enhanced_power_graph(group));
    if (o.graph == "enhanced-quotient") return eqg::enhanced_quotient_graph(group, single_subgroup(group, o.subgroup));
    if (o.graph == "deleted-quotient")
      return eqg::deleted(eqg::enhanced_quotient_graph(group, single_subgroup(group, o.subgroup)));
    if (o.graph == "cayley") return eqg::cayley_graph(group, parse_indices(o.connection));
    throw eqg::SpecError("unknown graph kind '" + o.graph + "'");
  }();

  std::string text;
  if (o.format == "dot") {
    text = eqg::to_dot(g, o.graph);
  } else if (o.format == "json") {
    nlohmann::ordered_json meta{{"group", o.group}, {"graph", o.graph}};
    if (!o.subgroup.empty()) meta["subgroup"] = o.subgroup;
    text = eqg::to_json(g, meta).dump(2) + "\n";
  } else {
    text = summarize(g);
  }
  emit(o, text);
  return kExitOk;
}

int run_check(const Options& o) {
  const auto group = eqg::make_group(o.group);
  if (o.subgroup.empty()) throw eqg::SpecError("--subgroup is required");
  const auto& claim = eqg::find_claim(o.claim);
  bool must_pass_failed = false;
  std::string text;
  for (const auto& h : eqg::resolve_subgroups(group, o.subgroup)) {
    if (h.size() == group.order()) throw eqg::SpecError("H must be a proper subgroup");
    if (!h.normal) throw eqg::SpecError("H must be a normal subgroup");
    const eqg::Instance in(o.group, group, h);
    const auto v = eqg::check_claim(claim.id, in, o.gates);
    must_pass_failed = must_pass_failed || (v.verdict == eqg::Verdict::Fails && claim.kind == eqg::ClaimKind::MustPass);
    text += eqg::verdict_to_json(v, o.timings).dump() + "\n";
  }
  emit(o, text);
  return must_pass_failed ? kExitMustPassFailed : kExitOk;
}

int run_sweep(const Options& o) {
  eqg::SweepOptions so;
  so.claims = eqg::select_claims(o.claims);
  so.parallelism = o.parallelism == 0 ? std::max(1u, std::thread::hardware_concurrency()) : o.parallelism;
  so.gates = o.gates;
  std::vector<eqg::CatalogEntry> catalog;
  if (o.group.empty()) {
    catalog = eqg::default_catalog(o.max_order);
  } else {
    const auto group = eqg::make_group(o.group);
    catalog.push_back(eqg::catalog_entry(o.group, o.subgroup.empty() ? std::vector<eqg::Subgroup>{}
                                                                     : eqg::resolve_subgroups(group, o.subgroup)));
  }
  const auto report = eqg::sweep(catalog, so);
  emit(o, eqg::to_jsonl(report, o.timings));
  std::cerr << eqg::summary_table(report);
  return report.must_pass_failed() ? kExitMustPassFailed : kExitOk;
}

int run_catalog(const Options& o) {
  std::ostringstream os;
  for (const auto& e : eqg::default_catalog(o.max_order)) {
    os << e.spec << "\torder=" << e.group.order() << "\tnormal=";
    for (std::size_t i = 0; i < e.subgroups.size(); ++i) {
      os << (i ? ";" : "") << '{';
      for (std::size_t j = 0; j < e.subgroups[i].members.size(); ++j) os << (j ? "," : "") << e.subgroups[i].members[j];
      os << '}';
    }
    os << '\n';
  }
  emit(o, os.str());
  return kExitOk;
}

int run_export_formats(const Options& o) {
  nlohmann::ordered_json doc;
  doc["graph_kinds"] = {"enhanced-power", "enhanced-quotient", "deleted-power", "deleted-quotient", "cayley"};
  doc["build_formats"] = {"dot", "json", "summary"};
  doc["graph_json"] = {{"vertices", "array of vertex labels, index = vertex id"},
                       {"edges", "array of [i, j] with i < j, lexicographically sorted"},
                       {"metadata", "object with group, graph and subgroup"}};
  doc["report_jsonl"] = {{"claim", "claim id"},
                         {"group", "group spec"},
                         {"subgroup", "member element indices of H"},
                         {"verdict", "holds | fails | skipped | inapplicable"},
                         {"witness", "counterexample or evidence object, or null"},
                         {"ms", "elapsed milliseconds with --timings, else null"}};
  doc["group_table_json"] = {{"name", "string"}, {"order", "integer"}, {"labels", "array of strings"},
                             {"table", "order x order array of element indices"}};
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const auto& c : eqg::claim_registry())
    claims.push_back({{"id", c.id},
                      {"kind", c.kind == eqg::ClaimKind::MustPass ? "must-pass" : "adjudicated"},
                      {"description", c.description}});
  doc["claims"] = claims;
  emit(o, doc.dump(2) + "\n");
  return kExitOk;
}

void add_gates(CLI::App* cmd, Options& o) {
  cmd->add_option("--clique-gate", o.gates.clique, "Max vertices for exact clique search")->capture_default_str();
  cmd->add_option("--ham-gate", o.gates.hamiltonian, "Max vertices for Hamiltonian search")->capture_default_str();
  cmd->add_option("--circ-gate", o.gates.circumference, "Max vertices for circumference search")->capture_default_str();
  cmd->add_option("--planar-gate", o.gates.planarity, "Max vertices for planarity testing")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enhanced power and enhanced quotient graphs of finite groups"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "Build a graph and print or export it");
  build->add_option("--group", o.group, "Group spec")->required();
  build->add_option("--subgroup", o.subgroup, "Subgroup selector: index list, center, trivial or an anchor name");
  build->add_option("--graph", o.graph, "Graph kind")
      ->check(CLI::IsMember({"enhanced-power", "enhanced-quotient", "deleted-power", "deleted-quotient", "cayley"}))
      ->capture_default_str();
  build->add_option("--connection", o.connection, "Connection set for cayley, as an index list");
  build->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"dot", "json", "summary"}))
      ->capture_default_str();
  build->add_option("--out", o.out, "Output path (default stdout)");

  auto* check = app.add_subcommand("check", "Check one claim on one (G, H) pair");
  check->add_option("--claim", o.claim, "Claim id, e.g. C08")->required();
  check->add_option("--group", o.group, "Group spec")->required();
  check->add_option("--subgroup", o.subgroup, "Subgroup selector, or all-normal")->required();
  check->add_option("--out", o.out, "Output path (default stdout)");
  check->add_flag("--timings", o.timings, "Record elapsed time per verdict");
  add_gates(check, o);

  auto* sweep = app.add_subcommand("sweep", "Check claims over the default catalog");
  sweep->add_option("--claims", o.claims, "all, must-pass, adjudicated or a comma list of ids")->required();
  sweep->add_option("--max-order", o.max_order, "Largest group order in the catalog")->capture_default_str();
  sweep->add_option("--group", o.group, "Restrict the sweep to one group spec");
  sweep->add_option("--subgroup", o.subgroup, "Subgroup selector used with --group");
  sweep->add_option("--parallelism", o.parallelism, "Worker threads (0 = hardware)")->capture_default_str();
  sweep->add_option("--out", o.out, "Report path (default stdout)");
  sweep->add_flag("--timings", o.timings, "Record elapsed time per verdict (breaks byte-identical reports)");
  add_gates(sweep, o);

  auto* catalog = app.add_subcommand("catalog", "List the default catalog");
  catalog->add_option("--max-order", o.max_order, "Largest group order")->capture_default_str();
  catalog->add_option("--out", o.out, "Output path (default stdout)");

  auto* formats = app.add_subcommand("export-formats", "Describe the export and report formats");
  formats->add_option("--out", o.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return run_build(o);
    if (check->parsed()) return run_check(o);
    if (sweep->parsed()) return run_sweep(o);
    if (catalog->parsed()) return run_catalog(o);
    return run_export_formats(o);
  } catch (const eqg::SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const eqg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
