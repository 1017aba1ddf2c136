// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "eqg/algorithms.hpp"
#include "eqg/enhanced.hpp"
#include "eqg/families.hpp"
#include "eqg/verifier.hpp"
#include "oracles.hpp"

namespace {

using eqg::Element;
using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

const std::vector<eqg::CatalogEntry>& catalog24() {
  static const auto c = eqg::default_catalog(24);
  return c;
}

const eqg::Report& full_report() {
  static const auto r = [] {
    eqg::SweepOptions o;
    o.claims = eqg::select_claims("all");
    o.parallelism = 1;
    return eqg::sweep(catalog24(), o);
  }();
  return r;
}

const eqg::ClaimVerdict* find_verdict(const eqg::Report& r, const std::string& claim, const std::string& group,
                                      const std::vector<Element>& subgroup) {
  for (const auto& v : r.verdicts)
    if (v.claim == claim && v.group == group && v.subgroup == subgroup) return &v;
  return nullptr;
}

Outcome criterion1() {
  Outcome o;
  eqg::SweepOptions opts;
  opts.claims = eqg::select_claims("C01,C02,C03,C04,C05,C08,C16,C18,C19,C21");
  opts.parallelism = 1;
  const auto start = Clock::now();
  const auto report = eqg::sweep(eqg::default_catalog(24), opts);
  const auto elapsed = seconds_since(start);
  std::size_t fails = 0;
  std::size_t skipped = 0;
  for (const auto& [id, c] : report.summary) {
    fails += c.fails;
    skipped += c.skipped;
  }
  o.require(fails == 0, std::to_string(fails) + " fails");
  o.require(skipped == 0, std::to_string(skipped) + " skipped");
  o.require(!report.must_pass_failed(), "exit status would be 1");
  o.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass)
    o.detail = std::to_string(report.verdicts.size()) + " verdicts, 0 fails, 0 skipped, " + std::to_string(elapsed) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t discrepancies = 0;
  std::size_t groups = 0;
  for (const auto& e : catalog24()) {
    ++groups;
    const auto built = oracle::matrix(eqg::enhanced_power_graph(e.group));
    const auto ref = oracle::enhanced_power(e.group);
    for (std::size_t i = 0; i < ref.size(); ++i)
      for (std::size_t j = i + 1; j < ref.size(); ++j) discrepancies += built[i][j] != ref[i][j] ? 1 : 0;
  }
  o.require(discrepancies == 0, std::to_string(discrepancies) + " edge discrepancies");
  if (o.pass) o.detail = std::to_string(groups) + " groups, 0 discrepancies";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t exceptions = 0;
  for (const auto& e : catalog24()) {
    const auto g = eqg::enhanced_power_graph(e.group);
    const bool eulerian = eqg::profile(g).eulerian;
    if (eulerian != (e.group.order() % 2 == 1)) ++exceptions;
    // Cross-check the profile verdict against an actual circuit.
    if (g.edge_count() > 0) {
      const auto walk = eqg::euler_circuit(g);
      if (walk.has_value() != eulerian || (walk && !oracle::valid_euler_circuit(g, *walk))) ++exceptions;
    }
  }
  o.require(exceptions == 0, std::to_string(exceptions) + " exceptions");
  const auto k7 = eqg::enhanced_power_graph(eqg::make_group("cyclic:7"));
  const auto walk = eqg::euler_circuit(k7);
  o.require(k7.edge_count() == 21 && eqg::profile(k7).complete, "power graph of Z7 is not K7");
  o.require(walk && walk->size() == 22 && oracle::valid_euler_circuit(k7, *walk), "K7 circuit invalid");
  if (o.pass) o.detail = std::to_string(catalog24().size()) + " groups, 0 exceptions; K7 circuit has 21 edges";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto c4 = eqg::make_group("cyclic:4");
  const eqg::Instance i4("cyclic:4", c4, eqg::make_subgroup(c4, {0, 2}));
  const auto c14 = eqg::check_claim("C14", i4);
  o.require(c14.verdict == eqg::Verdict::Fails, "C14 on (Z4,<g^2>) did not fail");
  o.require(c14.witness["graph"] == json({{"vertex_count", 3}, {"connected", true}, {"degrees", {2, 2, 2}}}),
            "C14 witness graph mismatch: " + c14.witness.dump());
  o.require(c14.witness["group_order"] == 4, "C14 witness group order");

  const auto c9 = eqg::make_group("cyclic:9");
  const auto q9 = eqg::quotient(c9, eqg::make_subgroup(c9, {0, 3, 6}));
  const auto f = eqg::clique_formulas(q9, true);
  o.require(f.exact_omega == 7u && f.coset_value == 7 && f.paper_value == 10u, "clique formulas mismatch");
  const auto d = eqg::degree_formula(q9, 1);
  o.require(d.actual_degree == 6 && d.formula_value == 7, "degree formula mismatch");

  const auto& r = full_report();
  const auto* s14 = find_verdict(r, "C14", "cyclic:4", {0, 2});
  o.require(s14 && eqg::verdict_to_json(*s14) == eqg::verdict_to_json(c14), "C14 record missing from sweep report");
  const auto* s17 = find_verdict(r, "C17", "cyclic:9", {0, 3, 6});
  o.require(s17 && s17->witness["clique_formulas"] ==
                       json({{"s", 3}, {"paper_value", 10}, {"coset_value", 7}, {"exact_omega", 7}}),
            "clique formula record missing from sweep report");
  const auto* s15 = find_verdict(r, "C15", "cyclic:9", {0, 3, 6});
  o.require(s15 && s15->verdict == eqg::Verdict::Fails && s15->witness["element"] == 1 &&
                s15->witness["actual_degree"] == 6 && s15->witness["formula_value"] == 7,
            "degree formula record missing from sweep report");
  if (o.pass) o.detail = "C14 witness K3 with |G|=4; omega 7, coset 7, closed form 10; degree 6 vs 7; all in report";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t compared = 0;
  std::size_t disagreements = 0;
  const auto compare = [&](const eqg::LabeledGraph& g) {
    if (g.vertex_count() > 9) return;
    ++compared;
    const auto r = eqg::is_planar(g);
    const bool ref = oracle::planar(oracle::matrix(g));
    if (r.skipped() || r->planar != ref) ++disagreements;
    if (!r.skipped() && !r->planar && (!r->witness || !eqg::validate_kuratowski_witness(g, *r->witness)))
      ++disagreements;
  };
  for (const auto& e : catalog24()) {
    const auto pg = eqg::enhanced_power_graph(e.group);
    compare(pg);
    if (pg.vertex_count() > 0) compare(eqg::deleted(pg));
    for (const auto& h : e.subgroups) {
      const auto qg = eqg::enhanced_quotient_graph(e.group, h);
      compare(qg);
      compare(eqg::deleted(qg));
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements out of " + std::to_string(compared));
  const auto k5 = eqg::complete_graph(5);
  const auto r5 = eqg::is_planar(k5);
  o.require(!r5->planar && r5->witness && r5->witness->kind == eqg::KuratowskiWitness::Kind::K5 &&
                eqg::validate_kuratowski_witness(k5, *r5->witness),
            "K5 witness invalid");
  const auto k33 = eqg::complete_bipartite_graph(3, 3);
  const auto r33 = eqg::is_planar(k33);
  o.require(!r33->planar && r33->witness && r33->witness->kind == eqg::KuratowskiWitness::Kind::K33 &&
                eqg::validate_kuratowski_witness(k33, *r33->witness),
            "K3,3 witness invalid");
  if (o.pass) o.detail = std::to_string(compared) + " catalog graphs agree; K5 and K3,3 witnesses valid";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t lifted = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  const eqg::Gates gates;
  for (const auto& e : catalog24())
    for (const auto& h : e.subgroups) {
      const auto q = eqg::quotient(e.group, h);
      const auto ham = eqg::hamiltonian_cycle(eqg::enhanced_power_graph(q.group()), gates.hamiltonian);
      if (ham.skipped()) {
        ++skipped;
        continue;
      }
      if (!ham->has_value()) continue;
      ++lifted;
      const auto walk = eqg::lift_hamiltonian(q, **ham);
      // Independent validation against the definitional adjacency.
      const auto ref = oracle::enhanced_quotient(e.group, h.members);
      std::map<Element, std::size_t> index;
      for (std::size_t i = 0; i < ref.vertices.size(); ++i) index[ref.vertices[i]] = i;
      bool ok = walk.size() == ref.vertices.size() + 1 && walk.front() == walk.back();
      std::set<Element> seen(walk.begin(), walk.end() - 1);
      ok = ok && seen.size() == ref.vertices.size();
      for (std::size_t i = 0; ok && i + 1 < walk.size(); ++i)
        ok = index.count(walk[i]) && index.count(walk[i + 1]) && ref.adj[index[walk[i]]][index[walk[i + 1]]];
      if (!ok) ++failures;
    }
  o.require(failures == 0, std::to_string(failures) + " lifted cycles invalid");
  o.require(skipped == 0, std::to_string(skipped) + " quotients skipped by the Hamiltonian gate");
  o.require(lifted > 0, "no Hamiltonian quotients found");
  if (o.pass) o.detail = std::to_string(lifted) + " lifted cycles valid";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto c9 = eqg::make_group("cyclic:9");
  const auto q = eqg::quotient(c9, eqg::make_subgroup(c9, {0, 3, 6}));
  const auto target = eqg::enhanced_power_graph(eqg::make_group("cyclic:3"));
  std::size_t count = 0;
  std::size_t isomorphic = 0;
  for (auto a : q.cosets()[1])
    for (auto b : q.cosets()[2]) {
      ++count;
      const auto copy = eqg::embedded_copies(q, {a, b});
      if (copy.isomorphic && copy.copy.edge_count() == target.edge_count() && copy.copy.vertex_count() == 3) ++isomorphic;
    }
  o.require(count == 9 && isomorphic == 9, std::to_string(isomorphic) + "/" + std::to_string(count) + " isomorphic");
  o.require(eqg::admissible_transversal_count(q) == 9u, "transversal count formula");
  if (o.pass) o.detail = "9 of 9 transversals induce a copy of the power graph of Z3";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto q8 = eqg::make_group("dicyclic:2");
  const auto dq8 = eqg::deleted(eqg::enhanced_power_graph(q8));
  o.require(eqg::is_connected(dq8), "deleted graph of Q8 disconnected");
  const auto v4 = eqg::make_group("cyclic:2 x cyclic:2");
  const auto dv4 = eqg::deleted(eqg::enhanced_power_graph(v4));
  o.require(dv4.vertex_count() == 3 && dv4.edge_count() == 0 && eqg::connected_components(dv4).size() == 3,
            "deleted graph of Z2xZ2 is not 3 isolated vertices");
  const eqg::Instance iq8("dicyclic:2", q8, eqg::trivial_subgroup(q8));
  const eqg::Instance iv4("cyclic:2 x cyclic:2", v4, eqg::trivial_subgroup(v4));
  const auto c18q = eqg::check_claim("C18", iq8);
  const auto c18v = eqg::check_claim("C18", iv4);
  o.require(c18q.verdict == eqg::Verdict::Holds && c18v.verdict == eqg::Verdict::Holds, "C18 does not hold");
  o.require(eqg::has_unique_minimal_subgroup(q8) && !eqg::has_unique_minimal_subgroup(v4), "minimal subgroup tests");
  if (o.pass) o.detail = "Q8 connected, Z2xZ2 has 3 isolated vertices, C18 holds on both";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto z3 = eqg::make_group("cyclic:3");
  const auto rec = eqg::check_cone_product(z3, eqg::trivial_subgroup(z3), 4);
  std::set<std::string> expected;
  const auto product = eqg::direct_product(z3, eqg::make_group("cyclic:4"));
  for (Element a : {1u, 3u}) expected.insert(product.label(a));
  std::set<std::string> got;
  for (const auto& l : rec["cone_elements"]) got.insert(l.get<std::string>());
  o.require(rec["missing"].is_null() && got == expected, "C10 cone record " + rec.dump());
  // Independent check on the definitional graph.
  const auto ref = oracle::enhanced_power(product);
  for (Element a : {1u, 3u})
    for (Element y = 0; y < product.order(); ++y)
      if (y != a && !ref[a][y]) o.require(false, "(e,a) not adjacent to every vertex in the oracle graph");
  const auto s3 = eqg::enhanced_power_graph(eqg::make_group("symmetric:3"));
  o.require(eqg::cone_vertices(s3) == std::vector<std::size_t>{0} && s3.vertex(0).element == 0,
            "cone vertices of the power graph of S3 are not {e}");
  if (o.pass) o.detail = "(e,1) and (e,3) are cone vertices; S3 cone set is {e}";
  return o;
}

Outcome criterion10() {
  Outcome o;
  eqg::SweepOptions seq;
  seq.claims = eqg::select_claims("all");
  seq.parallelism = 1;
  const auto start = Clock::now();
  const auto serial = eqg::sweep(eqg::default_catalog(24), seq);
  const auto serial_time = seconds_since(start);
  o.require(eqg::to_jsonl(serial) == eqg::to_jsonl(full_report()), "repeated serial sweeps differ");
  eqg::SweepOptions par;
  par.claims = eqg::select_claims("all");
  par.parallelism = 8;
  const auto parallel = eqg::sweep(catalog24(), par);
  const auto a = eqg::to_jsonl(serial);
  const auto b = eqg::to_jsonl(parallel);
  o.require(a == b, "reports differ between parallelism 1 and 8");
  o.require(eqg::summary_table(serial) == eqg::summary_table(parallel), "summaries differ");
  o.require(serial_time < 600.0, "full sweep took " + std::to_string(serial_time) + " s");
  if (o.pass)
    o.detail = std::to_string(a.size()) + " identical bytes; full 22-claim sweep " + std::to_string(serial_time) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"must-pass sweep to order 24", criterion1},
      {"enhanced power graph matches definition", criterion2},
      {"Eulerian baseline and K7 circuit", criterion3},
      {"adjudication facts in the sweep report", criterion4},
      {"planarity cross-check", criterion5},
      {"Hamiltonian lifting", criterion6},
      {"embedded copies on (Z9, <g^3>)", criterion7},
      {"deleted-graph connectivity", criterion8},
      {"cone vertices", criterion9},
      {"determinism and full-sweep runtime", criterion10},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    all = all && out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " -- "
              << out.detail << std::endl;
  }
  return all ? 0 : 1;
}
