#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "eqg/algorithms.hpp"
#include "eqg/errors.hpp"
#include "eqg/families.hpp"
#include "eqg/verifier.hpp"

namespace {

using eqg::Verdict;

eqg::Instance instance(const std::string& spec, const std::string& selector) {
  const auto g = eqg::make_group(spec);
  return eqg::Instance(spec, g, eqg::resolve_subgroups(g, selector).front());
}

TEST(Registry, Shape) {
  const auto& r = eqg::claim_registry();
  ASSERT_EQ(r.size(), 22u);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto expected = std::string(i < 9 ? "C0" : "C") + std::to_string(i + 1);
    EXPECT_EQ(r[i].id, expected);
  }
  EXPECT_EQ(eqg::find_claim("C01").kind, eqg::ClaimKind::MustPass);
  EXPECT_EQ(eqg::find_claim("C14").kind, eqg::ClaimKind::Adjudicated);
  EXPECT_THROW(eqg::find_claim("C23"), eqg::SpecError);
  EXPECT_EQ(eqg::select_claims("must-pass").size(), 11u);
  EXPECT_EQ(eqg::select_claims("adjudicated").size(), 11u);
  EXPECT_EQ(eqg::select_claims("C08, C01,C08"), (std::vector<std::string>{"C01", "C08"}));
  EXPECT_THROW(eqg::select_claims("C01,,C02"), eqg::SpecError);
}

TEST(CheckClaim, Examples) {
  EXPECT_EQ(eqg::check_claim("C08", instance("cyclic:9", "0,3,6")).verdict, Verdict::Holds);
  EXPECT_EQ(eqg::check_claim("C08", instance("symmetric:3", "alternating")).verdict, Verdict::Holds);

  const auto c14 = eqg::check_claim("C14", instance("cyclic:4", "0,2"));
  ASSERT_EQ(c14.verdict, Verdict::Fails);
  EXPECT_EQ(c14.witness["graph"]["vertex_count"], 3);
  EXPECT_EQ(c14.witness["graph"]["connected"], true);
  EXPECT_EQ(c14.witness["graph"]["degrees"], nlohmann::ordered_json({2, 2, 2}));
  EXPECT_EQ(c14.witness["group_order"], 4);

  const auto c09 = eqg::check_claim("C09", instance("symmetric:3", "alternating"));
  EXPECT_EQ(c09.verdict, Verdict::Fails);
  EXPECT_EQ(c09.witness["to"], "G cyclic");

  EXPECT_EQ(eqg::check_claim("C18", instance("symmetric:3", "trivial")).verdict, Verdict::Inapplicable);
  EXPECT_EQ(eqg::check_claim("C18", instance("dicyclic:2", "trivial")).verdict, Verdict::Holds);
  EXPECT_EQ(eqg::check_claim("C18", instance("elab:2^2", "trivial")).verdict, Verdict::Holds);
  EXPECT_EQ(eqg::check_claim("C21", instance("cyclic:4", "0,2")).verdict, Verdict::Inapplicable);
  EXPECT_EQ(eqg::check_claim("C13", instance("cyclic:6", "0,2,4")).verdict, Verdict::Fails);
}

TEST(CheckClaim, C10ConeProduct) {
  const auto rec = eqg::check_cone_product(eqg::make_group("cyclic:3"), instance("cyclic:3", "trivial").kernel(), 4);
  EXPECT_TRUE(rec["missing"].is_null());
  EXPECT_EQ(rec["cone_elements"].size(), 2u);
  const auto v = eqg::check_claim("C10", instance("cyclic:3", "trivial"));
  EXPECT_EQ(v.verdict, Verdict::Holds);
  EXPECT_EQ(eqg::check_claim("C10", instance("cyclic:6", "trivial")).verdict, Verdict::Holds);
}

TEST(CheckClaim, GatesProduceSkipped) {
  eqg::Gates tight;
  tight.hamiltonian = 3;
  const auto v = eqg::check_claim("C16", instance("cyclic:8", "0,4"), tight);
  EXPECT_EQ(v.verdict, Verdict::Skipped);
  tight.planarity = 3;
  EXPECT_EQ(eqg::check_claim("C17", instance("cyclic:9", "0,3,6"), tight).verdict, Verdict::Skipped);
}

TEST(Catalog, Contents) {
  const auto eight = eqg::default_catalog_specs(8);
  for (const char* s : {"cyclic:1", "cyclic:8", "elab:2^2", "elab:2^3", "dihedral:3", "dihedral:4", "dicyclic:2",
                        "symmetric:3", "cyclic:2 x cyclic:4", "cyclic:2 x elab:2^2"})
    EXPECT_NE(std::find(eight.begin(), eight.end(), s), eight.end()) << s;
  const auto four = eqg::default_catalog_specs(4);
  EXPECT_EQ(std::find(four.begin(), four.end(), "symmetric:4"), four.end());
  EXPECT_THROW(eqg::default_catalog_specs(65), eqg::BoundError);
  for (const auto& e : eqg::default_catalog(12)) {
    for (const auto& h : e.subgroups) {
      EXPECT_TRUE(h.normal);
      EXPECT_TRUE(eqg::is_normal(e.group, eqg::ElementSet::from(e.group.order(), h.members)));
      EXPECT_LT(h.size(), e.group.order());
    }
  }
}

TEST(Sweep, SmallExamples) {
  eqg::SweepOptions o;
  o.claims = {"C01"};
  const auto r4 = eqg::sweep(eqg::default_catalog(4), o);
  EXPECT_EQ(r4.summary.at("C01").holds, r4.verdicts.size());

  o.claims = {"C08", "C14"};
  const auto r8 = eqg::sweep(eqg::default_catalog(8), o);
  EXPECT_EQ(r8.summary.at("C08").fails + r8.summary.at("C08").skipped, 0u);
  EXPECT_GE(r8.summary.at("C14").fails, 1u);
  EXPECT_FALSE(r8.must_pass_failed());
  const auto witness = std::find_if(r8.verdicts.begin(), r8.verdicts.end(), [](const eqg::ClaimVerdict& v) {
    return v.claim == "C14" && v.group == "cyclic:4" && v.subgroup == std::vector<eqg::Element>{0, 2};
  });
  ASSERT_NE(witness, r8.verdicts.end());
  EXPECT_EQ(witness->verdict, Verdict::Fails);
}

TEST(Sweep, ReportOrderAndFormat) {
  eqg::SweepOptions o;
  o.claims = {"C02", "C01"};
  const auto r = eqg::sweep(eqg::default_catalog(6), o);
  for (std::size_t i = 1; i < r.verdicts.size(); ++i) EXPECT_LE(r.verdicts[i - 1].claim, r.verdicts[i].claim);
  const auto line = eqg::verdict_to_json(r.verdicts.front()).dump();
  EXPECT_EQ(line.rfind(R"({"claim":"C01","group":"cyclic:2","subgroup":[0],"verdict":"holds",)", 0), 0u) << line;
  EXPECT_TRUE(eqg::verdict_to_json(r.verdicts.front())["ms"].is_null());
  EXPECT_TRUE(eqg::verdict_to_json(r.verdicts.front(), true)["ms"].is_number());
  EXPECT_NE(eqg::summary_table(r).find("C02"), std::string::npos);
  EXPECT_THROW(eqg::sweep({}, eqg::SweepOptions{{"C99"}, 1, {}}), eqg::SpecError);
}

class AllClaimsSweep : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    catalog_ = new std::vector<eqg::CatalogEntry>(eqg::default_catalog(16));
    eqg::SweepOptions o;
    o.claims = eqg::select_claims("all");
    o.parallelism = 4;
    report_ = new eqg::Report(eqg::sweep(*catalog_, o));
  }
  static void TearDownTestSuite() {
    delete report_;
    delete catalog_;
  }
  static const eqg::CatalogEntry& entry(const std::string& spec) {
    return *std::find_if(catalog_->begin(), catalog_->end(), [&](const auto& e) { return e.spec == spec; });
  }
  static std::vector<eqg::CatalogEntry>* catalog_;
  static eqg::Report* report_;
};
std::vector<eqg::CatalogEntry>* AllClaimsSweep::catalog_ = nullptr;
eqg::Report* AllClaimsSweep::report_ = nullptr;

TEST_F(AllClaimsSweep, MustPassClaimsHold) {
  for (const auto& [id, c] : report_->summary) {
    if (eqg::find_claim(id).kind != eqg::ClaimKind::MustPass) continue;
    EXPECT_EQ(c.fails, 0u) << id;
    EXPECT_EQ(c.skipped, 0u) << id;
  }
  EXPECT_FALSE(report_->must_pass_failed());
}

TEST_F(AllClaimsSweep, EveryFailureWitnessRechecks) {
  std::size_t failures = 0;
  for (const auto& v : report_->verdicts) {
    if (v.verdict != Verdict::Fails) continue;
    ++failures;
    const auto& e = entry(v.group);
    const auto h = std::find_if(e.subgroups.begin(), e.subgroups.end(),
                                [&](const eqg::Subgroup& s) { return s.members == v.subgroup; });
    ASSERT_NE(h, e.subgroups.end());
    EXPECT_TRUE(eqg::recheck_witness(v, e.group, *h)) << v.claim << " " << v.group << " " << v.witness.dump();
  }
  EXPECT_GT(failures, 0u);
}

TEST_F(AllClaimsSweep, RecheckRejectsTamperedWitness) {
  const auto v = std::find_if(report_->verdicts.begin(), report_->verdicts.end(),
                              [](const eqg::ClaimVerdict& x) { return x.claim == "C14" && x.verdict == Verdict::Fails; });
  ASSERT_NE(v, report_->verdicts.end());
  auto forged = *v;
  forged.witness["to"] = "quotient graph Eulerian";
  const auto& e = entry(v->group);
  const auto h = std::find_if(e.subgroups.begin(), e.subgroups.end(),
                              [&](const eqg::Subgroup& s) { return s.members == v->subgroup; });
  EXPECT_FALSE(eqg::recheck_witness(forged, e.group, *h));
  auto holds = *v;
  holds.verdict = Verdict::Holds;
  EXPECT_FALSE(eqg::recheck_witness(holds, e.group, *h));
}

TEST_F(AllClaimsSweep, FailVerdictsCarryWitnesses) {
  for (const auto& v : report_->verdicts) {
    if (v.verdict == Verdict::Fails) EXPECT_FALSE(v.witness.is_null()) << v.claim << " " << v.group;
    if (v.verdict == Verdict::Inapplicable) EXPECT_TRUE(v.witness.contains("reason"));
  }
}

TEST_F(AllClaimsSweep, EdgeCorrespondenceImpliesConnectivity) {
  std::map<std::pair<std::string, std::vector<eqg::Element>>, std::map<std::string, Verdict>> by_instance;
  for (const auto& v : report_->verdicts) by_instance[{v.group, v.subgroup}][v.claim] = v.verdict;
  for (const auto& [key, verdicts] : by_instance)
    if (verdicts.at("C04") == Verdict::Holds) EXPECT_EQ(verdicts.at("C01"), Verdict::Holds) << key.first;
}

TEST_F(AllClaimsSweep, PowerGraphEulerianIffOddOrder) {
  for (const auto& e : *catalog_) {
    const auto p = eqg::profile(eqg::enhanced_power_graph(e.group));
    EXPECT_EQ(p.eulerian, e.group.order() % 2 == 1) << e.spec;
  }
}

}  // namespace
