#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>

#include "eqg/errors.hpp"
#include "eqg/families.hpp"
#include "eqg/group.hpp"

namespace {

using eqg::Element;

std::size_t count_order(const eqg::FiniteGroup& g, std::size_t k) {
  std::size_t c = 0;
  for (Element x = 0; x < g.order(); ++x) c += g.element_order(x) == k ? 1 : 0;
  return c;
}

std::size_t totient(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 1; i <= n; ++i) c += std::gcd(i, n) == 1 ? 1 : 0;
  return c;
}

TEST(MakeGroup, TrivialGroup) {
  const auto g = eqg::make_group("cyclic:1");
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.table_rows(), (std::vector<std::vector<Element>>{{0}}));
}

TEST(MakeGroup, QuaternionHasOneInvolution) {
  const auto q8 = eqg::make_group("dicyclic:2");
  EXPECT_EQ(q8.order(), 8u);
  EXPECT_EQ(count_order(q8, 2), 1u);
  EXPECT_EQ(count_order(q8, 4), 6u);
  q8.validate();
}

TEST(MakeGroup, KleinFourViaProduct) {
  const auto v = eqg::make_group("cyclic:2 x cyclic:2");
  EXPECT_EQ(v.order(), 4u);
  EXPECT_EQ(count_order(v, 2), 3u);
  EXPECT_TRUE(eqg::is_elementary_abelian_2group(v));
}

TEST(MakeGroup, FamilyOrdersAndValidity) {
  for (const char* spec : {"cyclic:12", "dihedral:5", "dicyclic:3", "symmetric:3", "symmetric:4", "elab:3^2",
                           "elab:2^3", "dihedral:3 x cyclic:2", "cyclic:2*cyclic:3"}) {
    SCOPED_TRACE(spec);
    const auto g = eqg::make_group(spec);
    g.validate();
  }
  EXPECT_EQ(eqg::make_group("dihedral:5").order(), 10u);
  EXPECT_EQ(eqg::make_group("dicyclic:3").order(), 12u);
  EXPECT_EQ(eqg::make_group("symmetric:4").order(), 24u);
  EXPECT_EQ(eqg::make_group("elab:3^2").order(), 9u);
  EXPECT_EQ(eqg::make_group("cyclic:2 x cyclic:3 x cyclic:2").order(), 12u);
}

TEST(MakeGroup, MalformedSpecs) {
  for (const char* spec : {"", "cyclic:", "cyclic:0", "dihedral:2", "dicyclic:1", "symmetric:6", "elab:4^2",
                           "bogus:3", "cyclic:3 x", "cyclic:abc"}) {
    SCOPED_TRACE(spec);
    EXPECT_THROW(eqg::make_group(spec), eqg::SpecError);
  }
}

TEST(FiniteGroup, RejectsBadTables) {
  // Not a Latin square.
  EXPECT_THROW(eqg::FiniteGroup("bad", {"e", "a"}, {0, 1, 1, 1}), eqg::InvariantError);
  // Non-associative quasigroup of order 3 with identity? Use a loop of order 5 that is not a group.
  const std::vector<Element> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(eqg::FiniteGroup("loop", {"e", "a", "b", "c", "d"}, loop), eqg::InvariantError);
}

TEST(ElementOrder, CyclicSix) {
  const auto g = eqg::make_group("cyclic:6");
  EXPECT_EQ(g.element_order(0), 1u);
  EXPECT_EQ(g.element_order(1), 6u);
  EXPECT_EQ(g.element_order(2), 3u);
  EXPECT_THROW(g.element_order(6), std::out_of_range);
}

TEST(CyclicSubgroup, GeneratorsCountIsTotient) {
  const auto c4 = eqg::make_group("cyclic:4");
  EXPECT_EQ(eqg::cyclic_subgroup(c4, 1).size(), 4u);
  EXPECT_EQ(eqg::generators_of(c4, 1), (std::vector<Element>{1, 3}));
  EXPECT_EQ(eqg::cyclic_subgroup(c4, 0).members, std::vector<Element>{0});
  EXPECT_EQ(eqg::generators_of(c4, 0), std::vector<Element>{0});

  for (const char* spec : {"symmetric:4", "dicyclic:3", "cyclic:12"}) {
    const auto g = eqg::make_group(spec);
    for (Element x = 0; x < g.order(); ++x)
      EXPECT_EQ(eqg::generators_of(g, x).size(), totient(g.element_order(x))) << spec << " " << x;
  }
}

TEST(CyclicSubgroup, QuaternionOrderFourContainsInvolution) {
  const auto q8 = eqg::make_group("dicyclic:2");
  Element involution = 0;
  for (Element x = 0; x < 8; ++x)
    if (q8.element_order(x) == 2) involution = x;
  for (Element x = 0; x < 8; ++x) {
    if (q8.element_order(x) != 4) continue;
    const auto c = eqg::cyclic_subgroup(q8, x);
    EXPECT_EQ(c.size(), 4u);
    EXPECT_TRUE(c.contains(involution));
  }
}

TEST(Subgroups, CyclicFourLattice) {
  const auto subs = eqg::all_subgroups(eqg::make_group("cyclic:4"));
  ASSERT_EQ(subs.size(), 3u);
  EXPECT_EQ(subs[0].size(), 1u);
  EXPECT_EQ(subs[1].size(), 2u);
  EXPECT_EQ(subs[2].size(), 4u);
  for (const auto& s : subs) EXPECT_TRUE(s.normal);
}

TEST(Subgroups, SymmetricThree) {
  const auto s3 = eqg::make_group("symmetric:3");
  EXPECT_EQ(eqg::all_subgroups(s3).size(), 6u);
  const auto normal = eqg::normal_subgroups(s3);
  ASSERT_EQ(normal.size(), 3u);
  EXPECT_EQ(normal[0].size(), 1u);
  EXPECT_EQ(normal[1].size(), 3u);
  EXPECT_EQ(normal[2].size(), 6u);
}

TEST(Subgroups, KnownCounts) {
  EXPECT_EQ(eqg::all_subgroups(eqg::make_group("cyclic:1")).size(), 1u);
  EXPECT_EQ(eqg::all_subgroups(eqg::make_group("symmetric:4")).size(), 30u);
  EXPECT_EQ(eqg::normal_subgroups(eqg::make_group("symmetric:4")).size(), 4u);
  EXPECT_EQ(eqg::all_subgroups(eqg::make_group("dihedral:4")).size(), 10u);
  EXPECT_EQ(eqg::normal_subgroups(eqg::make_group("dihedral:4")).size(), 6u);
  EXPECT_EQ(eqg::all_subgroups(eqg::make_group("dicyclic:2")).size(), 6u);
  EXPECT_EQ(eqg::all_subgroups(eqg::make_group("elab:2^3")).size(), 16u);
}

TEST(Subgroups, BoundExceeded) {
  EXPECT_THROW(eqg::all_subgroups(eqg::make_group("cyclic:12"), 8), eqg::BoundError);
}

TEST(Subgroups, SortedDeterministically) {
  const auto subs = eqg::all_subgroups(eqg::make_group("dihedral:6"));
  for (std::size_t i = 1; i < subs.size(); ++i) {
    const auto& a = subs[i - 1];
    const auto& b = subs[i];
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a.members < b.members));
  }
}

TEST(Quotient, Examples) {
  const auto c4 = eqg::make_group("cyclic:4");
  const auto q = eqg::quotient(c4, eqg::make_subgroup(c4, {0, 2}));
  EXPECT_EQ(q.index(), 2u);
  EXPECT_EQ(q.coset_of(0), 0u);
  EXPECT_EQ(q.coset_of(2), 0u);
  EXPECT_EQ(q.coset_of(1), q.coset_of(3));

  const auto s3 = eqg::make_group("symmetric:3");
  const auto a3 = eqg::resolve_subgroups(s3, "alternating").front();
  EXPECT_EQ(eqg::quotient(s3, a3).index(), 2u);

  const auto d5 = eqg::make_group("dihedral:5");
  const auto t = eqg::quotient(d5, eqg::trivial_subgroup(d5));
  EXPECT_EQ(t.index(), 10u);
  for (Element x = 0; x < 10; ++x)
    for (Element y = 0; y < 10; ++y)
      EXPECT_EQ(t.group().multiply(static_cast<Element>(t.coset_of(x)), static_cast<Element>(t.coset_of(y))),
                t.coset_of(d5.multiply(x, y)));
}

TEST(Quotient, InvariantsOnCatalogGroups) {
  for (const char* spec : {"symmetric:4", "dicyclic:4", "dihedral:6", "cyclic:3 x dihedral:3"}) {
    const auto g = eqg::make_group(spec);
    for (const auto& h : eqg::normal_subgroups(g)) {
      const auto q = eqg::quotient(g, h);
      q.group().validate();
      EXPECT_EQ(q.index() * h.size(), g.order());
      std::vector<int> hits(g.order(), 0);
      for (const auto& c : q.cosets())
        for (auto x : c) ++hits[x];
      for (auto k : hits) EXPECT_EQ(k, 1);
      for (Element x = 0; x < g.order(); ++x)
        for (Element y = 0; y < g.order(); ++y)
          ASSERT_EQ(q.group().multiply(static_cast<Element>(q.coset_of(x)), static_cast<Element>(q.coset_of(y))),
                    q.coset_of(g.multiply(x, y)));
    }
  }
}

TEST(Quotient, RejectsNonNormal) {
  const auto s3 = eqg::make_group("symmetric:3");
  for (const auto& h : eqg::all_subgroups(s3))
    if (!h.normal) EXPECT_THROW(eqg::quotient(s3, h), eqg::InvariantError);
}

TEST(Center, Examples) {
  EXPECT_EQ(eqg::center(eqg::make_group("cyclic:6")).size(), 6u);
  EXPECT_EQ(eqg::center(eqg::make_group("symmetric:3")).size(), 1u);
  const auto q8 = eqg::make_group("dicyclic:2");
  const auto z = eqg::center(q8);
  ASSERT_EQ(z.size(), 2u);
  EXPECT_EQ(q8.element_order(z.members[1]), 2u);
  EXPECT_TRUE(z.normal);
}

TEST(OrderSpectrum, Examples) {
  const auto c12 = eqg::order_spectrum(eqg::make_group("cyclic:12"));
  EXPECT_EQ(c12.pi_e, (std::set<std::size_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(c12.pi, (std::set<std::size_t>{2, 3}));
  EXPECT_EQ(c12.mu, (std::set<std::size_t>{12}));
  const auto v = eqg::order_spectrum(eqg::make_group("elab:2^2"));
  EXPECT_EQ(v.pi_e, (std::set<std::size_t>{1, 2}));
  EXPECT_EQ(v.mu, (std::set<std::size_t>{2}));
  const auto s3 = eqg::order_spectrum(eqg::make_group("symmetric:3"));
  EXPECT_EQ(s3.pi_e, (std::set<std::size_t>{1, 2, 3}));
  EXPECT_EQ(s3.mu, (std::set<std::size_t>{2, 3}));
}

TEST(Predicates, CyclicSylow) {
  EXPECT_TRUE(eqg::has_cyclic_sylow(eqg::make_group("cyclic:12"), 2));
  EXPECT_FALSE(eqg::has_cyclic_sylow(eqg::make_group("elab:2^2"), 2));
  EXPECT_TRUE(eqg::has_cyclic_sylow(eqg::make_group("symmetric:3"), 3));
  EXPECT_THROW(eqg::has_cyclic_sylow(eqg::make_group("cyclic:12"), 4), std::invalid_argument);
  EXPECT_THROW(eqg::has_cyclic_sylow(eqg::make_group("cyclic:12"), 5), std::invalid_argument);
}

TEST(Predicates, UniqueMinimalSubgroup) {
  EXPECT_TRUE(eqg::has_unique_minimal_subgroup(eqg::make_group("cyclic:9")));
  EXPECT_TRUE(eqg::has_unique_minimal_subgroup(eqg::make_group("dicyclic:2")));
  EXPECT_FALSE(eqg::has_unique_minimal_subgroup(eqg::make_group("elab:2^2")));
  EXPECT_FALSE(eqg::has_unique_minimal_subgroup(eqg::make_group("cyclic:6")));
  EXPECT_THROW(eqg::has_unique_minimal_subgroup(eqg::make_group("cyclic:1")), std::invalid_argument);
}

TEST(Predicates, GeneralizedQuaternion) {
  EXPECT_TRUE(eqg::is_generalized_quaternion(eqg::make_group("dicyclic:2")));
  EXPECT_TRUE(eqg::is_generalized_quaternion(eqg::make_group("dicyclic:4")));
  EXPECT_FALSE(eqg::is_generalized_quaternion(eqg::make_group("cyclic:8")));
  EXPECT_FALSE(eqg::is_generalized_quaternion(eqg::make_group("dihedral:4")));
  EXPECT_FALSE(eqg::is_generalized_quaternion(eqg::make_group("dicyclic:3")));
}

TEST(Predicates, CyclicAndElementary) {
  EXPECT_TRUE(eqg::is_cyclic(eqg::make_group("cyclic:7")));
  EXPECT_FALSE(eqg::is_cyclic(eqg::make_group("elab:2^2")));
  EXPECT_TRUE(eqg::is_cyclic(eqg::make_group("cyclic:2 x cyclic:3")));
  const auto c4 = eqg::make_group("cyclic:4");
  EXPECT_TRUE(eqg::is_cyclic(eqg::quotient(c4, eqg::make_subgroup(c4, {0, 2}))));
  EXPECT_TRUE(eqg::is_elementary_abelian_2group(eqg::make_group("elab:2^3")));
  EXPECT_FALSE(eqg::is_elementary_abelian_2group(eqg::make_group("cyclic:4")));
}

TEST(NumberHelpers, Primes) {
  EXPECT_TRUE(eqg::is_prime(2));
  EXPECT_FALSE(eqg::is_prime(1));
  EXPECT_FALSE(eqg::is_prime(9));
  EXPECT_EQ(eqg::prime_divisors(60), (std::vector<std::size_t>{2, 3, 5}));
  std::size_t p = 0;
  EXPECT_TRUE(eqg::is_prime_power(27, &p));
  EXPECT_EQ(p, 3u);
  EXPECT_FALSE(eqg::is_prime_power(12));
  EXPECT_FALSE(eqg::is_prime_power(1));
}

TEST(SubgroupSelectors, Resolve) {
  const auto s3 = eqg::make_group("symmetric:3");
  EXPECT_EQ(eqg::resolve_subgroups(s3, "alternating").front().size(), 3u);
  EXPECT_EQ(eqg::resolve_subgroups(s3, "center").front().size(), 1u);
  EXPECT_EQ(eqg::resolve_subgroups(s3, "trivial").front().size(), 1u);
  EXPECT_EQ(eqg::resolve_subgroups(s3, "all-normal").size(), 2u);
  EXPECT_THROW(eqg::resolve_subgroups(s3, "sylow"), eqg::SpecError);
  EXPECT_THROW(eqg::resolve_subgroups(s3, "0,9"), eqg::SpecError);
  const auto c4 = eqg::make_group("cyclic:4");
  EXPECT_EQ(eqg::resolve_subgroups(c4, "2,0").front().members, (std::vector<Element>{0, 2}));
  EXPECT_THROW(eqg::resolve_subgroups(c4, "0,1"), eqg::InvariantError);
}

TEST(TableFiles, RoundTripAndIdentityMove) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "eqg_test_group.json";
  {
    // Z3 with the identity listed last.
    std::ofstream f(path);
    f << R"({"name":"z3","order":3,"labels":["a","b","e"],"table":[[1,2,0],[2,0,1],[0,1,2]]})";
  }
  const auto g = eqg::make_group("table:" + path.string());
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.label(0), "e");
  EXPECT_EQ(g.element_order(1), 3u);
  const auto again = eqg::group_from_json(eqg::group_to_json(g));
  EXPECT_EQ(again, g);
  std::filesystem::remove(path);

  nlohmann::json bad = {{"name", "x"}, {"order", 2}, {"labels", {"e", "a"}}, {"table", {{0, 1}, {1, 1}}}};
  EXPECT_THROW(eqg::group_from_json(bad), eqg::InvariantError);
  EXPECT_THROW(eqg::make_group("table:/nonexistent/file.json"), eqg::SpecError);
}

}  // namespace
