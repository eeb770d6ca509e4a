#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "mcsl/census.hpp"
#include "mcsl/json_io.hpp"

using namespace mcsl;

namespace {

// Distinct Gamma cap R Gamma over all rotations from primitive quaternions of
// the given odd norm, using only the geometric construction.
std::set<Lattice3> geometric_csls(Int sigma) {
  std::set<Lattice3> out;
  for (const auto& q : quaternions_of_norm(sigma))
    if (q.is_primitive()) out.insert(csl_geometric(q));
  return out;
}

}  // namespace

TEST(Census, FormulaExamples) {
  EXPECT_EQ(f_formula(1), 1);
  EXPECT_EQ(f_formula(2), 0);
  EXPECT_EQ(f_formula(9), 12);
  EXPECT_EQ(f_formula(99), 144);
  EXPECT_EQ(f_formula(45), 72);
}

TEST(Census, CslExamples) {
  for (const auto& [s, n] : std::vector<std::pair<Int, Int>>{{3, 4}, {45, 72}, {25, 30}, {1, 1}}) {
    const CountReport r = census_csl(s);
    EXPECT_EQ(r.count, n);
    EXPECT_TRUE(r.match);
    EXPECT_EQ(r.witnesses.size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
  }
  EXPECT_THROW(census_csl(4), std::invalid_argument);
}

TEST(Census, CslWitnessesMatchGeometry) {
  for (Int s : {3, 9, 15, 21}) {
    const CountReport r = census_csl(s);
    EXPECT_EQ(std::set<Lattice3>(r.witnesses.begin(), r.witnesses.end()), geometric_csls(s)) << s;
  }
}

TEST(Census, Mcsl2Examples) {
  EXPECT_EQ(census_mcsl2(3).count, 4);
  EXPECT_EQ(census_mcsl2(9).count, 18);
  EXPECT_EQ(census_mcsl2(5).count, 6);
  EXPECT_EQ(census_mcsl2(15).count, 24);
  EXPECT_THROW(census_mcsl2(10), std::invalid_argument);
}

TEST(Census, Mcsl2Pairs) {
  // Independent count at 9: ordinary CSLs of index 9 plus pairwise
  // intersections of distinct index-3 CSLs.
  std::set<Lattice3> lattices = geometric_csls(9);
  const auto three = geometric_csls(3);
  for (const auto& a : three)
    for (const auto& b : three)
      if (a != b) lattices.insert(intersect(a, b));
  EXPECT_EQ(static_cast<Int>(lattices.size()), census_mcsl2(9).count);
}

TEST(Census, ParallelMatchesSerial) {
  const CountReport a = census_mcsl2(45, 1);
  const CountReport b = census_mcsl2(45, 4);
  EXPECT_EQ(a.count, 108);
  EXPECT_EQ(report_json(a).dump(), report_json(b).dump());
}

TEST(Census, PrimePowerClosedForm) {
  EXPECT_EQ(theorem2_eval(3, 2), Rational(18));
  EXPECT_EQ(theorem2_eval(5, 2), Rational(45));
  EXPECT_EQ(theorem2_eval(7, 2), Rational(84));
  EXPECT_EQ(theorem2_eval(3, 4), Rational(282));
  EXPECT_EQ(theorem2_eval(3, 1), Rational(109, 27));
  EXPECT_EQ(theorem2_eval(3, 3), Rational(229, 3));
  EXPECT_THROW(theorem2_eval(2, 2), std::invalid_argument);
  EXPECT_THROW(theorem2_eval(9, 2), std::invalid_argument);
  EXPECT_EQ(f2_formula(9), Rational(18));
  // Extended multiplicatively, so the odd-power anomaly propagates.
  EXPECT_EQ(f2_formula(45), theorem2_eval(3, 2) * theorem2_eval(5, 1));
}

TEST(Census, PairEqualityPredicateExamples) {
  AlphaProfile same{};
  same.a1 = same.a3 = 2;
  same.a2 = same.a4 = 1;
  same.a13 = 2;
  same.a24 = 1;
  EXPECT_TRUE(lemma6_predicate(same));

  AlphaProfile shared_first{};
  shared_first.a1 = shared_first.a2 = shared_first.a3 = shared_first.a4 = 1;
  shared_first.a13 = 1;
  EXPECT_FALSE(lemma6_predicate(shared_first));

  AlphaProfile bad{};
  bad.a1 = 1;
  bad.a2 = 1;
  bad.a12 = 2;
  EXPECT_THROW(lemma6_predicate(bad), std::invalid_argument);
}

TEST(Census, PairEqualitySmallRunAgrees) {
  const Lemma6Report r = lemma6_oracle_compare(3, 1);
  EXPECT_GT(r.evaluated, 0u);
  EXPECT_EQ(r.agreements, r.evaluated);
  EXPECT_TRUE(r.mismatches.empty());
  EXPECT_TRUE(r.oracle_consistent);
  EXPECT_GT(r.excluded, 0u);
}

TEST(Census, Multiplicativity) {
  const auto rows = multiplicativity_check({{9, 5}, {3, 5}, {1, 7}});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].count_mn, 108);
  EXPECT_EQ(rows[1].count_mn, 24);
  for (const auto& r : rows) EXPECT_TRUE(r.holds);
  EXPECT_THROW(multiplicativity_check({{3, 9}}), std::invalid_argument);
}

TEST(Census, CacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "mcsl-cache-test";
  std::filesystem::remove_all(dir);
  const ReportCache cache(dir);
  EXPECT_FALSE(cache.load("census-f-45").has_value());
  const CountReport cold = census_csl(45);
  cache.store("census-f-45", report_json(cold));
  const auto warm = cache.load("census-f-45");
  ASSERT_TRUE(warm.has_value());
  EXPECT_EQ(warm->dump(), report_json(cold).dump());
  EXPECT_EQ(report_json(report_from_json(*warm)).dump(), report_json(cold).dump());
  std::filesystem::remove_all(dir);
}

TEST(Census, ReportJsonShape) {
  const auto j = report_json(census_csl(9));
  EXPECT_EQ(j.at("formula"), "12/1");
  EXPECT_EQ(j.at("count"), 12);
  EXPECT_TRUE(j.at("match").get<bool>());
  EXPECT_EQ(j.at("witnesses").size(), 12u);
  EXPECT_TRUE(j.at("mismatches").empty());
}

TEST(Census, LatticeJsonRoundTrip) {
  const Lattice3 l = census_csl(15).witnesses.front();
  const auto j = lattice_json(l);
  EXPECT_EQ(j.at("coords"), "doubled-bcc");
  EXPECT_EQ(lattice_from_json(j), RationalLattice3(l));
  auto broken = j;
  broken["coords"] = "cubic";
  EXPECT_THROW(lattice_from_json(broken), std::invalid_argument);
}
