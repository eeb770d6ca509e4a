// Acceptance suite: one test and one summary line per criterion.
// MCSL_LEVEL=deep selects the larger ranges.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <thread>
#include <unistd.h>

#include "mcsl/verify.hpp"

using namespace mcsl;

namespace {

std::vector<verify::CriterionResult> g_results;
verify::Options g_opt;

void record(const verify::CriterionResult& r) {
  g_results.push_back(r);
  for (const auto& note : r.notes) std::cout << "  note: " << note << '\n';
  EXPECT_TRUE(r.passed) << r.detail.dump(2);
}

}  // namespace

TEST(Acceptance, C01_CslCensus) { record(verify::csl_census(g_opt)); }
TEST(Acceptance, C02_GeometricOracle) { record(verify::geometric_oracle(g_opt)); }
TEST(Acceptance, C03_IdealBijection) { record(verify::ideal_bijection(g_opt)); }
TEST(Acceptance, C04_IndexIdentities) { record(verify::index_identities(g_opt)); }
TEST(Acceptance, C05_F2PrimeSquares) { record(verify::f2_prime_squares(g_opt)); }
TEST(Acceptance, C06_Multiplicativity) { record(verify::multiplicativity(g_opt)); }
TEST(Acceptance, C07_ClosedFormAnomaly) { record(verify::theorem2_anomaly(g_opt)); }
TEST(Acceptance, C08_ConstructiveLemmas) { record(verify::constructive_lemmas(g_opt)); }
TEST(Acceptance, C09_PairEquality) { record(verify::pair_equality(g_opt)); }
TEST(Acceptance, C10_PropertySuites) { record(verify::property_suites(g_opt)); }

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  const char* level = std::getenv("MCSL_LEVEL");
  g_opt.level = level && std::string(level) == "deep" ? verify::Level::deep : verify::Level::desk;
  g_opt.jobs = std::max(1u, std::thread::hardware_concurrency());

  // Criteria 5 to 7 share pair censuses; a scratch cache avoids recomputing them.
  const auto dir = std::filesystem::temp_directory_path() / ("mcsl-acceptance-" + std::to_string(::getpid()));
  const ReportCache cache(dir);
  g_opt.cache = &cache;

  const int rc = RUN_ALL_TESTS();
  std::filesystem::remove_all(dir);

  std::cout << "\nAcceptance summary (" << (g_opt.level == verify::Level::deep ? "deep" : "desk") << ")\n";
  for (const auto& r : g_results)
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << 'C' << r.id << "  " << r.title << "  (" << r.elapsed_ms / 1000.0
              << " s)\n";
  return rc;
}
