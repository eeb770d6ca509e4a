#pragma once

// The verification suite: every acceptance criterion as a function returning
// a machine-readable result. Shared by the acceptance test binary and the
// `verify all` command.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "mcsl/census.hpp"

namespace mcsl::verify {

enum class Level { desk, deep };

struct Options {
  Level level = Level::desk;
  unsigned jobs = 1;
  std::uint64_t seed = 0x5eed'c5a1'2024ULL;
  /// Optional store for census reports.
  const ReportCache* cache = nullptr;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Documented anomalies that do not fail the criterion.
  std::vector<std::string> notes;
  nlohmann::json detail = nlohmann::json::object();
  double elapsed_ms = 0.0;
};

CriterionResult csl_census(const Options& opt);          // 1
CriterionResult geometric_oracle(const Options& opt);    // 2
CriterionResult ideal_bijection(const Options& opt);     // 3
CriterionResult index_identities(const Options& opt);    // 4
CriterionResult f2_prime_squares(const Options& opt);    // 5
CriterionResult multiplicativity(const Options& opt);    // 6
CriterionResult theorem2_anomaly(const Options& opt);    // 7
CriterionResult constructive_lemmas(const Options& opt); // 8
CriterionResult pair_equality(const Options& opt);       // 9
CriterionResult property_suites(const Options& opt);     // 10

std::vector<CriterionResult> run_all(const Options& opt);

/// {"level", "passed", "criteria": [...]}; timings are omitted so the
/// payload is reproducible.
nlohmann::json to_json(const std::vector<CriterionResult>& results, Level level);

/// Census through the cache when one is configured.
CountReport cached_census_csl(Int sigma, const Options& opt);
CountReport cached_census_mcsl2(Int sigma, const Options& opt);

}  // namespace mcsl::verify
