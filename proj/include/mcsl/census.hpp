#pragma once

// Exhaustive counts of CSLs and two-fold MCSLs per index, the closed-form
// counting functions they are compared against, and the pair-equality
// criterion harness.

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mcsl/csl_engine.hpp"

namespace mcsl {

struct CountReport {
  Int sigma = 1;
  Int count = 0;
  Rational formula{0};
  bool match = false;
  /// Canonical HNFs of every distinct lattice found, sorted.
  std::vector<Lattice3> witnesses;
  nlohmann::json mismatches = nlohmann::json::array();
  /// Wall time of the enumeration; never serialised.
  double elapsed_ms = 0.0;
};

/// p-adic valuations of the norms of q1..q4 and of the pairwise gclds.
struct AlphaProfile {
  int a1 = 0, a2 = 0, a3 = 0, a4 = 0;
  int a12 = 0, a13 = 0, a24 = 0, a34 = 0;
  /// Needed only for the interchange q1 <-> q2 allowed when a1 == a2.
  std::optional<int> a14, a23;
};

/// Number of CSLs of index sigma: multiplicative with f(p^r) = (p+1) p^(r-1)
/// for odd p and zero at even arguments.
Int f_formula(Int sigma);

/// Closed form for f2(p^r), evaluated in exact rationals and never
/// rounded. Odd r gives non-integers; the pair census is the ground truth.
Rational theorem2_eval(Int p, int r);

/// Multiplicative extension of theorem2_eval to any odd sigma.
Rational f2_formula(Int sigma);

CountReport census_csl(Int sigma, unsigned jobs = 1);

/// Distinct lattices Gamma(R1) cap Gamma(R2) of index sigma, the ordinary
/// CSLs included. Both norms divide sigma, so the search is over all pairs
/// of ideals whose norms divide sigma.
CountReport census_mcsl2(Int sigma, unsigned jobs = 1);

/// Throws std::invalid_argument for a profile with a_ij > min(a_i, a_j).
bool lemma6_predicate(const AlphaProfile& profile);

struct Lemma6Report {
  Int p = 3;
  int max_alpha = 1;
  std::size_t evaluated = 0;
  std::size_t agreements = 0;
  /// Tuples failing the ordering hypothesis or containing a right-multiple pair.
  std::size_t excluded = 0;
  std::size_t predicate_true = 0;
  std::size_t lattices_equal = 0;
  /// HNF equality agrees with mutual containment on every pair of candidate
  /// lattices.
  bool oracle_consistent = false;
  nlohmann::json mismatches = nlohmann::json::array();
};

Lemma6Report lemma6_oracle_compare(Int p, int max_alpha, unsigned jobs = 1);

struct MultiplicativityRow {
  Int m = 1, n = 1;
  Int count_m = 0, count_n = 0, count_mn = 0;
  bool holds = false;
};

/// census_mcsl2(m n) against census_mcsl2(m) census_mcsl2(n) for coprime odd pairs.
std::vector<MultiplicativityRow> multiplicativity_check(const std::vector<std::pair<Int, Int>>& pairs,
                                                        unsigned jobs = 1);

/// JSON payload store keyed by name. Writes go to a temporary file that is
/// renamed into place.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// Uses MCSL_CACHE_DIR; nullopt if unset or empty.
  static std::optional<ReportCache> from_env();

  std::optional<nlohmann::json> load(const std::string& key) const;
  void store(const std::string& key, const nlohmann::json& payload) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace mcsl
