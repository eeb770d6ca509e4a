#pragma once

// JSON forms of the engine's values, as consumed by the command line tool.

#include "json.hpp"
#include "mcsl/census.hpp"
#include "mcsl/csl_engine.hpp"
#include "mcsl/rot3.hpp"

namespace mcsl {

nlohmann::json quat_json(const HQuat& q);

template <std::size_t N>
nlohmann::json matrix_json(const Mat<N>& m) {
  auto out = nlohmann::json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

/// {"hnf": [[...]], "den": 1, "coords": "doubled-bcc"}
nlohmann::json lattice_json(const Lattice3& l);
nlohmann::json lattice_json(const RationalLattice3& l);
/// Inverse of lattice_json; the basis is re-canonicalised.
RationalLattice3 lattice_from_json(const nlohmann::json& j);

/// Row-major "a/b" strings.
nlohmann::json rotation_json(const RotMat3& r);

/// {quat, sigma, hnf, ideal_hnf, decomposition}
nlohmann::json csl_json(const CslRecord& rec);
nlohmann::json mcsl_json(const McslRecord& rec);

/// {sigma, count, formula, match, witnesses, mismatches}
nlohmann::json report_json(const CountReport& r);
CountReport report_from_json(const nlohmann::json& j);

nlohmann::json lemma6_json(const Lemma6Report& r);

}  // namespace mcsl
