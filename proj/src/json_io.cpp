#include "mcsl/json_io.hpp"

namespace mcsl {

using nlohmann::json;

json quat_json(const HQuat& q) { return q.doubled(); }

json lattice_json(const Lattice3& l) { return lattice_json(RationalLattice3(l)); }

json lattice_json(const RationalLattice3& l) {
  return {{"hnf", matrix_json(l.numerator().basis())}, {"den", l.denominator()}, {"coords", "doubled-bcc"}};
}

RationalLattice3 lattice_from_json(const json& j) {
  if (j.value("coords", std::string{}) != "doubled-bcc")
    throw std::invalid_argument("lattice json: coords must be \"doubled-bcc\"");
  const auto rows = j.at("hnf").get<std::vector<std::vector<Int>>>();
  if (rows.size() != 3) throw std::invalid_argument("lattice json: expected three rows");
  std::vector<Vec3> gens;
  for (const auto& r : rows) {
    if (r.size() != 3) throw std::invalid_argument("lattice json: expected three columns");
    gens.push_back({r[0], r[1], r[2]});
  }
  return RationalLattice3(Lattice3::from_generators(std::span<const Vec3>(gens)), j.value("den", Int{1}));
}

json rotation_json(const RotMat3& r) {
  json out = json::array();
  for (std::size_t row = 0; row < 3; ++row) {
    json line = json::array();
    for (std::size_t c = 0; c < 3; ++c) line.push_back(rational_text(r.at(row, c)));
    out.push_back(line);
  }
  return out;
}

json csl_json(const CslRecord& rec) {
  json parts = json::array();
  for (const auto& part : decompose_csl(rec.generator)) {
    const auto f = factorize(part.norm());
    parts.push_back({{"p", f.front().first},
                     {"alpha", f.front().second},
                     {"quat", quat_json(part)},
                     {"lattice", lattice_json(csl_from_quaternion(part))}});
  }
  return {{"quat", quat_json(rec.generator)},
          {"sigma", rec.sigma},
          {"hnf", matrix_json(rec.lattice.basis())},
          {"ideal_hnf", matrix_json(rec.ideal_key.module.basis())},
          {"decomposition", parts}};
}

json mcsl_json(const McslRecord& rec) {
  json quats = json::array();
  for (const auto& q : rec.generators) quats.push_back(quat_json(q));
  json ideals = json::array();
  for (const auto& q : rec.generators) ideals.push_back(matrix_json(ideal_hnf(q).module.basis()));
  json parts = json::array();
  for (const auto& piece : rec.decomposition)
    parts.push_back({{"p", piece.prime}, {"alpha", piece.alpha}, {"lattice", lattice_json(piece.lattice)}});
  return {{"quat", quats},
          {"sigma", rec.sigma},
          {"hnf", matrix_json(rec.lattice.basis())},
          {"ideal_hnf", ideals},
          {"decomposition", parts}};
}

json report_json(const CountReport& r) {
  json wit = json::array();
  for (const auto& l : r.witnesses) wit.push_back(matrix_json(l.basis()));
  return {{"sigma", r.sigma},
          {"count", r.count},
          {"formula", rational_text(r.formula)},
          {"match", r.match},
          {"witnesses", wit},
          {"mismatches", r.mismatches}};
}

CountReport report_from_json(const json& j) {
  CountReport r;
  r.sigma = j.at("sigma").get<Int>();
  r.count = j.at("count").get<Int>();
  const auto text = j.at("formula").get<std::string>();
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("report json: formula must be num/den");
  r.formula = Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  r.match = j.at("match").get<bool>();
  for (const auto& w : j.at("witnesses")) {
    std::vector<Vec3> gens;
    for (const auto& row : w) gens.push_back(row.get<Vec3>());
    r.witnesses.push_back(Lattice3::from_generators(std::span<const Vec3>(gens)));
  }
  r.mismatches = j.at("mismatches");
  return r;
}

json lemma6_json(const Lemma6Report& r) {
  return {{"p", r.p},
          {"max_alpha", r.max_alpha},
          {"evaluated", r.evaluated},
          {"agreements", r.agreements},
          {"excluded", r.excluded},
          {"predicate_true", r.predicate_true},
          {"lattices_equal", r.lattices_equal},
          {"oracle_consistent", r.oracle_consistent},
          {"mismatch_count", r.mismatches.size()},
          {"mismatches", r.mismatches}};
}

}  // namespace mcsl
