#include "mcsl/census.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "mcsl/json_io.hpp"
#include "mcsl/parallel.hpp"

namespace mcsl {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Rational rpow(Int p, int e) {
  return e >= 0 ? Rational(ipow(p, e)) : Rational(1, ipow(p, -e));
}

// Floor of r / 2 and r / 3 for r >= 0.
int gauss(int num, int den) { return static_cast<int>(floor_div(num, den)); }

void require_odd_sigma(Int sigma, const char* what) {
  if (sigma < 1 || sigma % 2 == 0) throw std::invalid_argument(std::string(what) + ": sigma must be odd and positive");
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

void finish(CountReport& rep) {
  rep.match = rep.formula.denominator() == 1 && rep.formula.numerator() == rep.count;
  if (!rep.match)
    rep.mismatches.push_back({{"kind", "formula"},
                              {"expected", rational_text(rep.formula)},
                              {"enumerated", rep.count},
                              {"integral", rep.formula.denominator() == 1}});
}

}  // namespace

Int f_formula(Int sigma) {
  if (sigma < 1) throw std::invalid_argument("f_formula: sigma must be positive");
  if (sigma % 2 == 0) return 0;
  Int f = 1;
  for (const auto& [p, r] : factorize(sigma)) f = checked_mul(f, checked_mul(p + 1, ipow(p, r - 1)));
  return f;
}

Rational theorem2_eval(Int p, int r) {
  if (p <= 2 || !is_prime(p)) throw std::invalid_argument("theorem2_eval: p must be an odd prime");
  if (r < 1) throw std::invalid_argument("theorem2_eval: r must be positive");
  const Rational half_r(r, 2);
  const int r2 = gauss(r, 2);
  const int r3 = gauss(r, 3);
  const Rational p2m1(p * p - 1);
  Rational total = (half_r + Rational(1, 2)) * Rational(p + 1) * rpow(p, r - 1);
  total += (half_r - Rational(1)) * rpow(p, r - 2);
  total += (half_r - Rational(r2)) * rpow(p, r - 4);
  total += (rpow(p, r - 1) - rpow(p, r - 2 * r3 - 1)) / p2m1;
  total += (rpow(p, 4 * r3 - r + 2) - rpow(p, 4 * r2 - r - 2)) / (Rational(2) * p2m1);
  return total;
}

Rational f2_formula(Int sigma) {
  require_odd_sigma(sigma, "f2_formula");
  Rational f(1);
  if (sigma == 1) return f;
  for (const auto& [p, r] : factorize(sigma)) f *= theorem2_eval(p, r);
  return f;
}

CountReport census_csl(Int sigma, unsigned jobs) {
  require_odd_sigma(sigma, "census_csl");
  const auto t0 = Clock::now();
  const auto ideals = enumerate_ideals(sigma, jobs);
  const auto lattices = parallel_map(ideals.size(), jobs, [&](std::size_t n) { return csl_from_quaternion(ideals[n]); });
  CountReport rep;
  rep.sigma = sigma;
  std::set<Lattice3> distinct(lattices.begin(), lattices.end());
  for (const auto& l : distinct) {
    const Int idx = index_in(l, bcc_lattice());
    if (idx != sigma) rep.mismatches.push_back({{"kind", "index"}, {"hnf", matrix_json(l.basis())}, {"index", idx}});
  }
  rep.count = static_cast<Int>(distinct.size());
  rep.witnesses.assign(distinct.begin(), distinct.end());
  rep.formula = Rational(f_formula(sigma));
  finish(rep);
  if (!rep.mismatches.empty() && rep.match) rep.match = false;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

CountReport census_mcsl2(Int sigma, unsigned jobs) {
  require_odd_sigma(sigma, "census_mcsl2");
  const auto t0 = Clock::now();
  std::vector<HQuat> ideals;
  for (Int d : divisors(sigma)) {
    const auto part = enumerate_ideals(d, jobs);
    ideals.insert(ideals.end(), part.begin(), part.end());
  }
  const auto csls = parallel_map(ideals.size(), jobs, [&](std::size_t n) { return csl_from_quaternion(ideals[n]); });
  const Int gamma_det = bcc_lattice().determinant();
  const auto found = parallel_map(ideals.size(), jobs, [&](std::size_t a) {
    std::set<Lattice3> local;
    const Int na = ideals[a].norm();
    for (std::size_t b = a; b < ideals.size(); ++b) {
      // The MCSL index divides N(q1) N(q2).
      if (checked_mul(na, ideals[b].norm()) % sigma != 0) continue;
      Lattice3 l = intersect(csls[a], csls[b]);
      if (l.determinant() == checked_mul(sigma, gamma_det)) local.insert(std::move(l));
    }
    return local;
  });
  std::set<Lattice3> distinct;
  for (const auto& part : found) distinct.insert(part.begin(), part.end());
  CountReport rep;
  rep.sigma = sigma;
  rep.count = static_cast<Int>(distinct.size());
  rep.witnesses.assign(distinct.begin(), distinct.end());
  rep.formula = f2_formula(sigma);
  finish(rep);
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

bool lemma6_predicate(const AlphaProfile& a) {
  auto check = [](int ij, int i, int j) {
    if (ij < 0 || i < 0 || j < 0 || ij > std::min(i, j))
      throw std::invalid_argument("lemma6_predicate: pair valuation exceeds a single valuation");
  };
  check(a.a12, a.a1, a.a2);
  check(a.a13, a.a1, a.a3);
  check(a.a24, a.a2, a.a4);
  check(a.a34, a.a3, a.a4);
  if (a.a14) check(*a.a14, a.a1, a.a4);
  if (a.a23) check(*a.a23, a.a2, a.a3);
  auto holds = [&](int a13, int a24) {
    const int rhs = std::min(a.a4 - a.a34, a.a34);
    return a.a1 == a.a3 && a.a2 - a.a12 == a.a4 - a.a34 && a.a1 - a13 <= rhs && a.a2 - a24 <= rhs;
  };
  if (holds(a.a13, a.a24)) return true;
  // With a1 == a2 the roles of q1 and q2 may be interchanged.
  if (a.a1 == a.a2 && a.a14 && a.a23) return holds(*a.a23, *a.a14);
  return false;
}

Lemma6Report lemma6_oracle_compare(Int p, int max_alpha, unsigned jobs) {
  if (p <= 2 || !is_prime(p)) throw std::invalid_argument("lemma6_oracle_compare: p must be an odd prime");
  if (max_alpha < 1) throw std::invalid_argument("lemma6_oracle_compare: max_alpha must be positive");
  std::vector<HQuat> reps;
  std::vector<int> alpha;
  for (int a = 1; a <= max_alpha; ++a)
    for (const auto& q : enumerate_ideals(ipow(p, a), jobs)) {
      reps.push_back(q);
      alpha.push_back(a);
    }
  const std::size_t n = reps.size();
  std::vector<Lattice3> csls;
  for (const auto& q : reps) csls.push_back(csl_from_quaternion(q));

  // Pairwise gcld valuations and pair lattices, numbered by distinct HNF.
  std::vector<std::vector<int>> val(n, std::vector<int>(n));
  std::vector<std::vector<std::size_t>> key(n, std::vector<std::size_t>(n));
  std::map<Lattice3, std::size_t> ids;
  std::vector<Lattice3> pair_lattice;
  bool symmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      val[i][j] = valuation(gcld(reps[i], reps[j]).norm(), p);
      const Lattice3 l = intersect(csls[i], csls[j]);
      auto [it, fresh] = ids.try_emplace(l, ids.size());
      if (fresh) pair_lattice.push_back(l);
      key[i][j] = it->second;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) symmetric = symmetric && key[i][j] == key[j][i];

  Lemma6Report rep;
  rep.p = p;
  rep.max_alpha = max_alpha;
  bool consistent = symmetric;
  for (std::size_t x = 0; x < pair_lattice.size() && consistent; ++x)
    for (std::size_t y = x + 1; y < pair_lattice.size(); ++y)
      if (pair_lattice[x].contains(pair_lattice[y]) && pair_lattice[y].contains(pair_lattice[x])) {
        consistent = false;
        break;
      }
  rep.oracle_consistent = consistent;

  struct Tally {
    std::size_t evaluated = 0, agreements = 0, excluded = 0, predicate_true = 0, equal = 0;
    nlohmann::json mismatches = nlohmann::json::array();
  };
  const auto tallies = parallel_map(n, jobs, [&](std::size_t i1) {
    Tally t;
    for (std::size_t i2 = 0; i2 < n; ++i2)
      for (std::size_t i3 = 0; i3 < n; ++i3)
        for (std::size_t i4 = 0; i4 < n; ++i4) {
          const int a1 = alpha[i1], a2 = alpha[i2], a3 = alpha[i3], a4 = alpha[i4];
          const bool ordered = a1 >= a2 && a2 >= a4 && a3 >= a4;
          const bool proper = val[i1][i2] < std::min(a1, a2) && val[i3][i4] < std::min(a3, a4);
          if (!ordered || !proper) {
            ++t.excluded;
            continue;
          }
          AlphaProfile prof{a1, a2, a3, a4, val[i1][i2], val[i1][i3], val[i2][i4], val[i3][i4], val[i1][i4],
                            val[i2][i3]};
          const bool pred = lemma6_predicate(prof);
          const bool equal = key[i1][i2] == key[i3][i4];
          ++t.evaluated;
          if (pred) ++t.predicate_true;
          if (equal) ++t.equal;
          if (pred == equal) {
            ++t.agreements;
            continue;
          }
          t.mismatches.push_back(
              {{"quats", {quat_json(reps[i1]), quat_json(reps[i2]), quat_json(reps[i3]), quat_json(reps[i4])}},
               {"profile",
                {{"a1", a1}, {"a2", a2}, {"a3", a3}, {"a4", a4}, {"a12", prof.a12}, {"a13", prof.a13},
                 {"a24", prof.a24}, {"a34", prof.a34}, {"a14", *prof.a14}, {"a23", *prof.a23}}},
               {"predicate", pred},
               {"lattices_equal", equal},
               {"hnf_12", matrix_json(pair_lattice[key[i1][i2]].basis())},
               {"hnf_34", matrix_json(pair_lattice[key[i3][i4]].basis())}});
        }
    return t;
  });
  for (const auto& t : tallies) {
    rep.evaluated += t.evaluated;
    rep.agreements += t.agreements;
    rep.excluded += t.excluded;
    rep.predicate_true += t.predicate_true;
    rep.lattices_equal += t.equal;
    for (const auto& m : t.mismatches) rep.mismatches.push_back(m);
  }
  return rep;
}

std::vector<MultiplicativityRow> multiplicativity_check(const std::vector<std::pair<Int, Int>>& pairs, unsigned jobs) {
  for (const auto& [m, n] : pairs) {
    if (m < 1 || n < 1 || m % 2 == 0 || n % 2 == 0)
      throw std::invalid_argument("multiplicativity_check: arguments must be odd and positive");
    if (std::gcd(m, n) != 1) throw std::invalid_argument("multiplicativity_check: arguments are not coprime");
  }
  std::map<Int, Int> memo;
  auto count = [&](Int s) {
    auto it = memo.find(s);
    if (it == memo.end()) it = memo.emplace(s, census_mcsl2(s, jobs).count).first;
    return it->second;
  };
  std::vector<MultiplicativityRow> out;
  for (const auto& [m, n] : pairs) {
    MultiplicativityRow row{m, n, count(m), count(n), count(m * n), false};
    row.holds = row.count_mn == row.count_m * row.count_n;
    out.push_back(row);
  }
  return out;
}

std::optional<ReportCache> ReportCache::from_env() {
  const char* dir = std::getenv("MCSL_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return ReportCache(dir);
}

std::optional<nlohmann::json> ReportCache::load(const std::string& key) const {
  const auto path = dir_ / (key + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ReportCache::store(const std::string& key, const nlohmann::json& payload) const {
  std::filesystem::create_directories(dir_);
  std::random_device rd;
  std::ostringstream tmp_name;
  tmp_name << key << ".json.tmp." << std::hex << rd() << std::this_thread::get_id();
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << payload.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, dir_ / (key + ".json"));
}

}  // namespace mcsl
