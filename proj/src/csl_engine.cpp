#include "mcsl/csl_engine.hpp"

#include <algorithm>

namespace mcsl {

namespace {

void require_odd_primitive(const HQuat& q, const char* what) {
  if (!q.is_primitive()) throw std::invalid_argument(std::string(what) + ": quaternion is not primitive");
  if (q.norm() % 2 == 0) throw std::invalid_argument(std::string(what) + ": norm must be odd (apply make_odd)");
}

// Both norms powers of one odd prime, neither quaternion a right multiple of
// the other.
void require_prime_power_pair(const HQuat& q1, const HQuat& q2, const char* what) {
  require_odd_primitive(q1, what);
  require_odd_primitive(q2, what);
  const auto f1 = factorize(q1.norm());
  const auto f2 = factorize(q2.norm());
  if (f1.size() != 1 || f2.size() != 1 || f1[0].first != f2[0].first)
    throw std::invalid_argument(std::string(what) + ": norms must be powers of the same prime");
  if (is_right_multiple(q1, q2) || is_right_multiple(q2, q1))
    throw std::invalid_argument(std::string(what) + ": one quaternion is a right multiple of the other");
}

std::vector<HQuat> ideal_span(const HQuat& q) {
  return {q, q * HQuat::i(), q * HQuat::j(), q * HQuat::omega()};
}

}  // namespace

Lattice3 projected_lattice(std::span<const HQuat> quats) {
  std::vector<Vec3> gens;
  gens.reserve(quats.size());
  for (const auto& q : quats) gens.push_back(project(q));
  return Lattice3::from_generators(std::span<const Vec3>(gens));
}

Lattice3 projected_ideal(const HQuat& q) {
  if (q.is_zero()) throw std::domain_error("projected_ideal of the zero quaternion");
  const auto span = ideal_span(q);
  return projected_lattice(span);
}

Lattice3 csl_from_quaternion(const HQuat& q) {
  require_odd_primitive(q, "csl_from_quaternion");
  return projected_ideal(q);
}

Lattice3 csl_geometric(const HQuat& q) {
  const RationalLattice3 gamma(bcc_lattice());
  return intersect(gamma, rotate(rotation_matrix(q), bcc_lattice())).integral();
}

CslRecord csl_record(const HQuat& q) {
  const Lattice3 l = csl_from_quaternion(q);
  return CslRecord{q, l, index_in(l, bcc_lattice()), ideal_hnf(q)};
}

McslRecord multiple_csl(std::span<const HQuat> qs) {
  Lattice3 l = bcc_lattice();
  for (const auto& q : qs) l = intersect(l, csl_from_quaternion(q));
  const Int s = index_in(l, bcc_lattice());
  return McslRecord{{qs.begin(), qs.end()}, l, s, decompose_mcsl(l)};
}

Int sigma_plus(const HQuat& q1, const HQuat& q2) {
  return index_in(sum(csl_from_quaternion(q1), csl_from_quaternion(q2)), bcc_lattice());
}

Int sigma_multi_recursive(std::span<const HQuat> qs) {
  Lattice3 partial = bcc_lattice();
  Int s = 1;
  for (const auto& q : qs) {
    const Lattice3 c = csl_from_quaternion(q);
    const Int plus = index_in(sum(partial, c), bcc_lattice());
    const Int num = checked_mul(s, index_in(c, bcc_lattice()));
    if (num % plus != 0) throw std::logic_error("sigma recursion produced a non-integral index");
    s = num / plus;
    partial = intersect(partial, c);
  }
  return s;
}

Int sigma_multi(std::span<const HQuat> qs) {
  Lattice3 l = bcc_lattice();
  for (const auto& q : qs) l = intersect(l, csl_from_quaternion(q));
  const Int direct = index_in(l, bcc_lattice());
  if (direct != sigma_multi_recursive(qs)) throw std::logic_error("sigma_multi: recursion disagrees with direct index");
  return direct;
}

HQuat lemma1_compose(const HQuat& q1, const HQuat& q2) {
  require_odd_primitive(q1, "lemma1_compose");
  require_odd_primitive(q2, "lemma1_compose");
  if (std::gcd(q1.norm(), q2.norm()) != 1) throw std::invalid_argument("lemma1_compose: norms are not coprime");
  const HQuat q = lcrm(q1, q2);
  if (q.norm() != q1.norm() * q2.norm() || !q.is_primitive())
    throw std::logic_error("lemma1_compose: lcrm of coprime norms is not primitive of full norm");
  return q;
}

std::vector<HQuat> decompose_csl(const HQuat& q) {
  require_odd_primitive(q, "decompose_csl");
  std::vector<HQuat> out;
  if (q.norm() == 1) return out;
  for (const auto& [p, alpha] : factorize(q.norm())) out.push_back(left_prime_part(q, p));
  return out;
}

std::vector<PrimePiece> decompose_mcsl(const Lattice3& lambda) {
  const Int s = index_in(lambda, bcc_lattice());
  if (s % 2 == 0) throw std::invalid_argument("decompose_mcsl: index must be odd");
  std::vector<PrimePiece> out;
  if (s == 1) return out;
  for (const auto& [p, alpha] : factorize(s)) {
    const Lattice3 piece = sum(lambda, bcc_lattice().scaled(ipow(p, alpha)));
    out.push_back(PrimePiece{p, alpha, piece});
  }
  return out;
}

bool is_right_multiple(const HQuat& a, const HQuat& b) { return left_divides(b, a); }

RSearch find_r_search(const HQuat& q1, const HQuat& q2) {
  require_prime_power_pair(q1, q2, "find_r");
  const HQuat right = q2.conj();
  RSearch out;
  const Int cap = checked_mul(4, checked_mul(q1.norm(), q2.norm()));
  for (Int n = 1; n <= cap; ++n) {
    auto cands = quaternions_of_norm(n);
    std::sort(cands.begin(), cands.end(), [](const HQuat& a, const HQuat& b) { return b < a; });
    for (const auto& r : cands) {
      if (!(sign_normalized(r) == r)) continue;
      if ((q1 * r * right).is_primitive()) {
        out.r = r;
        return out;
      }
      out.rejected.push_back(r);
    }
  }
  throw std::logic_error("find_r: no admissible r below the search cap");
}

HQuat find_r(const HQuat& q1, const HQuat& q2) { return find_r_search(q1, q2).r; }

Lattice3 lemma4_lattice(const HQuat& q1, const HQuat& q2) {
  const HQuat r = find_r(q1, q2);
  auto gens = ideal_span(lcrm(q1, q2));
  gens.push_back(q1 * r * q2.conj());
  return projected_lattice(gens);
}

Lattice3 lemma5_lattice(const HQuat& q1, const HQuat& q2, bool swapped) {
  require_prime_power_pair(q1, q2, "lemma5_lattice");
  auto gens = ideal_span(lcrm(q1, q2));
  const HQuat& left = swapped ? q2 : q1;
  const HQuat right = (swapped ? q1 : q2).conj();
  for (const auto& b : {HQuat::one(), HQuat::i(), HQuat::j(), HQuat::omega()}) gens.push_back(left * b * right);
  return projected_lattice(gens);
}

Vec3 lemma5_quotient(const HQuat& q1, const HQuat& q2) {
  return smith_quotient(projected_ideal(lcrm(q1, q2)), lemma5_lattice(q1, q2));
}

}  // namespace mcsl
