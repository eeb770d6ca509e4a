#pragma once

// Coincidence site lattices (CSLs) and multiple CSLs of the BCC lattice.
//
// The BCC lattice is the projection P(H) of the Hurwitz order onto its pure
// part, and the CSL of R(q) for a primitive odd-norm q is P(qH). Everything
// here works in doubled coordinates, so the projection of a quaternion is just
// its last three doubled coordinates.

#include <span>
#include <vector>

#include "mcsl/hquat.hpp"
#include "mcsl/rot3.hpp"
#include "mcsl/zlattice.hpp"

namespace mcsl {

struct CslRecord {
  HQuat generator;
  Lattice3 lattice;
  Int sigma = 1;
  IdealHNF4 ideal_key;
};

/// Component of a prime-power decomposition Lambda = Gamma_1 cap ... cap Gamma_l.
struct PrimePiece {
  Int prime = 0;
  int alpha = 0;
  Lattice3 lattice;
};

struct McslRecord {
  std::vector<HQuat> generators;
  Lattice3 lattice;
  Int sigma = 1;
  std::vector<PrimePiece> decomposition;
};

inline Vec3 project(const HQuat& q) { return {q[1], q[2], q[3]}; }

/// HNF of the projections of the given quaternions.
Lattice3 projected_lattice(std::span<const HQuat> quats);

/// P(qH) for any nonzero q (not necessarily primitive).
Lattice3 projected_ideal(const HQuat& q);

/// Requires q primitive with odd norm.
Lattice3 csl_from_quaternion(const HQuat& q);

/// Gamma cap R(q) Gamma by rational lattice intersection.
Lattice3 csl_geometric(const HQuat& q);

CslRecord csl_record(const HQuat& q);

/// Intersection of the CSLs of all generators; Gamma for an empty list.
McslRecord multiple_csl(std::span<const HQuat> qs);

/// Index of CSL(q1) + CSL(q2) in Gamma.
Int sigma_plus(const HQuat& q1, const HQuat& q2);

/// Index of the MCSL. Also evaluates the recursion over partial sums and
/// throws std::logic_error if the two disagree.
Int sigma_multi(std::span<const HQuat> qs);

/// Sigma(R1..Rm) = Sigma(R1..R(m-1)) Sigma(Rm) / Sigma_+(R1..R(m-1); Rm).
Int sigma_multi_recursive(std::span<const HQuat> qs);

/// lcrm of two quaternions with coprime odd norms; its CSL is the MCSL.
HQuat lemma1_compose(const HQuat& q1, const HQuat& q2);

/// Left prime-power parts q_i of q, ascending primes. The CSL of q is the
/// intersection of their CSLs.
std::vector<HQuat> decompose_csl(const HQuat& q);

/// Lambda + p^alpha Gamma for each p^alpha || [Gamma : Lambda]. Requires an odd index.
std::vector<PrimePiece> decompose_mcsl(const Lattice3& lambda);

/// True if a = b r for some Hurwitz integer r.
bool is_right_multiple(const HQuat& a, const HQuat& b);

struct RSearch {
  HQuat r;
  /// Candidates examined and rejected before r, in search order.
  std::vector<HQuat> rejected;
};

/// First r in (norm ascending, doubled coordinates descending, sign
/// normalised) order with q1 r conj(q2) primitive.
RSearch find_r_search(const HQuat& q1, const HQuat& q2);
HQuat find_r(const HQuat& q1, const HQuat& q2);

/// P(qH + q1 r conj(q2) Z), q = lcrm(q1, q2).
Lattice3 lemma4_lattice(const HQuat& q1, const HQuat& q2);

/// P(qH + q1 H conj(q2)), or P(qH + q2 H conj(q1)) when `swapped`.
Lattice3 lemma5_lattice(const HQuat& q1, const HQuat& q2, bool swapped = false);

/// Invariant factors of lemma5_lattice / P(qH).
Vec3 lemma5_quotient(const HQuat& q1, const HQuat& q2);

}  // namespace mcsl
