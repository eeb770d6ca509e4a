#pragma once

// Integer (Hurwitz) quaternions in doubled coordinates.
//
// A value stores d = 2q, so q = (d0, d1, d2, d3) / 2 in (kappa, lambda, mu, nu)
// order. The Hurwitz condition is d0 = d1 = d2 = d3 (mod 2): all components
// of q integral, or all half-integral.

#include <array>
#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mcsl/arith.hpp"
#include "mcsl/zlattice.hpp"

namespace mcsl {

class HQuat {
 public:
  using Doubled = std::array<Int, 4>;

  constexpr HQuat() = default;

  /// Throws std::invalid_argument when the parities differ.
  static HQuat from_doubled(Int d0, Int d1, Int d2, Int d3);
  static HQuat from_doubled(const Doubled& d) { return from_doubled(d[0], d[1], d[2], d[3]); }
  /// Integral quaternion kappa + lambda i + mu j + nu k.
  static HQuat integral(Int kappa, Int lambda, Int mu, Int nu);

  static HQuat one() { return integral(1, 0, 0, 0); }
  static HQuat i() { return integral(0, 1, 0, 0); }
  static HQuat j() { return integral(0, 0, 1, 0); }
  static HQuat k() { return integral(0, 0, 0, 1); }
  /// (1 + i + j + k) / 2
  static HQuat omega() { return from_doubled(1, 1, 1, 1); }

  const Doubled& doubled() const { return d_; }
  Int operator[](std::size_t n) const { return d_[n]; }

  Int norm() const;
  HQuat conj() const { return HQuat{{d_[0], -d_[1], -d_[2], -d_[3]}}; }
  bool is_zero() const { return d_[0] == 0 && d_[1] == 0 && d_[2] == 0 && d_[3] == 0; }
  bool is_lipschitz() const { return d_[0] % 2 == 0; }
  bool is_unit() const { return norm() == 1; }

  /// Largest natural m with q/m in H; zero for the zero quaternion.
  Int content() const;
  bool is_primitive() const { return content() == 1; }
  /// Component-gcd primitivity of an integral quaternion (false for
  /// half-integral values).
  bool is_primitive_integral() const;

  /// q / m; throws std::domain_error if the result is not a Hurwitz integer.
  HQuat divide_exact(Int m) const;
  /// True when q / m is a Hurwitz integer.
  bool divisible_by(Int m) const;

  HQuat operator-() const { return HQuat{{-d_[0], -d_[1], -d_[2], -d_[3]}}; }
  friend HQuat operator+(const HQuat& a, const HQuat& b);
  friend HQuat operator-(const HQuat& a, const HQuat& b);
  friend HQuat operator*(const HQuat& a, const HQuat& b);
  friend HQuat operator*(Int s, const HQuat& a);

  friend bool operator==(const HQuat&, const HQuat&) = default;
  /// Lexicographic on doubled coordinates.
  friend std::strong_ordering operator<=>(const HQuat& a, const HQuat& b) { return a.d_ <=> b.d_; }

  /// "d0,d1,d2,d3"
  std::string to_string() const;

 private:
  explicit constexpr HQuat(const Doubled& d) : d_(d) {}
  Doubled d_{0, 0, 0, 0};
};

std::ostream& operator<<(std::ostream& os, const HQuat& q);

/// Hurwitz units: 8 of the form +-1, +-i, +-j, +-k and 16 of the form
/// (+-1 +-i +-j +-k)/2, in ascending doubled order.
const std::array<HQuat, 24>& hurwitz_units();

/// Smallest right associate q*u (u a unit) in doubled lexicographic order
/// among those whose first nonzero coordinate is positive.
HQuat canonical_associate(const HQuat& q);

/// Sign normalisation only: q or -q, whichever has a positive first nonzero
/// coordinate.
HQuat sign_normalized(const HQuat& q);

/// True if d is a left divisor of a, i.e. a = d x for a Hurwitz integer x.
bool left_divides(const HQuat& d, const HQuat& a);

/// Quotient and remainder with a = b * quotient + remainder and
/// N(remainder) < N(b).
struct DivMod {
  HQuat quotient;
  HQuat remainder;
};

/// Throws std::domain_error for b == 0.
DivMod right_divmod(const HQuat& a, const HQuat& b);

/// Greatest common left divisor, canonical associate. Throws for (0, 0).
HQuat gcld(const HQuat& a, const HQuat& b);

/// Least common right multiple (generator of aH intersected with bH),
/// canonical associate. Not necessarily primitive. Throws for a zero argument.
HQuat lcrm(const HQuat& a, const HQuat& b);

/// Left p-primary part gcld(q, p^alpha) of a primitive q with p^alpha || N(q).
HQuat left_prime_part(const HQuat& q, Int p);

/// q = a_1 * ... * a_l with N(a_i) = p_i^alpha_i, ascending p_i. Empty for
/// units.
std::vector<HQuat> left_prime_decomposition(const HQuat& q);

/// Primitive odd-norm q' with R(q') = R(q) Q for Q in the cubic group.
HQuat make_odd(const HQuat& q);

/// 4x4 HNF of the module qH in doubled coordinates; the left ideal key.
struct IdealHNF4 {
  Lattice<4> module;

  friend bool operator==(const IdealHNF4&, const IdealHNF4&) = default;
  friend auto operator<=>(const IdealHNF4& a, const IdealHNF4& b) { return a.module <=> b.module; }
};

/// The generators q, qi, qj, q*omega of qH as doubled 4-vectors.
std::array<Vec<4>, 4> ideal_generators(const HQuat& q);

IdealHNF4 ideal_hnf(const HQuat& q);

/// One canonical primitive generator per left ideal of norm n (n odd),
/// ordered by IdealHNF4. `jobs` bounds the worker threads.
std::vector<HQuat> enumerate_ideals(Int n, unsigned jobs = 1);

/// All Hurwitz quaternions (doubled 4-tuples) of norm n, ascending order.
std::vector<HQuat> quaternions_of_norm(Int n);

/// Parses "d0,d1,d2,d3" (doubled), or "(k l m n)" / "(k l m n)/2". With
/// `half` the comma form holds actual components (k,l,m,n).
HQuat parse_quaternion(const std::string& text, bool half = false);

}  // namespace mcsl
