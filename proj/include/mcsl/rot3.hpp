#pragma once

// Exact rational rotations generated by quaternions, the cubic rotation
// group, and strong equivalence.

#include <array>
#include <string>

#include "mcsl/arith.hpp"
#include "mcsl/hquat.hpp"
#include "mcsl/zlattice.hpp"

namespace mcsl {

/// numer / den in lowest terms (den > 0, gcd of all entries with den is 1).
class RotMat3 {
 public:
  /// Identity.
  RotMat3() : m_{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}, den_(1) {}
  RotMat3(const Mat3& numer, Int den);

  static RotMat3 identity() { return RotMat3(); }

  const Mat3& numerator() const { return m_; }
  Int denominator() const { return den_; }
  Rational at(std::size_t r, std::size_t c) const { return Rational(m_[r][c], den_); }

  bool is_orthogonal() const;
  /// det = +1 and orthogonal.
  bool is_rotation() const;
  RotMat3 transpose() const { return RotMat3(transposed(m_), den_); }

  friend RotMat3 operator*(const RotMat3& a, const RotMat3& b);
  friend bool operator==(const RotMat3&, const RotMat3&) = default;
  friend auto operator<=>(const RotMat3& a, const RotMat3& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.m_ <=> b.m_;
  }

  /// Row-major "a/b" entries separated by spaces, rows by ';'.
  std::string to_string() const;

 private:
  static Mat3 transposed(const Mat3& m);
  Mat3 m_;
  Int den_;
};

/// Rotation R(q) = (matrix quadratic in q) / |q|^2. Throws for q == 0.
RotMat3 rotation_matrix(const HQuat& q);

/// Coincidence index of R(q): the odd part of N(q). Accepts q primitive as a
/// Hurwitz integer or as an integral quaternion.
Int sigma(const HQuat& q);

/// Primitive, sign-normalised q with R(q) = m. Throws std::invalid_argument
/// if m is not a rational rotation.
HQuat quaternion_from_rotation(const RotMat3& m);

/// The 24 proper rotations of the cube, sorted.
const std::array<RotMat3, 24>& cubic_group();

/// True if R(q) lies in the cubic group.
bool is_cubic_rotation(const HQuat& q);

/// R(q1) = R(q2) Q for Q in the cubic group, decided at quaternion level.
bool strongly_equivalent(const HQuat& q1, const HQuat& q2);

/// Same predicate by comparing against all 24 matrices.
bool strongly_equivalent_by_matrix(const HQuat& q1, const HQuat& q2);

/// R applied to the row vectors of a lattice basis (x -> R x).
RationalLattice3 rotate(const RotMat3& r, const Lattice3& l);

/// Parses the text form produced by RotMat3::to_string (integers allowed).
RotMat3 parse_rotation(const std::string& text);

}  // namespace mcsl
