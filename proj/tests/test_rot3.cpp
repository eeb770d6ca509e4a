#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mcsl/rot3.hpp"

using namespace mcsl;

namespace {

HQuat Q(Int a, Int b, Int c, Int d) { return HQuat::integral(a, b, c, d); }

HQuat random_hurwitz(std::mt19937_64& rng, Int radius) {
  std::uniform_int_distribution<Int> c(-radius, radius);
  const Int parity = static_cast<Int>(rng() & 1);
  return HQuat::from_doubled(2 * c(rng) + parity, 2 * c(rng) + parity, 2 * c(rng) + parity, 2 * c(rng) + parity);
}

// Textbook rotation formula in actual components, evaluated with rationals.
std::array<std::array<Rational, 3>, 3> reference_rotation(const HQuat& q) {
  const Rational k(q[0], 2), l(q[1], 2), m(q[2], 2), n(q[3], 2);
  const Rational s = k * k + l * l + m * m + n * n;
  return {{{(k * k + l * l - m * m - n * n) / s, 2 * (l * m - k * n) / s, 2 * (l * n + k * m) / s},
           {2 * (l * m + k * n) / s, (k * k - l * l + m * m - n * n) / s, 2 * (m * n - k * l) / s},
           {2 * (l * n - k * m) / s, 2 * (m * n + k * l) / s, (k * k - l * l - m * m + n * n) / s}}};
}

}  // namespace

TEST(Rot3, RotationExamples) {
  EXPECT_EQ(rotation_matrix(Q(1, 0, 0, 0)), RotMat3::identity());
  EXPECT_EQ(rotation_matrix(Q(0, 1, 1, 0)), RotMat3(Mat3{Vec3{0, 1, 0}, Vec3{1, 0, 0}, Vec3{0, 0, -1}}, 1));
  EXPECT_EQ(rotation_matrix(Q(1, 1, 1, 0)), RotMat3(Mat3{Vec3{1, 2, 2}, Vec3{2, 1, -2}, Vec3{-2, 2, -1}}, 3));
  EXPECT_THROW(rotation_matrix(HQuat()), std::domain_error);
}

TEST(Rot3, MatchesReferenceFormula) {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 2000; ++n) {
    const HQuat q = random_hurwitz(rng, 7);
    if (q.is_zero()) continue;
    const RotMat3 r = rotation_matrix(q);
    const auto ref = reference_rotation(q);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) ASSERT_EQ(r.at(i, j), ref[i][j]);
    EXPECT_TRUE(r.is_rotation());
  }
}

TEST(Rot3, Homomorphism) {
  std::mt19937_64 rng(22);
  for (int n = 0; n < 2000; ++n) {
    const HQuat a = random_hurwitz(rng, 5), b = random_hurwitz(rng, 5);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(rotation_matrix(a * b), rotation_matrix(a) * rotation_matrix(b));
    EXPECT_EQ(rotation_matrix(a.conj()), rotation_matrix(a).transpose());
  }
}

TEST(Rot3, SigmaExamples) {
  EXPECT_EQ(sigma(Q(1, 1, 1, 0)), 3);
  EXPECT_EQ(sigma(Q(1, 1, 0, 0)), 1);
  EXPECT_EQ(sigma(Q(1, 3, 1, 1)), 3);
  EXPECT_THROW(sigma(Q(2, 2, 2, 0)), std::invalid_argument);
}

TEST(Rot3, InverseExamples) {
  EXPECT_EQ(quaternion_from_rotation(RotMat3::identity()), Q(1, 0, 0, 0));
  EXPECT_EQ(quaternion_from_rotation(RotMat3(Mat3{Vec3{0, 1, 0}, Vec3{1, 0, 0}, Vec3{0, 0, -1}}, 1)), Q(0, 1, 1, 0));
  EXPECT_EQ(quaternion_from_rotation(RotMat3(Mat3{Vec3{1, 2, 2}, Vec3{2, 1, -2}, Vec3{-2, 2, -1}}, 3)), Q(1, 1, 1, 0));
  EXPECT_THROW(quaternion_from_rotation(RotMat3(Mat3{Vec3{1, 1, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}, 1)),
               std::invalid_argument);
  EXPECT_THROW(quaternion_from_rotation(RotMat3(Mat3{Vec3{-1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}, 1)),
               std::invalid_argument);
}

TEST(Rot3, InverseRoundTripExhaustive) {
  for (Int n = 1; n <= 99; n += 2)
    for (const auto& q : quaternions_of_norm(n)) {
      if (!q.is_primitive()) continue;
      ASSERT_EQ(quaternion_from_rotation(rotation_matrix(q)), sign_normalized(q)) << q;
    }
}

TEST(Rot3, CubicGroupIsSignedPermutations) {
  std::set<RotMat3> expected;
  const std::array<std::array<std::size_t, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& p : perms)
    for (int signs = 0; signs < 8; ++signs) {
      Mat3 m{};
      for (std::size_t r = 0; r < 3; ++r) m[r][p[r]] = (signs >> r) & 1 ? -1 : 1;
      const RotMat3 rm(m, 1);
      if (rm.is_rotation()) expected.insert(rm);
    }
  const auto& group = cubic_group();
  EXPECT_EQ(std::set<RotMat3>(group.begin(), group.end()), expected);
  EXPECT_TRUE(std::is_sorted(group.begin(), group.end()));
  for (const auto& a : group)
    for (const auto& b : group) EXPECT_TRUE(expected.contains(a * b));
}

TEST(Rot3, CubicQuaternions) {
  EXPECT_TRUE(is_cubic_rotation(Q(1, 1, 0, 0)));
  EXPECT_TRUE(is_cubic_rotation(HQuat::omega()));
  EXPECT_FALSE(is_cubic_rotation(Q(1, 1, 1, 0)));
}

TEST(Rot3, StrongEquivalenceExamples) {
  const HQuat q = Q(1, 2, 3, 1);
  for (const auto& u : hurwitz_units()) EXPECT_TRUE(strongly_equivalent(q, q * u));
  EXPECT_TRUE(strongly_equivalent(Q(1, 0, 0, 0), Q(1, 1, 0, 0)));
  EXPECT_FALSE(strongly_equivalent(Q(1, 1, 1, 0), Q(1, 0, 0, 0)));
}

TEST(Rot3, StrongEquivalenceAgreesWithMatrices) {
  std::mt19937_64 rng(23);
  int positives = 0;
  for (int n = 0; n < 3000; ++n) {
    const HQuat a = random_hurwitz(rng, 3);
    HQuat b = random_hurwitz(rng, 3);
    if (n % 3 == 0) b = a * Q(1, rng() & 1 ? 1 : -1, 0, 0) * hurwitz_units()[rng() % 24];
    if (a.is_zero() || b.is_zero()) continue;
    const bool s = strongly_equivalent(a, b);
    EXPECT_EQ(s, strongly_equivalent_by_matrix(a, b)) << a << ' ' << b;
    positives += s;
  }
  EXPECT_GT(positives, 500);
}

TEST(Rot3, RotateCubicFixesBcc) {
  for (const auto& g : cubic_group()) EXPECT_EQ(rotate(g, bcc_lattice()), RationalLattice3(bcc_lattice()));
  const RationalLattice3 r = rotate(rotation_matrix(Q(1, 1, 1, 0)), bcc_lattice());
  EXPECT_EQ(r.denominator(), 3);
}

TEST(Rot3, TextRoundTrip) {
  const RotMat3 r = rotation_matrix(Q(1, 1, 1, 0));
  EXPECT_EQ(parse_rotation(r.to_string()), r);
  EXPECT_EQ(parse_rotation("1 0 0; 0 1 0; 0 0 1"), RotMat3::identity());
  EXPECT_THROW(parse_rotation("1 0 0; 0 1 0"), std::invalid_argument);
  EXPECT_THROW(parse_rotation("1 0 0; 0 1 0; 0 0 x"), std::invalid_argument);
}
