#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mcsl/zlattice.hpp"

using namespace mcsl;

namespace {

Lattice3 gen(std::initializer_list<Vec3> v) { return Lattice3::from_generators(v); }

// Membership by brute force over a coefficient box; independent of the HNF code.
bool spans(const std::vector<Vec3>& gens, const Vec3& v, Int box) {
  if (gens.size() != 3) return false;
  for (Int a = -box; a <= box; ++a)
    for (Int b = -box; b <= box; ++b)
      for (Int c = -box; c <= box; ++c) {
        Vec3 w{};
        for (std::size_t k = 0; k < 3; ++k) w[k] = a * gens[0][k] + b * gens[1][k] + c * gens[2][k];
        if (w == v) return true;
      }
  return false;
}

}  // namespace

TEST(ZLattice, HnfOfBccGenerators) {
  const Lattice3 l = gen({{2, 0, 0}, {0, 2, 0}, {1, 1, 1}});
  EXPECT_EQ(l.basis(), (Mat3{Vec3{1, 1, 1}, Vec3{0, 2, 0}, Vec3{0, 0, 2}}));
  EXPECT_EQ(l, bcc_lattice());
  EXPECT_EQ(l.determinant(), 4);
}

TEST(ZLattice, HnfOfProjectedIdeal) {
  const Lattice3 l = gen({{2, 2, 0}, {2, 0, -2}, {0, 2, 2}, {3, 1, 1}});
  EXPECT_EQ(l.basis(), (Mat3{Vec3{1, 1, 3}, Vec3{0, 2, 2}, Vec3{0, 0, 6}}));
}

TEST(ZLattice, HnfOrderIndependent) {
  std::vector<Vec3> g{{2, 0, 0}, {0, 2, 0}, {1, 1, 1}};
  std::sort(g.begin(), g.end());
  do {
    EXPECT_EQ(Lattice3::from_generators(std::span<const Vec3>(g)), bcc_lattice());
  } while (std::next_permutation(g.begin(), g.end()));
}

TEST(ZLattice, RankDeficientThrows) {
  EXPECT_THROW(gen({{1, 0, 0}, {2, 0, 0}, {0, 1, 0}}), std::invalid_argument);
  EXPECT_THROW(gen({{1, 2, 3}, {2, 4, 6}}), std::invalid_argument);
}

TEST(ZLattice, HnfShapeAndSpan) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> c(-4, 4);
  int checked = 0;
  while (checked < 200) {
    std::vector<Vec3> g(3);
    for (auto& v : g) v = {c(rng), c(rng), c(rng)};
    Lattice3 l;
    try {
      l = Lattice3::from_generators(std::span<const Vec3>(g));
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++checked;
    const auto& b = l.basis();
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_GT(b[i][i], 0);
      for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(b[i][j], 0);
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(b[k][i], 0);
        EXPECT_LT(b[k][i], b[i][i]);
      }
    }
    for (const auto& v : g) EXPECT_TRUE(l.contains(v));
    // |det| of the generators equals the HNF determinant.
    const Int det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                    g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                    g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    EXPECT_EQ(l.determinant(), abs_int(det));
  }
}

TEST(ZLattice, ContainsAgreesWithBruteForce) {
  const std::vector<Vec3> g{{2, 2, 0}, {2, 0, -2}, {3, 1, 1}};
  const Lattice3 l = Lattice3::from_generators(std::span<const Vec3>(g));
  for (Int x = -4; x <= 4; ++x)
    for (Int y = -4; y <= 4; ++y)
      for (Int z = -4; z <= 4; ++z) EXPECT_EQ(l.contains(Vec3{x, y, z}), spans(g, {x, y, z}, 8));
}

TEST(ZLattice, IntersectAndSum) {
  const Lattice3 g = bcc_lattice();
  const Lattice3 g3 = g.scaled(3), g5 = g.scaled(5);
  EXPECT_EQ(intersect(g, g), g);
  EXPECT_EQ(intersect(g, g3), g3);
  EXPECT_EQ(sum(g, g), g);
  EXPECT_EQ(sum(g3, g5), g);
  EXPECT_EQ(intersect(g3, g5), g.scaled(15));
  const Lattice3 a = gen({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  const Lattice3 b = gen({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(intersect(a, b), gen({{2, 0, 0}, {0, 2, 0}, {0, 0, 1}}));
  EXPECT_EQ(sum(a, b), Lattice3::scalar(1));
}

TEST(ZLattice, IntersectionMembershipBruteForce) {
  const Lattice3 a = gen({{1, 1, 3}, {0, 2, 2}, {0, 0, 6}});
  const Lattice3 b = gen({{1, 1, 1}, {0, 2, 0}, {0, 0, 10}});
  const Lattice3 m = intersect(a, b);
  for (Int x = -12; x <= 12; ++x)
    for (Int y = -12; y <= 12; ++y)
      for (Int z = -12; z <= 12; ++z) {
        const Vec3 v{x, y, z};
        EXPECT_EQ(m.contains(v), a.contains(v) && b.contains(v));
      }
}

TEST(ZLattice, DualInvolution) {
  const Lattice3 l = gen({{1, 1, 3}, {0, 2, 2}, {0, 0, 6}});
  EXPECT_EQ(dual(dual(l)), RationalLattice3(l));
  const RationalLattice3 d = dual(bcc_lattice());
  // Dual vectors pair integrally with every lattice vector.
  for (const auto& u : d.numerator().basis())
    for (const auto& v : bcc_lattice().basis()) {
      Int dot = 0;
      for (std::size_t k = 0; k < 3; ++k) dot += u[k] * v[k];
      EXPECT_EQ(dot % d.denominator(), 0);
    }
}

TEST(ZLattice, RationalLatticeNormalises) {
  const RationalLattice3 r(Lattice3::scalar(6), 4);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.numerator(), Lattice3::scalar(3));
  EXPECT_THROW((void)RationalLattice3(Lattice3::scalar(1), 2).integral(), std::domain_error);
}

TEST(ZLattice, IndexExamples) {
  const Lattice3 g = bcc_lattice();
  EXPECT_EQ(index_in(g.scaled(3), g), 27);
  EXPECT_EQ(index_in(gen({{1, 1, 3}, {0, 2, 2}, {0, 0, 6}}), g), 3);
  EXPECT_EQ(index_in(g, g), 1);
  EXPECT_THROW(index_in(Lattice3::scalar(1), g), std::invalid_argument);
}

TEST(ZLattice, SmithExamples) {
  const Lattice3 g = bcc_lattice();
  EXPECT_EQ(smith_quotient(g.scaled(3), g), (Vec3{3, 3, 3}));
  EXPECT_EQ(smith_quotient(gen({{1, 1, 3}, {0, 2, 2}, {0, 0, 6}}), g), (Vec3{1, 1, 3}));
  EXPECT_EQ(smith_quotient(g, g), (Vec3{1, 1, 1}));
  EXPECT_EQ(smith_quotient(gen({{2, 0, 0}, {0, 6, 0}, {0, 0, 1}}), Lattice3::scalar(1)), (Vec3{1, 2, 6}));
  EXPECT_THROW(smith_quotient(Lattice3::scalar(1), g), std::invalid_argument);
}

TEST(ZLattice, ShortVectorsMatchBox) {
  const Lattice3 g = bcc_lattice();
  std::vector<Vec3> found;
  enumerate_short_vectors(g, 12, [&](const Vec3& v) { found.push_back(v); });
  std::vector<Vec3> expected;
  for (Int x = -3; x <= 3; ++x)
    for (Int y = -3; y <= 3; ++y)
      for (Int z = -3; z <= 3; ++z)
        if ((x || y || z) && x * x + y * y + z * z <= 12 && g.contains(Vec3{x, y, z})) expected.push_back({x, y, z});
  std::sort(found.begin(), found.end());
  EXPECT_EQ(found, expected);
  EXPECT_EQ(found.size(), 8u + 6u + 12u + 24u + 8u);
}
