#pragma once

// Full-rank integer lattices in canonical Hermite normal form.
//
// Bases are stored as rows. The canonical form is upper triangular with a
// positive diagonal and every entry above the diagonal reduced into
// [0, diagonal of its column). Two lattices are equal iff their canonical
// matrices are equal.
//
// The 3D lattices live in doubled BCC coordinates (units of half the cubic
// edge), where the body-centred cubic lattice is
// {x in Z^3 : x1 = x2 = x3 (mod 2)}. The 4D instance serves the ideal keys of
// the quaternion module.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "mcsl/arith.hpp"

namespace mcsl {

template <std::size_t N>
using Vec = std::array<Int, N>;

template <std::size_t N>
using Mat = std::array<Vec<N>, N>;

namespace detail {

template <std::size_t N>
void axpy_row(Vec<N>& row, Int factor, const Vec<N>& pivot) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < N; ++c) row[c] = checked_sub(row[c], checked_mul(factor, pivot[c]));
}

template <std::size_t N>
bool is_zero(const Vec<N>& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

// Canonical row HNF of the span of `rows`; throws if the rank is below N.
// A positive `modulus` D asserts that D Z^N lies in the lattice: the rows
// D e_k are added and entries right of the pivot column are kept in [0, D),
// which bounds intermediate growth.
template <std::size_t N>
Mat<N> hermite_rows(std::vector<Vec<N>> rows, Int modulus = 0) {
  if (modulus > 0)
    for (std::size_t k = 0; k < N; ++k) {
      Vec<N> e{};
      e[k] = modulus;
      rows.push_back(e);
    }
  std::erase_if(rows, [](const Vec<N>& r) { return is_zero<N>(r); });
  Mat<N> out{};
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = 0;
    for (;;) {
      bool found = false;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (!found || abs_int(rows[r][c]) < abs_int(rows[piv][c])) piv = r;
        found = true;
      }
      if (!found) throw std::invalid_argument("lattice generators do not span full rank");
      bool clean = true;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == piv || rows[r][c] == 0) continue;
        axpy_row<N>(rows[r], floor_div(rows[r][c], rows[piv][c]), rows[piv]);
        if (modulus > 0)
          for (std::size_t k = c + 1; k < N; ++k) rows[r][k] = floor_mod(rows[r][k], modulus);
        if (rows[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    Vec<N> p = rows[piv];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(piv));
    if (p[c] < 0)
      for (auto& x : p) x = -x;
    out[c] = p;
    for (std::size_t k = 0; k < c; ++k) axpy_row<N>(out[k], floor_div(out[k][c], p[c]), p);
    std::erase_if(rows, [](const Vec<N>& r) { return is_zero<N>(r); });
  }
  return out;
}

// (a * b) mod m in [0, m) without intermediate overflow.
inline Int mul_mod(Int a, Int b, Int m) {
  const __int128 r = (static_cast<__int128>(a) * b) % m;
  return static_cast<Int>(r < 0 ? r + m : r);
}

// Basis of {c in Z^N : c t = 0 (mod m)}, one column of t at a time.
template <std::size_t N>
Mat<N> kernel_mod(const Mat<N>& t, Int m) {
  Mat<N> k{};
  for (std::size_t i = 0; i < N; ++i) k[i][i] = 1;
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<Vec<N>> rows(k.begin(), k.end());
    std::array<Int, N> v{};
    for (std::size_t i = 0; i < N; ++i) {
      Int acc = 0;
      for (std::size_t l = 0; l < N; ++l) acc = (acc + mul_mod(rows[i][l], t[l][j], m)) % m;
      v[i] = acc;
    }
    // Euclid on the residues by unimodular row operations.
    for (;;) {
      std::size_t piv = N;
      for (std::size_t i = 0; i < N; ++i)
        if (v[i] != 0 && (piv == N || v[i] < v[piv])) piv = i;
      if (piv == N) break;
      bool single = true;
      for (std::size_t i = 0; i < N; ++i) {
        if (i == piv || v[i] == 0) continue;
        const Int q = v[i] / v[piv];
        v[i] -= q * v[piv];
        for (std::size_t l = 0; l < N; ++l)
          rows[i][l] = floor_mod(checked_sub(rows[i][l], mul_mod(q, rows[piv][l], m)), m);
        if (v[i] != 0) single = false;
      }
      if (single) {
        const Int factor = m / std::gcd(v[piv], m);
        for (auto& x : rows[piv]) x = checked_mul(x, factor);
        break;
      }
    }
    k = hermite_rows<N>(std::move(rows), m);
  }
  return k;
}

// det(B) * B^{-1} for an upper triangular B with nonzero diagonal.
template <std::size_t N>
Mat<N> scaled_inverse(const Mat<N>& b, Int det) {
  Mat<N> x{};
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t ii = N; ii-- > 0;) {
      Int acc = (ii == j) ? det : 0;
      for (std::size_t k = ii + 1; k < N; ++k) acc = checked_sub(acc, checked_mul(b[ii][k], x[k][j]));
      if (acc % b[ii][ii] != 0) throw std::logic_error("non-integral adjugate entry");
      x[ii][j] = acc / b[ii][ii];
    }
  }
  return x;
}

// Exact determinant of a small square matrix (Bareiss elimination).
Int bareiss_determinant(std::vector<std::vector<Int>> m);

}  // namespace detail

template <std::size_t N>
class Lattice {
 public:
  /// Z^N
  Lattice() {
    for (std::size_t i = 0; i < N; ++i) b_[i][i] = 1;
  }
  /// Canonical HNF of the lattice spanned by the generators.
  /// A positive `modulus` D promises D Z^N is inside the lattice (see hermite_rows).
  static Lattice from_generators(std::span<const Vec<N>> generators, Int modulus = 0) {
    return Lattice(detail::hermite_rows<N>({generators.begin(), generators.end()}, modulus));
  }
  static Lattice from_generators(std::initializer_list<Vec<N>> generators) {
    return Lattice(detail::hermite_rows<N>(std::vector<Vec<N>>(generators)));
  }
  /// s * Z^N
  static Lattice scalar(Int s) {
    Mat<N> m{};
    for (std::size_t i = 0; i < N; ++i) m[i][i] = s;
    return from_generators(std::span<const Vec<N>>(m.data(), N));
  }

  const Mat<N>& basis() const { return b_; }

  Int determinant() const {
    Int d = 1;
    for (std::size_t i = 0; i < N; ++i) d = checked_mul(d, b_[i][i]);
    return d;
  }

  /// Integer coordinates of v in the basis, if v lies in the lattice.
  bool contains(const Vec<N>& v) const {
    Vec<N> rest = v;
    for (std::size_t c = 0; c < N; ++c) {
      if (rest[c] % b_[c][c] != 0) return false;
      detail::axpy_row<N>(rest, rest[c] / b_[c][c], b_[c]);
    }
    return true;
  }

  bool contains(const Lattice& other) const {
    return std::all_of(other.b_.begin(), other.b_.end(), [this](const Vec<N>& v) { return contains(v); });
  }

  Lattice scaled(Int s) const {
    if (s <= 0) throw std::invalid_argument("lattice scale must be positive");
    Mat<N> m = b_;
    for (auto& row : m)
      for (auto& x : row) x = checked_mul(x, s);
    return Lattice(m);
  }

  friend bool operator==(const Lattice&, const Lattice&) = default;
  friend auto operator<=>(const Lattice& a, const Lattice& b) { return a.b_ <=> b.b_; }

 private:
  explicit Lattice(const Mat<N>& b) : b_(b) {}
  Mat<N> b_{};
};

/// numer / den with gcd(content(numer), den) = 1.
template <std::size_t N>
class RationalLattice {
 public:
  RationalLattice(const Lattice<N>& numer, Int den = 1) : numer_(numer), den_(den) { normalize(); }

  const Lattice<N>& numerator() const { return numer_; }
  Int denominator() const { return den_; }
  bool is_integral() const { return den_ == 1; }

  /// Throws std::domain_error if the lattice is not integral.
  const Lattice<N>& integral() const {
    if (den_ != 1) throw std::domain_error("lattice is not integral");
    return numer_;
  }

  friend bool operator==(const RationalLattice&, const RationalLattice&) = default;

 private:
  void normalize() {
    if (den_ <= 0) throw std::invalid_argument("lattice denominator must be positive");
    Int g = den_;
    for (const auto& row : numer_.basis())
      for (Int x : row) g = std::gcd(g, x);
    if (g > 1) {
      Mat<N> m = numer_.basis();
      for (auto& row : m)
        for (auto& x : row) x /= g;
      numer_ = Lattice<N>::from_generators(std::span<const Vec<N>>(m.data(), N));
      den_ /= g;
    }
  }

  Lattice<N> numer_;
  Int den_;
};

/// Canonical HNF of the generated lattice; throws if rank < N.
template <std::size_t N>
Lattice<N> hnf(std::span<const Vec<N>> generators) {
  return Lattice<N>::from_generators(generators);
}

/// Dual lattice {y : <y, x> integral for all x in L}.
template <std::size_t N>
RationalLattice<N> dual(const RationalLattice<N>& l) {
  const auto& b = l.numerator().basis();
  const Int det = l.numerator().determinant();
  const Mat<N> x = detail::scaled_inverse<N>(b, det);
  std::vector<Vec<N>> gens(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) gens[i][k] = checked_mul(l.denominator(), x[k][i]);
  return RationalLattice<N>(Lattice<N>::from_generators(std::span<const Vec<N>>(gens)), det);
}

template <std::size_t N>
RationalLattice<N> dual(const Lattice<N>& l) {
  return dual(RationalLattice<N>(l));
}

/// Smallest lattice containing both.
template <std::size_t N>
RationalLattice<N> sum(const RationalLattice<N>& a, const RationalLattice<N>& b) {
  const Int l = std::lcm(a.denominator(), b.denominator());
  std::vector<Vec<N>> gens;
  gens.reserve(2 * N);
  for (const auto* part : {&a, &b}) {
    const Int scale = l / part->denominator();
    for (auto row : part->numerator().basis()) {
      for (auto& x : row) x = checked_mul(x, scale);
      gens.push_back(row);
    }
  }
  return RationalLattice<N>(Lattice<N>::from_generators(std::span<const Vec<N>>(gens)), l);
}

template <std::size_t N>
Lattice<N> sum(const Lattice<N>& a, const Lattice<N>& b) {
  std::vector<Vec<N>> gens(a.basis().begin(), a.basis().end());
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Lattice<N>::from_generators(std::span<const Vec<N>>(gens));
}

/// Largest common sublattice. With d = det(b), x lies in b iff
/// x adj(b) = 0 (mod d), so a cap b is the image under a of the kernel of
/// a adj(b) modulo d. Everything stays reduced modulo lcm(det a, det b).
template <std::size_t N>
Lattice<N> intersect(const Lattice<N>& a, const Lattice<N>& b) {
  const Int m = b.determinant();
  const Mat<N> adj = detail::scaled_inverse<N>(b.basis(), m);
  Mat<N> t{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < N; ++k)
        acc = (acc + detail::mul_mod(a.basis()[i][k], floor_mod(adj[k][j], m), m)) % m;
      t[i][j] = acc;
    }
  const Mat<N> ker = detail::kernel_mod<N>(t, m);
  const Int da = a.determinant();
  const Int modulus = checked_mul(da / std::gcd(da, m), m);
  std::vector<Vec<N>> gens(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < N; ++k) acc = (acc + detail::mul_mod(ker[i][k], a.basis()[k][j], modulus)) % modulus;
      gens[i][j] = acc;
    }
  return Lattice<N>::from_generators(std::span<const Vec<N>>(gens), modulus);
}

/// Rational version: both sides are scaled to the common denominator.
template <std::size_t N>
RationalLattice<N> intersect(const RationalLattice<N>& a, const RationalLattice<N>& b) {
  const Int l = std::lcm(a.denominator(), b.denominator());
  return RationalLattice<N>(
      intersect(a.numerator().scaled(l / a.denominator()), b.numerator().scaled(l / b.denominator())), l);
}

/// [super : sub]; throws std::invalid_argument unless sub is contained in super.
template <std::size_t N>
Int index_in(const Lattice<N>& sub, const Lattice<N>& super) {
  if (!super.contains(sub)) throw std::invalid_argument("index_in: not a sublattice");
  return sub.determinant() / super.determinant();
}

/// Invariant factors d1 | d2 | ... of super/sub.
template <std::size_t N>
Vec<N> smith_quotient(const Lattice<N>& sub, const Lattice<N>& super) {
  if (!super.contains(sub)) throw std::invalid_argument("smith_quotient: not a sublattice");
  const Int det = super.determinant();
  const Mat<N> inv = detail::scaled_inverse<N>(super.basis(), det);
  // Coordinates of the sub basis in the super basis.
  std::vector<std::vector<Int>> t(N, std::vector<Int>(N, 0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < N; ++k) acc = checked_add(acc, checked_mul(sub.basis()[i][k], inv[k][j]));
      t[i][j] = acc / det;
    }
  // Determinantal divisors D_k = gcd of all k x k minors.
  Vec<N> out{};
  Int prev = 1;
  for (std::size_t k = 1; k <= N; ++k) {
    Int g = 0;
    std::vector<bool> rsel(N, false), csel(N, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<std::vector<Int>> minor;
        for (std::size_t i = 0; i < N; ++i) {
          if (!rsel[i]) continue;
          std::vector<Int> row;
          for (std::size_t j = 0; j < N; ++j)
            if (csel[j]) row.push_back(t[i][j]);
          minor.push_back(std::move(row));
        }
        g = std::gcd(g, detail::bareiss_determinant(std::move(minor)));
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    out[k - 1] = g / prev;
    prev = g;
  }
  return out;
}

/// Calls visit(v) for every nonzero lattice vector v with
/// sum(v_i^2) <= bound. Enumeration walks the triangular basis column by
/// column with exact integer bounds.
template <std::size_t N, typename Visit>
void enumerate_short_vectors(const Lattice<N>& l, Int bound, Visit&& visit) {
  const auto& b = l.basis();
  Vec<N> v{};
  auto rec = [&](auto&& self, std::size_t c, Int remaining) -> void {
    if (c == N) {
      if (!detail::is_zero<N>(v)) visit(static_cast<const Vec<N>&>(v));
      return;
    }
    const Int base = v[c];
    const Int r = isqrt(remaining);
    const Int d = b[c][c];
    // base + t*d in [-r, r]
    const Int lo = -floor_div(r + base, d);
    const Int hi = floor_div(r - base, d);
    for (Int t = lo; t <= hi; ++t) {
      const Vec<N> saved = v;
      for (std::size_t k = c; k < N; ++k) v[k] = checked_add(v[k], checked_mul(t, b[c][k]));
      const Int used = checked_mul(v[c], v[c]);
      if (used <= remaining) self(self, c + 1, remaining - used);
      v = saved;
    }
  };
  rec(rec, 0, bound);
}

using Lattice3 = Lattice<3>;
using RationalLattice3 = RationalLattice<3>;
using Vec3 = Vec<3>;
using Mat3 = Mat<3>;

/// The BCC lattice in doubled coordinates: HNF [[1,1,1],[0,2,0],[0,0,2]].
const Lattice3& bcc_lattice();

}  // namespace mcsl
