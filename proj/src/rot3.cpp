#include "mcsl/rot3.hpp"

#include <algorithm>
#include <sstream>

namespace mcsl {

RotMat3::RotMat3(const Mat3& numer, Int den) : m_(numer), den_(den) {
  if (den_ == 0) throw std::invalid_argument("rotation denominator is zero");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& row : m_)
      for (auto& x : row) x = -x;
  }
  Int g = den_;
  for (const auto& row : m_)
    for (Int x : row) g = std::gcd(g, x);
  if (g > 1) {
    den_ /= g;
    for (auto& row : m_)
      for (auto& x : row) x /= g;
  }
}

Mat3 RotMat3::transposed(const Mat3& m) {
  Mat3 t{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) t[r][c] = m[c][r];
  return t;
}

namespace {

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      Int acc = 0;
      for (std::size_t k = 0; k < 3; ++k) acc = checked_add(acc, checked_mul(a[r][k], b[k][c]));
      out[r][c] = acc;
    }
  return out;
}

Int det3(const Mat3& m) {
  std::vector<std::vector<Int>> v;
  for (const auto& row : m) v.emplace_back(row.begin(), row.end());
  return detail::bareiss_determinant(std::move(v));
}

}  // namespace

bool RotMat3::is_orthogonal() const {
  const Mat3 p = mat_mul(transposed(m_), m_);
  const Int d2 = checked_mul(den_, den_);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (p[r][c] != (r == c ? d2 : 0)) return false;
  return true;
}

bool RotMat3::is_rotation() const {
  return is_orthogonal() && det3(m_) == checked_mul(den_, checked_mul(den_, den_));
}

RotMat3 operator*(const RotMat3& a, const RotMat3& b) {
  return RotMat3(mat_mul(a.m_, b.m_), checked_mul(a.den_, b.den_));
}

std::string RotMat3::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < 3; ++r) {
    if (r > 0) os << "; ";
    for (std::size_t c = 0; c < 3; ++c) {
      if (c > 0) os << ' ';
      os << rational_text(at(r, c));
    }
  }
  return os.str();
}

RotMat3 rotation_matrix(const HQuat& q) {
  if (q.is_zero()) throw std::domain_error("rotation_matrix of the zero quaternion");
  // Doubled coordinates: the common factor 4 cancels between entries and norm.
  const Int k = q[0], l = q[1], m = q[2], n = q[3];
  const Int kk = k * k, ll = l * l, mm = m * m, nn = n * n;
  const Mat3 a{Vec3{kk + ll - mm - nn, 2 * (l * m - k * n), 2 * (k * m + l * n)},
               Vec3{2 * (k * n + l * m), kk - ll + mm - nn, 2 * (m * n - k * l)},
               Vec3{2 * (l * n - k * m), 2 * (k * l + m * n), kk - ll - mm + nn}};
  return RotMat3(a, kk + ll + mm + nn);
}

Int sigma(const HQuat& q) {
  if (!q.is_primitive() && !q.is_primitive_integral())
    throw std::invalid_argument("sigma: quaternion is not primitive");
  return odd_part(q.norm());
}

HQuat quaternion_from_rotation(const RotMat3& rot) {
  if (!rot.is_rotation()) throw std::invalid_argument("quaternion_from_rotation: not a proper rotation");
  const auto& a = rot.numerator();
  const Int n = rot.denominator();
  // k[i][j] = 4 n q_i q_j / |q|^2
  std::array<std::array<Int, 4>, 4> k{};
  k[0][0] = n + a[0][0] + a[1][1] + a[2][2];
  k[1][1] = n + a[0][0] - a[1][1] - a[2][2];
  k[2][2] = n - a[0][0] + a[1][1] - a[2][2];
  k[3][3] = n - a[0][0] - a[1][1] + a[2][2];
  k[0][1] = k[1][0] = a[2][1] - a[1][2];
  k[0][2] = k[2][0] = a[0][2] - a[2][0];
  k[0][3] = k[3][0] = a[1][0] - a[0][1];
  k[1][2] = k[2][1] = a[0][1] + a[1][0];
  k[1][3] = k[3][1] = a[0][2] + a[2][0];
  k[2][3] = k[3][2] = a[1][2] + a[2][1];
  std::size_t best = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (k[i][i] > k[best][best]) best = i;
  std::array<Int, 4> v = k[best];
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  for (auto& x : v) x /= g;
  const bool all_odd = std::all_of(v.begin(), v.end(), [](Int x) { return x % 2 != 0; });
  HQuat q = all_odd ? HQuat::from_doubled(v) : HQuat::integral(v[0], v[1], v[2], v[3]);
  q = sign_normalized(q);
  if (!(rotation_matrix(q) == rot)) throw std::invalid_argument("quaternion_from_rotation: inversion failed");
  return q;
}

const std::array<RotMat3, 24>& cubic_group() {
  static const std::array<RotMat3, 24> group = [] {
    std::vector<RotMat3> all;
    for (const auto& u : hurwitz_units()) all.push_back(rotation_matrix(u));
    // Quaternions of norm 2: two coordinates +-1, two zero.
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b)
        for (Int sa : {-1, 1})
          for (Int sb : {-1, 1}) {
            std::array<Int, 4> c{0, 0, 0, 0};
            c[a] = sa;
            c[b] = sb;
            all.push_back(rotation_matrix(HQuat::integral(c[0], c[1], c[2], c[3])));
          }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.size() != 24) throw std::logic_error("cubic group does not have 24 elements");
    std::array<RotMat3, 24> out;
    std::copy(all.begin(), all.end(), out.begin());
    return out;
  }();
  return group;
}

bool is_cubic_rotation(const HQuat& q) {
  if (q.is_zero()) throw std::domain_error("is_cubic_rotation of the zero quaternion");
  const Int n = q.divide_exact(q.content()).norm();
  return n == 1 || n == 2;
}

bool strongly_equivalent(const HQuat& q1, const HQuat& q2) { return is_cubic_rotation(q2.conj() * q1); }

bool strongly_equivalent_by_matrix(const HQuat& q1, const HQuat& q2) {
  const RotMat3 r1 = rotation_matrix(q1);
  const RotMat3 r2 = rotation_matrix(q2);
  return std::any_of(cubic_group().begin(), cubic_group().end(), [&](const RotMat3& c) { return r2 * c == r1; });
}

RationalLattice3 rotate(const RotMat3& r, const Lattice3& l) {
  std::array<Vec3, 3> rows{};
  const auto& a = r.numerator();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t c = 0; c < 3; ++c) {
      Int acc = 0;
      for (std::size_t k = 0; k < 3; ++k) acc = checked_add(acc, checked_mul(a[c][k], l.basis()[i][k]));
      rows[i][c] = acc;
    }
  return RationalLattice3(Lattice3::from_generators(std::span<const Vec3>(rows)), r.denominator());
}

RotMat3 parse_rotation(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ';', ' ');
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::array<Rational, 9> e;
  for (auto& x : e) {
    std::string tok;
    if (!(in >> tok)) throw std::invalid_argument("rotation: expected nine entries");
    const auto slash = tok.find('/');
    try {
      if (slash == std::string::npos) {
        x = Rational(std::stoll(tok));
      } else {
        x = Rational(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("rotation: bad entry '" + tok + "'");
    }
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("rotation: trailing input");
  Int den = 1;
  for (const auto& x : e) den = std::lcm(den, x.denominator());
  Mat3 m{};
  for (std::size_t i = 0; i < 9; ++i) m[i / 3][i % 3] = e[i].numerator() * (den / e[i].denominator());
  return RotMat3(m, den);
}

}  // namespace mcsl
