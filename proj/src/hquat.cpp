#include "mcsl/hquat.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "mcsl/parallel.hpp"

namespace mcsl {

namespace {

bool same_parity(Int a, Int b) { return ((a ^ b) & 1) == 0; }

bool first_nonzero_positive(const HQuat::Doubled& d) {
  for (Int x : d)
    if (x != 0) return x > 0;
  return false;
}

// Nearest c = parity (mod 2) to t/n, ties to the smaller c. Distances are
// measured as |t - n c|.
Int nearest_with_parity(Int t, Int n, Int parity) {
  // c = 2k + parity; minimise |t - n*parity - 2 n k|.
  const Int shifted = checked_sub(t, checked_mul(n, parity));
  const Int two_n = checked_mul(2, n);
  Int k = floor_div(shifted, two_n);
  // candidates k and k+1; pick the closer, ties to k.
  const Int below = shifted - two_n * k;
  const Int above = two_n * (k + 1) - shifted;
  if (above < below) ++k;
  return 2 * k + parity;
}

}  // namespace

HQuat HQuat::from_doubled(Int d0, Int d1, Int d2, Int d3) {
  if (!(same_parity(d0, d1) && same_parity(d0, d2) && same_parity(d0, d3)))
    throw std::invalid_argument("not a Hurwitz integer: doubled coordinates must share parity");
  return HQuat{{d0, d1, d2, d3}};
}

HQuat HQuat::integral(Int kappa, Int lambda, Int mu, Int nu) {
  return HQuat{{checked_mul(2, kappa), checked_mul(2, lambda), checked_mul(2, mu), checked_mul(2, nu)}};
}

Int HQuat::norm() const {
  Int s = 0;
  for (Int x : d_) s = checked_add(s, checked_mul(x, x));
  return s / 4;
}

Int HQuat::content() const {
  Int g = 0;
  for (Int x : d_) g = std::gcd(g, x);
  if (g == 0) return 0;
  const bool uniform = std::all_of(d_.begin(), d_.end(), [&](Int x) { return same_parity(x / g, d_[0] / g); });
  return uniform ? g : g / 2;
}

bool HQuat::is_primitive_integral() const {
  if (!is_lipschitz()) return false;
  Int g = 0;
  for (Int x : d_) g = std::gcd(g, x / 2);
  return g == 1;
}

bool HQuat::divisible_by(Int m) const {
  if (m == 0) return false;
  for (Int x : d_)
    if (x % m != 0) return false;
  const Int r0 = d_[0] / m;
  return std::all_of(d_.begin(), d_.end(), [&](Int x) { return same_parity(x / m, r0); });
}

HQuat HQuat::divide_exact(Int m) const {
  if (!divisible_by(m)) throw std::domain_error("quaternion is not divisible by " + std::to_string(m));
  return HQuat{{d_[0] / m, d_[1] / m, d_[2] / m, d_[3] / m}};
}

HQuat operator+(const HQuat& a, const HQuat& b) {
  HQuat::Doubled d;
  for (std::size_t n = 0; n < 4; ++n) d[n] = checked_add(a.d_[n], b.d_[n]);
  return HQuat::from_doubled(d);
}

HQuat operator-(const HQuat& a, const HQuat& b) {
  HQuat::Doubled d;
  for (std::size_t n = 0; n < 4; ++n) d[n] = checked_sub(a.d_[n], b.d_[n]);
  return HQuat::from_doubled(d);
}

HQuat operator*(const HQuat& a, const HQuat& b) {
  const auto& x = a.d_;
  const auto& y = b.d_;
  auto m = [](Int p, Int q) { return checked_mul(p, q); };
  const Int r0 = checked_sub(checked_sub(m(x[0], y[0]), m(x[1], y[1])), checked_add(m(x[2], y[2]), m(x[3], y[3])));
  const Int r1 = checked_add(checked_add(m(x[0], y[1]), m(x[1], y[0])), checked_sub(m(x[2], y[3]), m(x[3], y[2])));
  const Int r2 = checked_add(checked_sub(m(x[0], y[2]), m(x[1], y[3])), checked_add(m(x[2], y[0]), m(x[3], y[1])));
  const Int r3 = checked_add(checked_add(m(x[0], y[3]), m(x[1], y[2])), checked_sub(m(x[3], y[0]), m(x[2], y[1])));
  // (2a)(2b) = 2 (2ab), and 2ab has integer coordinates.
  return HQuat{{r0 / 2, r1 / 2, r2 / 2, r3 / 2}};
}

HQuat operator*(Int s, const HQuat& a) {
  return HQuat{{checked_mul(s, a.d_[0]), checked_mul(s, a.d_[1]), checked_mul(s, a.d_[2]), checked_mul(s, a.d_[3])}};
}

std::string HQuat::to_string() const {
  return std::to_string(d_[0]) + "," + std::to_string(d_[1]) + "," + std::to_string(d_[2]) + "," +
         std::to_string(d_[3]);
}

std::ostream& operator<<(std::ostream& os, const HQuat& q) { return os << "(" << q.to_string() << ")/2"; }

const std::array<HQuat, 24>& hurwitz_units() {
  static const std::array<HQuat, 24> units = [] {
    std::array<HQuat, 24> u;
    std::size_t n = 0;
    for (std::size_t axis = 0; axis < 4; ++axis)
      for (Int s : {-2, 2}) {
        HQuat::Doubled d{0, 0, 0, 0};
        d[axis] = s;
        u[n++] = HQuat::from_doubled(d);
      }
    for (int mask = 0; mask < 16; ++mask)
      u[n++] = HQuat::from_doubled((mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1, (mask & 8) ? -1 : 1);
    std::sort(u.begin(), u.end());
    return u;
  }();
  return units;
}

HQuat canonical_associate(const HQuat& q) {
  if (q.is_zero()) return q;
  std::optional<HQuat> best;
  for (const auto& u : hurwitz_units()) {
    const HQuat c = q * u;
    if (!first_nonzero_positive(c.doubled())) continue;
    if (!best || c < *best) best = c;
  }
  return *best;
}

HQuat sign_normalized(const HQuat& q) { return first_nonzero_positive(q.doubled()) || q.is_zero() ? q : -q; }

bool left_divides(const HQuat& d, const HQuat& a) {
  if (d.is_zero()) return a.is_zero();
  return (d.conj() * a).divisible_by(d.norm());
}

DivMod right_divmod(const HQuat& a, const HQuat& b) {
  if (b.is_zero()) throw std::domain_error("right_divmod: division by the zero quaternion");
  const Int n = b.norm();
  if (a.norm() < n) return {HQuat{}, a};
  // a = b s + r with s the Hurwitz integer nearest to conj(b) a / N(b).
  const auto t = (b.conj() * a).doubled();
  std::array<HQuat::Doubled, 2> cand{};
  std::array<Int, 2> dist{0, 0};
  for (Int parity = 0; parity < 2; ++parity)
    for (std::size_t c = 0; c < 4; ++c) {
      const Int v = nearest_with_parity(t[c], n, parity);
      cand[parity][c] = v;
      const Int e = checked_sub(t[c], checked_mul(n, v));
      dist[parity] = checked_add(dist[parity], checked_mul(e, e));
    }
  std::size_t pick = 0;
  if (dist[1] < dist[0] || (dist[1] == dist[0] && cand[1] < cand[0])) pick = 1;
  const HQuat s = HQuat::from_doubled(cand[pick]);
  const HQuat r = a - b * s;
  if (r.norm() >= n) throw std::logic_error("right_divmod: remainder did not shrink");
  return {s, r};
}

HQuat gcld(const HQuat& a, const HQuat& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcld(0, 0) is undefined");
  HQuat x = a, y = b;
  while (!y.is_zero()) {
    HQuat r = right_divmod(x, y).remainder;
    x = y;
    y = r;
  }
  return canonical_associate(x);
}

std::array<Vec<4>, 4> ideal_generators(const HQuat& q) {
  return {(q * HQuat::one()).doubled(), (q * HQuat::i()).doubled(), (q * HQuat::j()).doubled(),
          (q * HQuat::omega()).doubled()};
}

IdealHNF4 ideal_hnf(const HQuat& q) {
  if (q.is_zero()) throw std::domain_error("ideal_hnf of the zero quaternion");
  const auto gens = ideal_generators(q);
  return IdealHNF4{Lattice<4>::from_generators(std::span<const Vec<4>>(gens))};
}

HQuat lcrm(const HQuat& a, const HQuat& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("lcrm of a zero quaternion");
  const Lattice<4> common = intersect(ideal_hnf(a).module, ideal_hnf(b).module);
  // The generator m of the intersection ideal is a shortest vector, since
  // N(m x) = N(m) N(x). N(m) is a multiple of lcm(N(a), N(b)).
  Int bound = std::lcm(a.norm(), b.norm());
  for (;;) {
    std::optional<HQuat> best;
    enumerate_short_vectors<4>(common, checked_mul(4, bound), [&](const Vec<4>& v) {
      const HQuat h = HQuat::from_doubled(v);
      if (!best || h.norm() < best->norm()) best = h;
    });
    if (best) return canonical_associate(*best);
    bound = checked_mul(bound, 2);
  }
}

HQuat left_prime_part(const HQuat& q, Int p) {
  if (!q.is_primitive()) throw std::invalid_argument("left_prime_part: quaternion is not primitive");
  if (p <= 2 || !is_prime(p)) throw std::invalid_argument("left_prime_part: p must be an odd prime");
  const Int n = q.norm();
  if (n == 0 || n % p != 0) throw std::invalid_argument("left_prime_part: p does not divide the norm");
  const Int pa = ipow(p, valuation(n, p));
  const HQuat part = gcld(q, HQuat::integral(pa, 0, 0, 0));
  if (part.norm() != pa) throw std::logic_error("left_prime_part: unexpected norm of the prime part");
  return part;
}

std::vector<HQuat> left_prime_decomposition(const HQuat& q) {
  if (!q.is_primitive()) throw std::invalid_argument("left_prime_decomposition: quaternion is not primitive");
  const Int n = q.norm();
  if (n % 2 == 0) throw std::invalid_argument("left_prime_decomposition: norm must be odd");
  std::vector<HQuat> out;
  if (n == 1) return out;
  const auto primes = factorize(n);
  HQuat rest = q;
  for (std::size_t k = 0; k + 1 < primes.size(); ++k) {
    const HQuat part = left_prime_part(rest, primes[k].first);
    rest = (part.conj() * rest).divide_exact(part.norm());
    out.push_back(part);
  }
  out.push_back(rest);
  return out;
}

HQuat make_odd(const HQuat& q) {
  if (q.is_zero()) throw std::domain_error("make_odd of the zero quaternion");
  HQuat p = q.divide_exact(q.content());
  if (p.norm() % 2 == 0) {
    // A primitive even-norm q is right-divisible by 1 + i exactly once.
    p = (p * HQuat::integral(1, -1, 0, 0)).divide_exact(2);
  }
  if (p.norm() % 2 == 0) throw std::logic_error("make_odd: norm still even");
  return p;
}

std::vector<HQuat> quaternions_of_norm(Int n) {
  std::vector<HQuat> out;
  if (n < 0) return out;
  const Int target = checked_mul(4, n);
  const Int lim = isqrt(target);
  for (Int a = -lim; a <= lim; ++a) {
    const Int ra = target - a * a;
    const Int lb = isqrt(ra);
    for (Int b = -lb; b <= lb; ++b) {
      if (!same_parity(a, b)) continue;
      const Int rb = ra - b * b;
      const Int lc = isqrt(rb);
      for (Int c = -lc; c <= lc; ++c) {
        if (!same_parity(a, c)) continue;
        const Int rc = rb - c * c;
        if (!is_square(rc)) continue;
        const Int d = isqrt(rc);
        if (!same_parity(a, d)) continue;
        out.push_back(HQuat::from_doubled(a, b, c, -d));
        if (d != 0) out.push_back(HQuat::from_doubled(a, b, c, d));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HQuat> enumerate_ideals(Int n, unsigned jobs) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("enumerate_ideals: n must be odd and positive");
  // Every Hurwitz integer of odd norm has a Lipschitz right associate; scan
  // integral components (k, l, m, nu) with k >= 0 and dedup by ideal key.
  const Int lim = isqrt(n);
  auto scan = [&](std::size_t slot) {
    std::vector<std::pair<IdealHNF4, HQuat>> found;
    const Int k = static_cast<Int>(slot);
    const Int rk = n - k * k;
    const Int ll = isqrt(rk);
    for (Int l = -ll; l <= ll; ++l) {
      const Int rl = rk - l * l;
      const Int lm = isqrt(rl);
      for (Int m = -lm; m <= lm; ++m) {
        const Int rm = rl - m * m;
        if (!is_square(rm)) continue;
        const Int nu = isqrt(rm);
        for (Int s : {Int{-1}, Int{1}}) {
          if (nu == 0 && s > 0) continue;
          const HQuat q = HQuat::integral(k, l, m, s * nu);
          if (!q.is_primitive()) continue;
          found.emplace_back(ideal_hnf(q), q);
        }
      }
    }
    return found;
  };
  const auto parts = parallel_map(static_cast<std::size_t>(lim + 1), jobs, scan);
  std::map<IdealHNF4, HQuat> ideals;
  for (const auto& part : parts)
    for (const auto& [key, q] : part) ideals.try_emplace(key, q);
  std::vector<HQuat> out;
  out.reserve(ideals.size());
  for (const auto& [key, q] : ideals) out.push_back(canonical_associate(q));
  return out;
}

HQuat parse_quaternion(const std::string& text, bool half) {
  std::string s = text;
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  s = first == std::string::npos ? std::string{} : s.substr(first, last - first + 1);
  if (s.empty()) throw std::invalid_argument("empty quaternion");
  bool doubled = !half;
  if (s.front() == '(') {
    const auto close = s.find(')');
    if (close == std::string::npos) throw std::invalid_argument("quaternion: missing ')'");
    std::string tail = s.substr(close + 1);
    tail.erase(std::remove(tail.begin(), tail.end(), ' '), tail.end());
    if (tail == "/2") {
      doubled = true;
    } else if (tail.empty()) {
      doubled = false;
    } else {
      throw std::invalid_argument("quaternion: unexpected suffix '" + tail + "'");
    }
    s = s.substr(1, close - 1);
  }
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::array<Int, 4> v{};
  for (auto& x : v)
    if (!(in >> x)) throw std::invalid_argument("quaternion: expected four integers in '" + text + "'");
  std::string extra;
  if (in >> extra) throw std::invalid_argument("quaternion: trailing input in '" + text + "'");
  if (!doubled)
    for (auto& x : v) x = checked_mul(2, x);
  return HQuat::from_doubled(v);
}

}  // namespace mcsl
