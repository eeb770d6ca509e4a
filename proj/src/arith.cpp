#include "mcsl/arith.hpp"

#include <cmath>

namespace mcsl {

Int isqrt(Int n) {
  if (n < 0) throw std::domain_error("isqrt of negative number");
  auto s = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

bool is_square(Int n) {
  if (n < 0) return false;
  Int s = isqrt(n);
  return s * s == n;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n <= 0) throw std::domain_error("factorize expects a positive integer");
  std::vector<std::pair<Int, int>> out;
  for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation(Int n, Int p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

Int odd_part(Int n) {
  if (n == 0) throw std::domain_error("odd part of zero");
  while (n % 2 == 0) n /= 2;
  return n;
}

Int ipow(Int base, int exp) {
  if (exp < 0) throw std::domain_error("ipow with negative exponent");
  Int r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace mcsl
