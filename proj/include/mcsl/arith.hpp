#pragma once

// Checked 64-bit integer helpers and small number-theory routines shared by
// every module. All lattice and quaternion arithmetic is exact; an overflow
// raises std::overflow_error instead of wrapping.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace mcsl {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("mcsl: integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("mcsl: integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("mcsl: integer overflow in multiplication");
  return r;
}

/// Floor division for any sign combination; b != 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Representative of a modulo b in [0, |b|).
inline Int floor_mod(Int a, Int b) {
  Int r = a % b;
  if (r < 0) r += (b < 0 ? -b : b);
  return r;
}

inline Int abs_int(Int a) { return a < 0 ? -a : a; }

/// Largest s with s*s <= n; n >= 0.
Int isqrt(Int n);

bool is_square(Int n);

bool is_prime(Int n);

/// Prime factorisation by trial division, ascending primes.
std::vector<std::pair<Int, int>> factorize(Int n);

/// Exponent of p in n (n != 0).
int valuation(Int n, Int p);

/// n with all factors of two removed (n != 0).
Int odd_part(Int n);

Int ipow(Int base, int exp);

/// "num/den" text form used by every report.
std::string rational_text(const Rational& r);

}  // namespace mcsl
