#pragma once

#include <cstdint>

#include "sgbetti/errors.hpp"

namespace sgb {

using i64 = std::int64_t;
using i128 = __int128;

// Overflow-checked arithmetic.  All library math goes through these helpers;
// a result that does not fit is a hard error, never a wrap-around.

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit overflow in subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

inline i128 checked_add128(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit overflow in addition");
  return r;
}

inline i128 checked_sub128(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit overflow in subtraction");
  return r;
}

inline i128 checked_mul128(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in multiplication");
  return r;
}

// Mathematical (always nonnegative) remainder, also valid for negative x.
inline i64 floor_mod(i64 x, i64 m) {
  i64 r = x % m;
  return r < 0 ? r + m : r;
}

// Binomial coefficient C(n, 2); the only one the formulas need.
inline i64 choose2(i64 n) {
  if (n < 2) return 0;
  return checked_mul(n, n - 1) / 2;
}

}  // namespace sgb
