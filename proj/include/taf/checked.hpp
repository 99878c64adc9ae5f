#pragma once

// Overflow-checked 64-bit integer helpers and the library's error types.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace taf {

/// Malformed input: bad ring spec, bad generator, violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size limit (enumeration guard, tuple budget) was hit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic left the int64 range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

/// a*b + c, checked.
inline int64_t checked_fma(int64_t a, int64_t b, int64_t c) {
  return checked_add(checked_mul(a, b), c);
}

/// Least non-negative residue; m > 0.
inline int64_t mod_floor(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Floor division; b != 0.
inline int64_t div_floor(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Extended gcd: returns (g, s, t) with g = s*a + t*b, g >= 0.
struct Bezout {
  int64_t g, s, t;
};

inline Bezout ext_gcd(int64_t a, int64_t b) {
  int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    int64_t q = old_r / r;
    old_r = checked_sub(old_r, checked_mul(q, r));
    std::swap(old_r, r);
    old_s = checked_sub(old_s, checked_mul(q, s));
    std::swap(old_s, s);
    old_t = checked_sub(old_t, checked_mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline int64_t gcd64(int64_t a, int64_t b) { return ext_gcd(a, b).g; }

inline bool is_squarefree(int64_t d) {
  if (d == 0) return false;
  uint64_t n = d < 0 ? uint64_t(-(d + 1)) + 1 : uint64_t(d);
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

}  // namespace taf
