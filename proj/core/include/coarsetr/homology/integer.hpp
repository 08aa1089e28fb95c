#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace coarsetr::homology {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown by checked 64-bit arithmetic; callers redo the work with BigInt.
struct Overflow : std::overflow_error {
  Overflow() : std::overflow_error("64-bit integer overflow") {}
};

namespace num {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow();
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow();
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
  return r;
}
inline std::int64_t neg(std::int64_t a) { return sub(0, a); }
inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }
/// Truncating quotient; the caller guarantees b != 0.
inline std::int64_t quot(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN && b == -1) throw Overflow();
  return a / b;
}
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline BigInt add(BigInt const& a, BigInt const& b) { return a + b; }
inline BigInt sub(BigInt const& a, BigInt const& b) { return a - b; }
inline BigInt mul(BigInt const& a, BigInt const& b) { return a * b; }
inline BigInt neg(BigInt const& a) { return -a; }
inline BigInt abs(BigInt const& a) { return a < 0 ? BigInt(-a) : a; }
inline BigInt quot(BigInt const& a, BigInt const& b) { return a / b; }
inline BigInt mod(BigInt const& a, BigInt const& m) {
  BigInt r = a % m;
  return r < 0 ? BigInt(r + m) : r;
}

inline BigInt to_big(std::int64_t v) { return BigInt(v); }
inline BigInt to_big(BigInt const& v) { return v; }
inline std::string to_string(BigInt const& v) { return v.str(); }

}  // namespace num
}  // namespace coarsetr::homology
