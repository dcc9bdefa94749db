#pragma once

// Exact integer helpers. Counting kernels use 64-bit unsigned counters with
// overflow detection; closed forms and series use arbitrary precision.

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "fishburn/error.hpp"

namespace fishburn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "64-bit counter overflow");
  }
  return out;
}

/// Narrowing with detection; used where a fixed-width result is requested.
inline std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, "value " + v.str() + " exceeds int64");
  }
  return static_cast<std::int64_t>(v);
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace fishburn
