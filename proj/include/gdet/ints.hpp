#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gdet {

// All exact arithmetic runs on arbitrary-precision integers. Hot paths
// (residue scans, box searches) may instantiate the same templates with
// int64_t / __int128 when a range analysis shows no overflow.
using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Int& v) { return v.str(); }

// Floor residue, always in [0, m).
template <typename T>
T mod_floor(T a, T m) {
  T r = a % m;
  if (r < 0) r += m;
  return r;
}

// Quotient a/b asserting exact divisibility.
inline Int divexact(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("divexact: zero divisor");
  Int q = a / b;
  if (q * b != a) throw std::domain_error("divexact: inexact division");
  return q;
}

// 2-adic valuation; v2(0) is undefined and throws.
inline int v2(Int n) {
  if (n == 0) throw std::domain_error("v2(0)");
  int t = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++t;
  }
  return t;
}

inline bool is_odd(const Int& n) { return (n & 1) != 0; }
inline bool is_even(const Int& n) { return (n & 1) == 0; }

inline bool fits_int64(const Int& v) {
  return v >= std::numeric_limits<int64_t>::min() &&
         v <= std::numeric_limits<int64_t>::max();
}

}  // namespace gdet
