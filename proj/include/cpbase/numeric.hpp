#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cpb {

/// Arbitrary-precision signed integer. Character values and class sizes
/// overflow 64 bits well before the supported symmetric-group sizes do,
/// so every count/value that can grow factorially uses this type.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number (probabilities, slacks, bound values).
using Rational = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, std::uint64_t exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

inline Int factorial(unsigned m) {
  Int r = 1;
  for (unsigned i = 2; i <= m; ++i) r *= i;
  return r;
}

/// Ascending list of the distinct prime factors of n.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::string rational_to_string(const Rational& r) {
  return r.str();
}

inline double rational_to_double(const Rational& r) {
  return r.convert_to<double>();
}

}  // namespace cpb
