#pragma once

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace ngc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; zero when k < 0 or k > n.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    // out * (n - k + i) / i stays integral at every step
    out = out / static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n - k + i) +
          out % static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n - k + i) /
              static_cast<std::uint64_t>(i);
  }
  return out;
}

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

inline BigInt big_pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace ngc
