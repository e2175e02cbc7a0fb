#include "symbreak/bigint.hpp"

namespace symbreak {

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt power(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

BigInt isqrt(const BigInt& x) {
  if (x < 0) return 0;
  BigInt lo = 0;
  BigInt hi = 1;
  while (hi * hi <= x) hi *= 2;
  // Invariant: lo * lo <= x < hi * hi.
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    if (mid * mid <= x) lo = mid; else hi = mid;
  }
  return lo;
}

}  // namespace symbreak
