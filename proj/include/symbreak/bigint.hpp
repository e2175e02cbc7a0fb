#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symbreak {

// Exact integer for counts that overflow 64 bits (factorials, group orders,
// Stirling numbers).
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::uint64_t n);
// Zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt power(std::uint64_t base, std::uint64_t exponent);
// Largest s with s * s <= x, by bisection.
BigInt isqrt(const BigInt& x);

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace symbreak
