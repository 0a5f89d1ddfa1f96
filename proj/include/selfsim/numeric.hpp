#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace selfsim {

/// Exact non-negative integer used for group orders and indices.
using BigNat = boost::multiprecision::cpp_int;

/// 100 decimal digits; enough headroom for 50-digit reported values.
using HighReal = boost::multiprecision::cpp_bin_float_100;

inline BigNat factorial(unsigned k) {
  BigNat r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

inline BigNat power(const BigNat& base, std::uint64_t exp) {
  BigNat result = 1;
  BigNat b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

/// Natural logarithm of a positive big integer.
///
/// Values wider than the mantissa are rescaled by a power of two first so
/// the conversion never loses more than the final rounding.
inline HighReal log_of(const BigNat& x) {
  const auto bits = boost::multiprecision::msb(x);
  constexpr unsigned kKeep = 400;
  if (bits <= kKeep) return boost::multiprecision::log(HighReal(x));
  const unsigned shift = static_cast<unsigned>(bits - kKeep);
  const BigNat top = x >> shift;
  return boost::multiprecision::log(HighReal(top)) + HighReal(shift) * boost::multiprecision::log(HighReal(2));
}

inline std::string to_string(const BigNat& x) { return x.str(); }

inline std::string to_string(const HighReal& x, int digits) {
  return x.str(digits, std::ios_base::fixed);
}

}  // namespace selfsim
