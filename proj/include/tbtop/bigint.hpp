#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace tbtop {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Non-negative remainder of a mod m (m > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline BigInt abs_big(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

/// base^exp for non-negative integer exponents.
inline BigInt pow_big(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

BigInt factorial(std::uint64_t n);

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Miller-Rabin on arbitrary-precision integers (deterministic for 64-bit
/// inputs, strong witness set otherwise).
bool is_probable_prime(const BigInt& n);

/// Parse a decimal integer; throws InputError naming `field` on junk.
BigInt parse_bigint(const std::string& text, const std::string& field);

/// Parse "a/b" or "a" into an exact rational; throws InputError on junk.
Rational parse_rational(const std::string& text, const std::string& field);

std::string to_string(const BigInt& v);

/// "num/den" in lowest terms; integers print without the "/1".
std::string to_string(const Rational& v);

}  // namespace tbtop
