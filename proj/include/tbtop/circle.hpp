#pragma once

#include "tbtop/bigint.hpp"

#include <string>

namespace tbtop {

/// Exact element of the circle group Q/Z, kept in the canonical form
/// num/den with 0 <= num < den and gcd(num, den) = 1 (zero is 0/1).
/// Every operation re-normalizes, so equality is structural.
class CirclePoint {
 public:
  CirclePoint() : num_(0), den_(1) {}

  /// Reduced representative of numerator/denominator mod 1.
  /// The denominator must be positive.
  static CirclePoint normalized(const BigInt& numerator,
                                const BigInt& denominator);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  CirclePoint operator+(const CirclePoint& other) const;
  CirclePoint operator-() const;
  CirclePoint operator-(const CirclePoint& other) const;

  /// m * a in the circle group, defined for every integer m.
  CirclePoint scaled(const BigInt& m) const;

  /// Exact distance to 0 along the circle: min(num/den, 1 - num/den).
  /// Always a rational in [0, 1/2].
  Rational dist_to_zero() const;

  bool operator==(const CirclePoint& other) const = default;

  /// "num/den" in lowest terms ("0/1" for zero).
  std::string str() const;

  /// Parses "num/den" (also accepts a bare integer, taken mod 1).
  static CirclePoint parse(const std::string& text, const std::string& field);

 private:
  CirclePoint(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

inline CirclePoint scale(const BigInt& m, const CirclePoint& a) {
  return a.scaled(m);
}

}  // namespace tbtop
