#include "tbtop/circle.hpp"

#include "tbtop/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace tbtop {

CirclePoint CirclePoint::normalized(const BigInt& numerator,
                                    const BigInt& denominator) {
  if (denominator <= 0)
    throw InputError("circle point denominator must be positive, got " +
                     denominator.str());
  BigInt num = mod_floor(numerator, denominator);
  if (num == 0) return CirclePoint(BigInt(0), BigInt(1));
  BigInt g = boost::multiprecision::gcd(num, denominator);
  return CirclePoint(num / g, denominator / g);
}

CirclePoint CirclePoint::operator+(const CirclePoint& other) const {
  return normalized(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

CirclePoint CirclePoint::operator-() const {
  if (num_ == 0) return CirclePoint();
  return CirclePoint(den_ - num_, den_);
}

CirclePoint CirclePoint::operator-(const CirclePoint& other) const {
  return *this + (-other);
}

CirclePoint CirclePoint::scaled(const BigInt& m) const {
  return normalized(m * num_, den_);
}

Rational CirclePoint::dist_to_zero() const {
  Rational forward(num_, den_);
  Rational backward(den_ - num_, den_);
  return forward <= backward ? forward : backward;
}

std::string CirclePoint::str() const {
  return num_.str() + "/" + den_.str();
}

CirclePoint CirclePoint::parse(const std::string& text,
                               const std::string& field) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    return normalized(parse_bigint(text, field), BigInt(1));
  BigInt num = parse_bigint(text.substr(0, slash), field);
  BigInt den = parse_bigint(text.substr(slash + 1), field);
  if (den <= 0) throw InputError(field + ": denominator must be positive");
  return normalized(num, den);
}

}  // namespace tbtop
