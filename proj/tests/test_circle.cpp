#include "tbtop/circle.hpp"
#include "tbtop/errors.hpp"

#include <doctest.h>

#include <random>

using namespace tbtop;

namespace {

CirclePoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-2000, 2000);
  std::uniform_int_distribution<long long> den(1, 997);
  return CirclePoint::normalized(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

TEST_CASE("normalize reduces mod 1") {
  CHECK(CirclePoint::normalized(3, 2) == CirclePoint::normalized(1, 2));
  CHECK(CirclePoint::normalized(3, 2).str() == "1/2");
  CHECK(CirclePoint::normalized(-1, 4).str() == "3/4");
  CHECK(CirclePoint::normalized(0, 7).str() == "0/1");
  CHECK_THROWS_AS(CirclePoint::normalized(1, 0), InputError);
  CHECK_THROWS_AS(CirclePoint::normalized(1, -3), InputError);
}

TEST_CASE("add and scale are exact") {
  CirclePoint half = CirclePoint::normalized(1, 2);
  CirclePoint two_thirds = CirclePoint::normalized(2, 3);
  CHECK((half + two_thirds).str() == "1/6");
  CHECK(CirclePoint::normalized(1, 4).scaled(4).is_zero());
  CHECK(CirclePoint::normalized(1, 3).scaled(-1).str() == "2/3");
}

TEST_CASE("dist_to_zero is min(x, 1-x)") {
  CHECK(CirclePoint::normalized(3, 4).dist_to_zero() == Rational(1, 4));
  CHECK(CirclePoint().dist_to_zero() == Rational(0));
  CHECK(CirclePoint::normalized(1, 2).dist_to_zero() == Rational(1, 2));
}

TEST_CASE("group laws hold exactly on random points") {
  std::mt19937_64 rng(20240517);
  for (int i = 0; i < 300; ++i) {
    CirclePoint a = random_point(rng);
    CirclePoint b = random_point(rng);
    CirclePoint c = random_point(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a + CirclePoint() == a);
    CHECK((a + (-a)).is_zero());
  }
}

TEST_CASE("distance satisfies the triangle inequality at 0") {
  std::mt19937_64 rng(991);
  for (int i = 0; i < 300; ++i) {
    CirclePoint a = random_point(rng);
    CirclePoint b = random_point(rng);
    CHECK((a + b).dist_to_zero() <= a.dist_to_zero() + b.dist_to_zero());
  }
}

TEST_CASE("scaling stretches distance at most |m| times") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long long> scalar(-30, 30);
  for (int i = 0; i < 300; ++i) {
    CirclePoint a = random_point(rng);
    long long m = scalar(rng);
    CHECK(a.scaled(m).dist_to_zero() <=
          Rational(m < 0 ? -m : m) * a.dist_to_zero());
  }
}

TEST_CASE("normalize is idempotent on reduced points") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    CirclePoint a = random_point(rng);
    CHECK(CirclePoint::normalized(a.num(), a.den()) == a);
  }
}

TEST_CASE("parse round-trips the textual form") {
  CHECK(CirclePoint::parse("3/4", "t") == CirclePoint::normalized(3, 4));
  CHECK(CirclePoint::parse("7", "t").is_zero());
  CHECK_THROWS_AS(CirclePoint::parse("1/0", "t"), InputError);
  CHECK_THROWS_AS(CirclePoint::parse("x/2", "t"), InputError);
}
