#include "doctest.h"

#include <cmath>
#include <random>

#include "orderk/rational.hpp"

using orderk::BigInt;
using orderk::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 1000000);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

TEST_CASE("rational normalization") {
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(-2), BigInt(4)).to_string() == "-1/2");
  CHECK(Rational(BigInt(2), BigInt(-4)).to_string() == "-1/2");
  CHECK(Rational(BigInt(-2), BigInt(-4)).to_string() == "1/2");
  CHECK(Rational(BigInt(0), BigInt(-7)).denominator() == BigInt(1));
  CHECK(Rational(12).is_integer());
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("7/3").to_string() == "7/3");
  CHECK(Rational::parse("14/6") == Rational::parse("7/3"));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-5") == Rational(-5));
  // decimal literals are exact decimals, never binary floats
  CHECK(Rational::parse("0.3") == Rational(BigInt(3), BigInt(10)));
  CHECK(Rational::parse("2.5") == Rational(BigInt(5), BigInt(2)));
  CHECK(Rational::parse("-0.125") == Rational(BigInt(-1), BigInt(8)));
  CHECK(Rational::parse(".5") == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational::parse("10.") == Rational(10));
  CHECK_THROWS_AS(Rational::parse("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("."), std::invalid_argument);
}

TEST_CASE("rational field axioms on random values") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 400; ++iter) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    Rational c = random_rational(rng);
    CHECK(a + b - b == a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK(a * b / b == a);
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational comparisons") {
  CHECK(Rational::parse("1/3") < Rational::parse("1/2"));
  CHECK(Rational::parse("-1/3") > Rational::parse("-1/2"));
  CHECK(Rational::parse("2/6") == Rational::parse("1/3"));
  CHECK(Rational(0) < Rational::parse("1/1000000000000"));
}

TEST_CASE("rational floor") {
  CHECK(Rational::parse("7/3").floor() == BigInt(2));
  CHECK(Rational::parse("-7/3").floor() == BigInt(-3));
  CHECK(Rational(5).floor() == BigInt(5));
  CHECK(Rational(-5).floor() == BigInt(-5));
  CHECK(Rational::parse("1999999/1000000").floor() == BigInt(1));
  CHECK(Rational::parse("-1/1000000").floor() == BigInt(-1));
}

TEST_CASE("rational pow") {
  CHECK(Rational::pow(Rational::parse("2/3"), 3) == Rational::parse("8/27"));
  CHECK(Rational::pow(Rational::parse("2/3"), 0) == Rational(1));
  CHECK(Rational::pow(Rational::parse("2/3"), -2) == Rational::parse("9/4"));
  CHECK_THROWS_AS(Rational::pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("rational to_double and log") {
  CHECK(Rational::parse("1/2").to_double() == 0.5);
  CHECK(Rational::parse("-3/4").to_double() == -0.75);
  CHECK(Rational(0).to_double() == 0.0);
  Rational r = Rational(BigInt::pow(BigInt(3), 300), BigInt::pow(BigInt(2), 100));
  double expect = 300.0 * std::log(3.0) - 100.0 * std::log(2.0);
  CHECK(r.log() == doctest::Approx(expect).epsilon(1e-13));
  CHECK(Rational::parse("7/3").to_double() ==
        doctest::Approx(7.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(Rational(0).log(), std::domain_error);
  CHECK_THROWS_AS(Rational(-1).log(), std::domain_error);
}
