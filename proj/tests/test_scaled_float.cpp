#include "doctest.h"

#include <cmath>
#include <random>

#include "orderk/scaled_float.hpp"

using orderk::ScaledFloat;

TEST_CASE("scaled float construction and normalization") {
  ScaledFloat z;
  CHECK(z.is_zero());
  CHECK(z.exponent2() == 0);
  CHECK(z.to_double() == 0.0);

  ScaledFloat one = ScaledFloat::from_double(1.0);
  CHECK(one.significand() == 1.0);
  CHECK(one.exponent2() == 0);

  ScaledFloat v = ScaledFloat::from_double(12.0);
  CHECK(v.significand() == 1.5);
  CHECK(v.exponent2() == 3);
  CHECK(v.to_double() == 12.0);

  ScaledFloat n = ScaledFloat::from_double(-0.375);
  CHECK(n.significand() == -1.5);
  CHECK(n.exponent2() == -2);
  CHECK(n.to_double() == -0.375);

  ScaledFloat p = ScaledFloat::from_parts(48.0, 10);
  CHECK(p.to_double() == 48.0 * 1024.0);
}

TEST_CASE("scaled float arithmetic matches doubles in range") {
  std::mt19937_64 rng(555);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int iter = 0; iter < 500; ++iter) {
    double a = dist(rng), b = dist(rng);
    ScaledFloat sa = ScaledFloat::from_double(a);
    ScaledFloat sb = ScaledFloat::from_double(b);
    CHECK((sa + sb).to_double() == doctest::Approx(a + b).epsilon(1e-14));
    CHECK((sa - sb).to_double() == doctest::Approx(a - b).epsilon(1e-14));
    CHECK((sa * sb).to_double() == doctest::Approx(a * b).epsilon(1e-14));
    CHECK((sa * 3.25).to_double() == doctest::Approx(a * 3.25).epsilon(1e-14));
    if (b != 0.0)
      CHECK((sa / b).to_double() == doctest::Approx(a / b).epsilon(1e-14));
    // invariant: |sig| in [1,2) or exact zero
    ScaledFloat s = sa * sb;
    if (!s.is_zero()) {
      CHECK(std::fabs(s.significand()) >= 1.0);
      CHECK(std::fabs(s.significand()) < 2.0);
    }
  }
}

TEST_CASE("scaled float survives magnitudes beyond double range") {
  // (2^1000)^4 = 2^4000 overflows double but not the scaled form
  ScaledFloat v = ScaledFloat::from_parts(1.0, 1000);
  ScaledFloat w = v * v * v * v;
  CHECK(w.exponent2() == 4000);
  CHECK(w.log() == doctest::Approx(4000.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(std::isinf(w.to_double()));
  ScaledFloat tiny = ScaledFloat::from_parts(1.0, -4000);
  CHECK(tiny.to_double() == 0.0);
  CHECK((w * tiny).to_double() == 1.0);
}

TEST_CASE("scaled float addition drops addends below working precision") {
  ScaledFloat big = ScaledFloat::from_parts(1.0, 2000);
  ScaledFloat small = ScaledFloat::from_parts(1.0, 0);
  CHECK(big + small == big);
  CHECK(small + big == big);
}

TEST_CASE("scaled float cancellation yields exact zero") {
  ScaledFloat a = ScaledFloat::from_parts(1.25, 700);
  CHECK((a - a).is_zero());
}

TEST_CASE("scaled float comparisons") {
  ScaledFloat a = ScaledFloat::from_double(3.0);
  ScaledFloat b = ScaledFloat::from_double(4.0);
  CHECK(a < b);
  CHECK(b > a);
  CHECK(a == ScaledFloat::from_double(3.0));
  CHECK(ScaledFloat::from_double(-3.0) < ScaledFloat::from_double(-2.0));
  CHECK(ScaledFloat::from_double(-1.0) < ScaledFloat::from_double(0.5));
  CHECK(ScaledFloat() < ScaledFloat::from_double(0.5));
  CHECK(ScaledFloat::from_double(-0.5) < ScaledFloat());
  // different exponents, negative values: larger magnitude is smaller
  CHECK(ScaledFloat::from_double(-8.0) < ScaledFloat::from_double(-1.0));
}

TEST_CASE("scaled float from_log round trips") {
  for (double l : {-900.0, -20.5, 0.0, 3.25, 1200.0}) {
    ScaledFloat v = ScaledFloat::from_log(l);
    CHECK(v.log() == doctest::Approx(l).epsilon(1e-12));
  }
}

TEST_CASE("scaled float log rejects non-positive values") {
  CHECK_THROWS_AS(ScaledFloat().log(), std::domain_error);
  CHECK_THROWS_AS(ScaledFloat::from_double(-1.0).log(), std::domain_error);
}
