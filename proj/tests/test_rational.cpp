#include <doctest.h>

#include <stdexcept>

#include "fse/rational.hpp"

using fse::Rational;

TEST_CASE("rationals normalize on construction") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(0, 5) == Rational(0, 1));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(6, 8).num() == 3);
  CHECK(Rational(6, 8).den() == 4);
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("default value is zero") {
  Rational r;
  CHECK(r.is_zero());
  CHECK(r == Rational(0, 1));
}

TEST_CASE("ordering compares cross-multiplied values") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(1, 2) <= Rational(2, 4));
  CHECK(Rational(3, 4) > Rational(2, 3));
  CHECK(Rational(-1, 2) < Rational(0, 1));
  CHECK(Rational(7, 8) >= Rational(7, 8));
  CHECK(Rational(1, 4) != Rational(1, 3));
}

TEST_CASE("addition and subtraction stay exact") {
  CHECK(Rational(1, 4) + Rational(1, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(3, 8) - Rational(3, 8) == Rational(0, 1));
  CHECK((Rational(5, 6) - Rational(1, 6)).num() == 2);
  CHECK((Rational(5, 6) - Rational(1, 6)).den() == 3);
}

TEST_CASE("conversions") {
  CHECK(Rational(1, 4).to_double() == 0.25);
  CHECK(Rational(1, 2).to_string() == "1/2");
  CHECK(Rational(-2, 8).to_string() == "-1/4");
  CHECK(Rational(0, 7).to_string() == "0/1");
}
