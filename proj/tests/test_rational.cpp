#include <doctest.h>

#include "ybfr/halfint.hpp"
#include "ybfr/rational.hpp"

using ybfr::HalfInt;
using ybfr::Rational;

TEST_SUITE("rational") {
  TEST_CASE("normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 21) + Rational(2, 7) + Rational(2, 3) == Rational(1));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
  }

  TEST_CASE("string form") {
    CHECK(Rational(2, 3).to_string() == "2/3");
    CHECK(Rational(-1, 21).to_string() == "-1/21");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(0).to_string() == "0");
  }

  TEST_CASE("guards") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational::factorial(21), std::overflow_error);
    CHECK(Rational::factorial(20).num() == 2432902008176640000LL);
    const Rational big(1LL << 62);
    CHECK_THROWS_AS(big * big, std::overflow_error);
  }

  TEST_CASE("to_double") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(2, 3).to_double() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  }
}

TEST_SUITE("halfint") {
  TEST_CASE("representation") {
    CHECK(HalfInt(2).twice() == 4);
    CHECK(HalfInt::from_twice(5).value() == 2.5);
    CHECK(HalfInt::from_twice(5).is_integer() == false);
    CHECK(HalfInt(3).is_integer());
    CHECK((HalfInt::from_twice(1) + HalfInt(1)).twice() == 3);
    CHECK((-HalfInt::from_twice(5)).twice() == -5);
    CHECK(HalfInt::from_twice(3) < HalfInt::from_twice(5));
  }

  TEST_CASE("strings") {
    CHECK(HalfInt::from_twice(5).to_string() == "5/2");
    CHECK(HalfInt(2).to_string() == "2");
    CHECK(HalfInt::parse("5/2").twice() == 5);
    CHECK(HalfInt::parse("2.5").twice() == 5);
    CHECK(HalfInt::parse("3").twice() == 6);
    CHECK(HalfInt::parse("0").twice() == 0);
    CHECK_THROWS_AS(HalfInt::parse("0.3"), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::parse("x"), std::invalid_argument);
  }
}
