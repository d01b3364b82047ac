#include "circuitlab/error.hpp"
#include "circuitlab/rational.hpp"

#include <doctest.h>

using namespace circuitlab;

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(0, 5).to_string() == "0");
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3) == Rational(1));
  CHECK(Rational(1) / Rational(3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  Rational big(1);
  for (int i = 0; i < 100; ++i)
    big *= Rational(1, 3);
  big *= Rational(BigInt("515377520732011331036461129765621272702107522001"));
  CHECK(big == Rational(1));
}

TEST_CASE("rational strings round trip") {
  for (const char *s : {"0", "7", "-7", "1/2", "-22/7", "123456789012345678901/2"})
    CHECK(Rational::parse(s).to_string() == s);
  CHECK(Rational::parse("4/6").to_string() == "2/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}
