#include "doctest.h"
#include "dbs/rational.hpp"

using namespace dbs;

TEST_CASE("rational literals round trip") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(to_string(parse_rational("+0/5")) == "0");
  CHECK(parse_rational("-2/6") == Rational(-1, 3));
}

TEST_CASE("malformed rationals are rejected") {
  CHECK_THROWS_AS(parse_rational(""), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/-2"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidInput);
}

TEST_CASE("integer powers") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(-5), 0) == 1);
  CHECK_THROWS_AS(pow(Rational(0), -1), InvalidInput);
}
