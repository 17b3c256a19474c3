#include "doctest.h"

#include "cattorus/exact.hpp"

using namespace cattorus;

TEST_CASE("rational arithmetic stays exact") {
  Rational a(1, 3), b(1, 7);
  CHECK(a + b == Rational(10, 21));
  CHECK(show(a + b) == "10/21");
  CHECK(rat_num(Rational(4, 6)) == 2);
  CHECK(rat_den(Rational(4, 6)) == 3);
}

TEST_CASE("floor and fractional part round towards minus infinity") {
  CHECK(rat_floor(Rational(7, 2)) == 3);
  CHECK(rat_floor(Rational(-7, 2)) == -4);
  CHECK(rat_floor(Rational(3)) == 3);
  CHECK(rat_frac(Rational(-1, 3)) == Rational(2, 3));
  CHECK(rat_frac(Rational(5, 3)) == Rational(2, 3));
  CHECK(rat_frac(Rational(2)) == 0);
}

TEST_CASE("circle elements add modulo one") {
  CHECK(CircleElt(1, 2) + CircleElt(1, 2) == CircleElt(Rational(0)));
  CHECK(CircleElt(Rational(0)) + CircleElt(2, 7) == CircleElt(2, 7));
  CHECK(CircleElt(1, 3).rep() == Rational(1, 3));
  CHECK((-CircleElt(1, 3)).rep() == Rational(2, 3));
  CHECK(CircleElt(1, 6).times(Int(9)) == CircleElt(1, 2));
  CHECK(CircleElt(5, 3) == CircleElt(2, 3));
}

TEST_CASE("scalars multiply magnitudes and add phases") {
  Scalar s(Rational(3, 2), CircleElt(1, 4));
  Scalar t(Rational(2), CircleElt(1, 4));
  Scalar p = s * t;
  CHECK(p.mag() == Rational(3));
  CHECK(p.phase() == CircleElt(1, 2));
  CHECK((p * p.inv()).is_one());
  CHECK(s.pow(Int(2)) == Scalar(Rational(9, 4), CircleElt(1, 2)));
  CHECK(s.pow(Int(0)).is_one());
  CHECK(s.pow(Int(-1)) == s.inv());
  CHECK(Scalar::from_phase(CircleElt(1, 3)).mag() == 1);
}
