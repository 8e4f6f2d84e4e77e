#include <doctest.h>

#include <geomcut/errors.hpp>
#include <geomcut/rational.hpp>

#include <cmath>
#include <sstream>

using namespace geomcut;

TEST_CASE("from_string parses decimals exactly") {
  CHECK(Rational::from_string("0.5") == Rational(1, 2));
  CHECK(Rational::from_string("-12.75") == Rational(-51, 4));
  CHECK(Rational::from_string("0.1") == Rational(1, 10));
  CHECK(Rational::from_string("2") == Rational(2));
  CHECK(Rational::from_string("-0.000003") == Rational(-3, 1000000));
  CHECK(Rational::from_string("10.00") == Rational(10));
}

TEST_CASE("from_string parses fractions exactly") {
  CHECK(Rational::from_string("3/4") == Rational(3, 4));
  CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
  CHECK(Rational::from_string("2/4") == Rational(1, 2));
  CHECK(Rational::from_string("1000000000000000000000/3") ==
        Rational(1000000000) * Rational(1000000000) * Rational(1000) / Rational(3));
}

TEST_CASE("from_string rejects malformed literals") {
  for (const char* bad : {"", " ", "1e5", "1.", ".5", "0x1", "1 2", "+1",
                          "1/0", "1//2", "1.2.3", "--1", "abc", "1/", "/2",
                          "1.2/3", "NaN", "inf"}) {
    CHECK_THROWS_AS(Rational::from_string(bad), BadCoordinate);
  }
}

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) / Rational(1, 6) == Rational(2));

  // 0.1 + 0.2 == 0.3 holds here, unlike in floating point.
  CHECK(Rational::from_string("0.1") + Rational::from_string("0.2") ==
        Rational::from_string("0.3"));

  Rational acc;
  for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
  CHECK(acc == Rational(1));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(-5).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(1, 1000000).sign() == 1);
  CHECK(abs(Rational(-3, 7)) == Rational(3, 7));
}

TEST_CASE("to_string and to_decimal") {
  CHECK(Rational(1, 2).to_string() == "1/2");
  CHECK(Rational(-3).to_string() == "-3");
  CHECK(Rational(1, 2).to_decimal() == "0.5");
  CHECK(Rational(-51, 4).to_decimal() == "-12.75");
  CHECK(Rational(1, 8).to_decimal() == "0.125");
  CHECK(Rational(3, 1000000).to_decimal() == "0.000003");
  CHECK(Rational(7).to_decimal() == "7");
  CHECK(Rational(0).to_decimal() == "0");
  // Denominator with a prime factor other than 2 or 5 has no finite decimal.
  CHECK(Rational(1, 3).to_decimal() == "1/3");
  CHECK(Rational(-1, 6).to_decimal() == "-1/6");
}

TEST_CASE("decimal round trip") {
  for (const char* lit : {"0.5", "-12.75", "0.000003", "7", "0", "123.456"}) {
    const Rational r = Rational::from_string(lit);
    CHECK(Rational::from_string(r.to_decimal()) == r);
  }
}

TEST_CASE("to_double") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(3).to_double() == 3.0);
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("points order lexicographically") {
  const Point a{Rational(0), Rational(1)};
  const Point b{Rational(0), Rational(2)};
  const Point c{Rational(1), Rational(0)};
  CHECK(a < b);
  CHECK(b < c);
  CHECK(a == Point{Rational(0), Rational(1)});
}

TEST_CASE("point arithmetic and products") {
  const Point o{Rational(0), Rational(0)};
  const Point e1{Rational(1), Rational(0)};
  const Point e2{Rational(0), Rational(1)};
  CHECK(cross(o, e1, e2) == Rational(1));
  CHECK(cross(o, e2, e1) == Rational(-1));
  CHECK(cross(e1 - o, e1 - o) == Rational(0));
  CHECK(dot(e1, e2) == Rational(0));
  CHECK(dot(e1, e1) == Rational(1));
  CHECK(midpoint(o, Point{Rational(1), Rational(1)}) ==
        Point{Rational(1, 2), Rational(1, 2)});
  CHECK(Rational(2) * e1 + e2 == Point{Rational(2), Rational(1)});
}
