#include <doctest.h>

#include <random>

#include "ncgb/rational.hpp"

using ncgb::Rational;

TEST_CASE("construction reduces and fixes the sign") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("basic arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(-1, 3) * Rational(3) == Rational(-1));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(3, 4) / Rational(3) == Rational(1, 4));
  CHECK(Rational(5, 7).inverse() == Rational(7, 5));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parsing round trip") {
  CHECK(Rational::from_string("3/9") == Rational(1, 3));
  CHECK(Rational::from_string("-7") == Rational(-7));
  for (long n = -12; n <= 12; ++n)
    for (long d = 1; d <= 9; ++d) {
      Rational q(n, d);
      CHECK(Rational::from_string(q.str()) == q);
    }
}

TEST_CASE("field axioms on random values") {
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 24);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (int trial = 0; trial < 300; ++trial) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("ordering matches numeric order") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 5).abs() == Rational(7, 5));
  CHECK(Rational(-7, 5).abs() == Rational(7, 5));
}
