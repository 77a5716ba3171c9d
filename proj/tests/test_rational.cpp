#include <doctest.h>

#include <random>

#include "lgg/rational.hpp"

using namespace lgg;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(4, 6).numerator() == 2);
  CHECK(Rational(4, 6).denominator() == 3);
  CHECK(Rational(-4, 6).str() == "-2/3");
  CHECK(Rational(4, -6).str() == "-2/3");  // denominator kept positive
  CHECK(Rational(0, 7).str() == "0");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 7) / Rational(2, 7) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  // repeated tenths never drift
  Rational sum;
  for (int i = 0; i < 10; ++i) sum += Rational(1, 10);
  CHECK(sum == Rational(1));
}

TEST_CASE("parsing decimals and ratios") {
  CHECK(Rational::parse("1.25") == Rational(5, 4));
  CHECK(Rational::parse("-0.00001") == Rational(-1, 100000));
  CHECK(Rational::parse("49/32") == Rational(49, 32));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+3.5") == Rational(7, 2));
  CHECK(Rational::parse("0.1") + Rational::parse("0.2") == Rational::parse("0.3"));
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1e5"), Error);
}

TEST_CASE("comparisons across very different scales") {
  Rational tiny(-1, 100000);
  Rational huge(1296);  // 6^4
  CHECK(tiny < huge);
  CHECK(tiny < Rational(0));
  CHECK(abs(tiny) * Rational(100000) == Rational(1));
  CHECK(Rational(1, 100000) + huge > huge);
}

TEST_CASE("to_int64") {
  std::int64_t v = 0;
  CHECK(Rational(42).to_int64(v));
  CHECK(v == 42);
  CHECK_FALSE(Rational(1, 2).to_int64(v));
  Rational big = Rational(1);
  for (int i = 0; i < 8; ++i) big *= Rational(1000000000L);
  CHECK_FALSE(big.to_int64(v));
}

TEST_CASE("association order never matters") {
  std::mt19937_64 rng(7);
  auto rnd = [&] { return Rational(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 999) + 1); };
  for (int i = 0; i < 200; ++i) {
    Rational a = rnd(), b = rnd(), c = rnd(), d = rnd();
    CHECK((a + b) + (c + d) == a + (b + (c + d)));
    CHECK((a * b) * (c * d) == a * (b * (c * d)));
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_SUITE_END();
