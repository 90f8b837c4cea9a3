#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <sstream>

#include "etacalc/rational.hpp"

using etacalc::DivisionByZero;
using etacalc::Int;
using etacalc::Rational;
using etacalc::SchemaError;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(Int(2), Int(12)) == Rational(Int(1), Int(6)));
  CHECK(Rational(Int(2), Int(4)).num() == 1);
  CHECK(Rational(Int(2), Int(4)).den() == 2);
  CHECK(Rational(Int(3), Int(-6)) == Rational(Int(-1), Int(2)));
  CHECK(Rational(Int(-3), Int(-6)) == Rational(Int(1), Int(2)));
  CHECK(Rational(Int(0), Int(7)).den() == 1);
  CHECK(Rational(Int(0), Int(7)).is_zero());
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), DivisionByZero);
}

TEST_CASE("canonicalization is idempotent") {
  Rational a(Int(36), Int(-48));
  Rational b(a.num(), a.den());
  CHECK(a == b);
  CHECK(b.num() == a.num());
  CHECK(b.den() == a.den());
}

TEST_CASE("arithmetic on small fractions") {
  CHECK(Rational(1, 6) + Rational(1, 4) == Rational(5, 12));
  CHECK(Rational(1, 6) - Rational(1, 4) == Rational(-1, 12));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(-3) / Rational(6) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(2, 3) == Rational(1));
  CHECK((-Rational(5, 7)) == Rational(-5, 7));
  CHECK(Rational(5, 7).abs() == Rational(5, 7));
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
}

TEST_CASE("division guards") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK(Rational(-2, 3).inverse() == Rational(-3, 2));
}

TEST_CASE("sign and predicates") {
  CHECK(Rational(3, 7).sign() == 1);
  CHECK(Rational(-3, 7).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(4, 2).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
}

TEST_CASE("ordering is exact") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(1000000, 3000001) < Rational(1, 3));
}

TEST_CASE("field axioms hold on a randomized sweep") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 30);
  auto draw = [&] { return Rational(Int(num(rng)), Int(den(rng))); };
  for (int i = 0; i < 300; ++i) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("values stay exact far past 64 bits") {
  // 3^50 exceeds 2^64; exactness must survive the round trip.
  Rational p(1, 3);
  Rational pow(1);
  for (int i = 0; i < 50; ++i) pow *= p;
  Rational back(1);
  for (int i = 0; i < 50; ++i) back *= Rational(3);
  CHECK(pow * back == Rational(1));
  CHECK(pow.den() == back.num());
  // Harmonic-style sum with huge denominators still cancels exactly.
  Rational s;
  for (long long k = 1; k <= 40; ++k) s += Rational(1, k);
  for (long long k = 1; k <= 40; ++k) s -= Rational(1, k);
  CHECK(s.is_zero());
}

TEST_CASE("parse accepts p, p/q and signs") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("+4") == Rational(4));
  CHECK(Rational::parse("5/10") == Rational(1, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("  7/2 ") == Rational(7, 2));
  CHECK(Rational::parse("123456789012345678901234567890/3") * Rational(3) ==
        Rational::parse("123456789012345678901234567890"));
}

TEST_CASE("parse rejects malformed literals") {
  CHECK_THROWS_AS(Rational::parse(""), SchemaError);
  CHECK_THROWS_AS(Rational::parse("abc"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("1.5"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("1/"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("/2"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("1/0"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("2 3"), SchemaError);
}

TEST_CASE("printing round-trips through parse") {
  for (const char* text : {"0", "1", "-1", "1/2", "-1/12", "23/12", "-3/4"}) {
    Rational r = Rational::parse(text);
    CHECK(r.str() == text);
    CHECK(Rational::parse(r.str()) == r);
  }
  std::ostringstream os;
  os << Rational(-1, 12);
  CHECK(os.str() == "-1/12");
}

TEST_CASE("to_double approximates the fraction") {
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
  CHECK(Rational(-1, 12).to_double() == doctest::Approx(-1.0 / 12));
}
