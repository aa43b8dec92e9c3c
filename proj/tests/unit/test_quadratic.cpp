#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pinch/exact/quadratic.hpp"

using pinch::BigInt;
using pinch::QuadraticNumber;
using pinch::Rational;
using pinch::Sign;

namespace {
Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }
}  // namespace

TEST_CASE("conjugate products and field arithmetic") {
  const Rational d = q(73, 16);
  QuadraticNumber x(Rational(1), Rational(1), d);
  CHECK(x * x.conjugate() == QuadraticNumber(q(-57, 16)));
  CHECK(x / x == QuadraticNumber(1));
  CHECK((x + x.conjugate()) == QuadraticNumber(2));
  CHECK_THROWS_AS(x / QuadraticNumber(0), std::domain_error);
  CHECK_THROWS_AS(x + QuadraticNumber(Rational(0), Rational(1), Rational(2)), pinch::RadicandMismatch);
  CHECK_THROWS_AS(QuadraticNumber(Rational(0), Rational(1), Rational(-1)), std::domain_error);
  // A rational operand adopts the other field.
  CHECK((x + QuadraticNumber(q(1, 2))).radicand() == d);
}

TEST_CASE("mu times r is one for every rational lambda") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    Rational lambda(BigInt(static_cast<long>(rng() % 201) - 100), BigInt(static_cast<long>(rng() % 20) + 1));
    Rational d = lambda * lambda + Rational(4);
    QuadraticNumber mu(lambda / Rational(2), q(1, 2), d);
    QuadraticNumber r(-lambda / Rational(2), q(1, 2), d);
    CHECK(mu * r == QuadraticNumber(1));
  }
}

TEST_CASE("exact sign") {
  CHECK(QuadraticNumber(0).sign() == Sign::zero);
  CHECK(QuadraticNumber(Rational(-3), Rational(1), Rational(8)).sign() == Sign::negative);
  CHECK(QuadraticNumber(Rational(-3), Rational(1), Rational(10)).sign() == Sign::positive);
  CHECK(QuadraticNumber(Rational(-3), Rational(1), Rational(9)).sign() == Sign::zero);
  CHECK(QuadraticNumber(Rational(3), Rational(-1), Rational(9)).sign() == Sign::zero);
  CHECK(QuadraticNumber(Rational(0), Rational(-2), Rational(5)).sign() == Sign::negative);
}

TEST_CASE("enclosure") {
  QuadraticNumber r73 = QuadraticNumber::sqrt_of(Rational(73));
  CHECK(oracle::agrees(r73.enclose(), oracle::kSqrt73));
  QuadraticNumber six = QuadraticNumber::sqrt_of(Rational(6));
  CHECK(oracle::agrees(six.enclose(), oracle::kSqrt6));
}

TEST_CASE("square roots inside the field") {
  // (3 + sqrt5)/2 = ((1 + sqrt5)/2)^2
  QuadraticNumber x(q(3, 2), q(1, 2), Rational(5));
  auto root = x.sqrt();
  REQUIRE(root);
  CHECK(*root == QuadraticNumber(q(1, 2), q(1, 2), Rational(5)));
  CHECK(!QuadraticNumber(Rational(0), Rational(1), Rational(2)).sqrt());
  CHECK(QuadraticNumber(q(9, 4)).sqrt() == QuadraticNumber(q(3, 2)));
  CHECK(!QuadraticNumber(Rational(-1)).sqrt());
}

TEST_CASE("rational_value") {
  CHECK(QuadraticNumber(Rational(1), Rational(2), Rational(9)).rational_value() == Rational(7));
  CHECK(!QuadraticNumber(Rational(1), Rational(2), Rational(3)).rational_value());
}

TEST_CASE("cross-field comparison") {
  QuadraticNumber r2 = QuadraticNumber::sqrt_of(Rational(2));
  QuadraticNumber r3 = QuadraticNumber::sqrt_of(Rational(3));
  CHECK(compare(r2, r3) == Sign::negative);
  CHECK(compare(r3, r2) == Sign::positive);
  CHECK(compare(r2 + QuadraticNumber(Rational(1)), r3) == Sign::positive);  // 2.414 > 1.732
  CHECK(compare(QuadraticNumber::sqrt_of(Rational(8)), QuadraticNumber(Rational(0), Rational(2), Rational(2))) ==
        Sign::zero);
  CHECK(r2 == QuadraticNumber(Rational(0), q(1, 2), Rational(8)));
}

TEST_CASE("exact sign agrees with decided interval sign") {
  std::mt19937_64 rng(17);
  auto draw = [&] { return Rational(BigInt(static_cast<long>(rng() % 41) - 20), BigInt(static_cast<long>(rng() % 10) + 1)); };
  int decided = 0;
  for (int i = 0; i < 10000; ++i) {
    Rational d = abs(draw());
    QuadraticNumber x(draw(), draw(), d);
    pinch::Interval e = x.enclose();
    if (auto s = e.sign()) {
      ++decided;
      CHECK(*s == pinch::to_int(x.sign()));
    }
    QuadraticNumber y(draw(), draw(), d);
    CHECK(compare(x, y) == (x - y).sign());
  }
  CHECK(decided > 9000);
}
