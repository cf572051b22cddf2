#include <limits>
#include <random>

#include "doctest.h"
#include "fdstab/rational.hpp"

using fdstab::Rational;

TEST_CASE("rationals stay reduced with positive denominator") {
  Rational a(6, -8);
  CHECK(a.num() == -3);
  CHECK(a.den() == 4);
  CHECK(Rational(0, -5).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts fractions, integers and exact decimals") {
  CHECK(Rational::parse("20133/704759") == Rational(20133, 704759));
  CHECK(Rational::parse(" -4015/85641 ") == Rational(-4015, 85641));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("1e-1") == Rational::from_double(0.1));
  CHECK_THROWS(Rational::parse("1/x"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("from_double is exact") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    const double v = d(rng) * std::pow(10.0, static_cast<int>(rng() % 20) - 10);
    CHECK(Rational::from_double(v).to_double() == v);
  }
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK(Rational::from_double(std::numeric_limits<double>::denorm_min()).to_double() ==
        std::numeric_limits<double>::denorm_min());
}

TEST_CASE("sums far beyond 64-bit denominators stay exact") {
  // 1/p for the first primes: the denominator of the sum is their product.
  Rational s;
  const long long primes[] = {999983, 999979, 999961, 999959, 999953, 999931, 999917, 999907};
  for (long long p : primes) s += Rational(1, p);
  Rational back = s;
  for (long long p : primes) back = back - Rational(1, p);
  CHECK(back.is_zero());
  CHECK(s.den() > fdstab::BigInt(std::numeric_limits<long long>::max()));
}
