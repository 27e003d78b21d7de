#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "mvlab/rational.hpp"

using mvlab::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(3, 6) == Rational(1, 2));
  CHECK(Rational(3, 6).str() == "1/2");
  CHECK(Rational(4, -2).str() == "-2");
  CHECK(Rational(0, 5).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), mvlab::error);
}

TEST_CASE("rational arithmetic and order") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK_THROWS_AS(Rational(1) / Rational(0), mvlab::error);
}

TEST_CASE("parse accepts p/q and integers") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK_THROWS_AS(Rational::parse("1/"), mvlab::error);
  CHECK_THROWS_AS(Rational::parse("x"), mvlab::error);
  CHECK_THROWS_AS(Rational::parse("1/0"), mvlab::error);
}

TEST_CASE("overflow is reported, not wrapped") {
  Rational big(std::int64_t(1) << 62);
  CHECK_THROWS_AS(big * big, mvlab::error);
}

TEST_CASE("farey sequences") {
  auto f3 = mvlab::farey_sequence(3);
  std::vector<Rational> want{Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)};
  CHECK(f3 == want);
  // |F_n| = 1 + sum phi(k)
  for (int n = 1; n <= 12; ++n) {
    std::size_t count = 1;
    for (int k = 1; k <= n; ++k) {
      int phi = 0;
      for (int j = 1; j <= k; ++j) phi += std::gcd(j, k) == 1;
      count += phi;
    }
    CHECK(mvlab::farey_sequence(n).size() == count);
  }
}

TEST_CASE("field laws on random rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int i = 0; i < 500; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("prime factors and smoothness") {
  CHECK(mvlab::prime_factors(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(mvlab::prime_factors(1).empty());
  CHECK(mvlab::is_smooth(36, {2, 3}));
  CHECK_FALSE(mvlab::is_smooth(5, {2, 3}));
}
