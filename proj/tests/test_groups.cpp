#include <catch_amalgamated.hpp>

#include <random>

#include "mvlab/groups.hpp"
#include "oracles.hpp"

using namespace mvlab;

TEST_CASE("subgroup_generate finds the gcd step") {
  std::vector<Rational> g{Rational(1, 2), Rational(1, 3)};
  RationalSubgroup s = subgroup_generate(g);
  CHECK(s == RationalSubgroup::cyclic(Rational(1, 6)));
  // Bezout: the step is an integer combination of the generators, and each
  // generator is an integer multiple of the step.
  auto [gcd, x, y] = oracle::egcd(3, 2);  // 1/2 = 3/6, 1/3 = 2/6
  CHECK(gcd == 1);
  CHECK(Rational(x) * Rational(1, 2) + Rational(y) * Rational(1, 3) == s.scale());
  CHECK((Rational(1, 2) / s.scale()).is_integer());
  CHECK((Rational(1, 3) / s.scale()).is_integer());

  std::vector<Rational> one{Rational(1)};
  CHECK(subgroup_generate(one) == RationalSubgroup::cyclic(Rational(1)));
  std::vector<Rational> half{Rational(2, 4)};
  CHECK(subgroup_generate(half) == RationalSubgroup::cyclic(Rational(1, 2)));
}

TEST_CASE("subgroup_generate agrees with the gcd oracle on random generators") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(1, 40), den(1, 30), count(1, 4);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> gens;
    for (int k = count(rng); k > 0; --k) gens.emplace_back(num(rng), den(rng));
    RationalSubgroup s = subgroup_generate(gens);
    CHECK(s.scale() == oracle::generated_step(gens));
    for (const auto& q : gens) CHECK(s.contains(q));
  }
}

TEST_CASE("subgroup membership") {
  auto g = RationalSubgroup::cyclic(Rational(1, 6));
  CHECK(subgroup_member(g, Rational(5, 6)));
  CHECK_FALSE(subgroup_member(g, Rational(1, 4)));
  CHECK(subgroup_member(RationalSubgroup::all(), Rational(22, 7)));
  auto loc = RationalSubgroup::localized(Rational(1, 3), {2});
  CHECK(loc.contains(Rational(1, 12)));
  CHECK_FALSE(loc.contains(Rational(1, 5)));
  CHECK_THROWS_AS(RationalSubgroup::cyclic(Rational(0)), error);
}

TEST_CASE("subgroups are closed under + and -") {
  std::vector<RationalSubgroup> gs{RationalSubgroup::cyclic(Rational(1, 6)), RationalSubgroup::localized(Rational(1), {2}),
                                   RationalSubgroup::localized(Rational(1, 3), {2, 5}), RationalSubgroup::all()};
  for (const auto& g : gs) {
    std::vector<Rational> members;
    for (const auto& f : farey_sequence(8))
      for (int k = 0; k < 3; ++k) {
        Rational q = f + Rational(k);
        if (g.contains(q)) members.push_back(q);
      }
    REQUIRE(members.size() > 1);
    for (const auto& a : members)
      for (const auto& b : members) {
        CHECK(g.contains(a + b));
        CHECK(g.contains(-a));
      }
  }
}

TEST_CASE("subring_generate inverts the denominator primes") {
  std::vector<Rational> sixth{Rational(1, 6)};
  CHECK(subring_generate(sixth) == RationalSubring::localized({2, 3}));
  CHECK(subring_generate(std::vector<Rational>{}) == RationalSubring::integers());
  std::vector<Rational> tq{Rational(3, 4)};
  RationalSubring r = subring_generate(tq);
  CHECK(r == RationalSubring::localized({2}));
  // 1/4 = 3 (3/4) - 2 lies in the generated ring.
  CHECK(r.contains(Rational(3) * Rational(3, 4) - Rational(2)));
}

TEST_CASE("subring membership and closure") {
  auto r = RationalSubring::localized({2, 3});
  CHECK(subring_member(r, Rational(5, 36)));
  CHECK_FALSE(subring_member(r, Rational(1, 5)));
  CHECK(subring_member(RationalSubring::integers(), Rational(7)));
  for (const auto& ring : {RationalSubring::integers(), RationalSubring::localized({2}), r, RationalSubring::all()}) {
    CHECK(ring.contains(Rational(1)));
    std::vector<Rational> ms;
    for (const auto& f : farey_sequence(9))
      if (ring.contains(f)) ms.push_back(f + Rational(1));
    for (const auto& a : ms)
      for (const auto& b : ms) {
        CHECK(ring.contains(a * b));
        CHECK(ring.contains(a + b));
      }
  }
}

TEST_CASE("fraction field is Q for every subring") {
  const RationalField q = fraction_field(RationalSubring::all());
  for (const auto& ring : {RationalSubring::integers(), RationalSubring::localized({2}), RationalSubring::localized({2, 3}),
                           RationalSubring::all()}) {
    RationalField k = fraction_field(ring);
    CHECK(k == q);
    CHECK(k.describe() == "Q");
    // Every Farey rational is x/y with x, y in the ring.
    for (const auto& f : farey_sequence(10)) {
      auto [x, y] = quotient_representation(ring, f);
      CHECK(ring.contains(x));
      CHECK(ring.contains(y));
      CHECK_FALSE(y.is_zero());
      CHECK(x / y == f);
    }
  }
  CHECK(fraction_field(q.source) == q);
}

TEST_CASE("archimedean witness") {
  CHECK(archimedean_witness(Rational(1, 3), Rational(5, 2)) == 8);
  CHECK(archimedean_witness(Rational(1), Rational(1)) == 2);
  CHECK(archimedean_witness(Rational(3, 2), Rational(1, 2)) == 1);
  CHECK_THROWS_AS(archimedean_witness(Rational(0), Rational(1)), error);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(1, 100), den(1, 50);
  for (int i = 0; i < 100; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    std::int64_t n = archimedean_witness(a, b);
    CHECK(Rational(n) * a > b);
    CHECK(Rational(n - 1) * a <= b);
  }
}
