#include <catch_amalgamated.hpp>

#include "mvlab/ideals.hpp"
#include "mvlab/module.hpp"
#include "mvlab/pmv.hpp"

using namespace mvlab;

namespace {

MvElement e(std::int64_t p, std::int64_t q = 1) { return MvElement{Rational(p, q)}; }

PmvAlgebra ring(std::initializer_list<std::int64_t> primes) { return gamma_ring(RationalSubring::localized(primes)); }

std::vector<PmvAlgebra> totally_ordered() {
  return {gamma_ring(RationalSubring::integers()), ring({2}), ring({2, 3}), ring({5}),
          gamma_ring(RationalSubring::all())};
}

PmvAlgebra bool_square() { return make_pmv(MvAlgebra::product({MvAlgebra::boolean(), MvAlgebra::boolean()})); }

}  // namespace

TEST_CASE("gamma_ring builds the scalar carriers") {
  PmvAlgebra b = gamma_ring(RationalSubring::integers());
  CHECK(b.base() == MvAlgebra::boolean());
  CHECK(b.base().cardinality() == 2u);
  CHECK(ring({2}).base() == gamma(RationalSubgroup::localized(Rational(1), {2}), Rational(1)));
  CHECK(gamma_ring(RationalSubring::all()).base() == MvAlgebra::interval_q());
  CHECK(ring({2}).describe() == "pmv(localized(2))");
  CHECK_THROWS_AS(gamma_ring(RationalSubring::integers(), Rational(2)), error);
}

TEST_CASE("finite chains other than boolean are not product-closed") {
  for (std::int64_t d = 2; d <= 12; ++d) {
    try {
      make_pmv(MvAlgebra::chain(d));
      FAIL("chain(" << d << ") accepted");
    } catch (const error& err) {
      CHECK(err.code() == errc::not_product_closed);
    }
  }
  try {
    make_pmv(MvAlgebra::chain(2));
  } catch (const error& err) {
    CHECK(std::string(err.what()).find("1/4") != std::string::npos);
  }
}

TEST_CASE("products") {
  CHECK(pmv_product(gamma_ring(RationalSubring::integers()), e(1), e(1)) == e(1));
  CHECK(pmv_product(ring({2}), e(1, 2), e(1, 2)) == e(1, 4));
  CHECK(pmv_product(gamma_ring(RationalSubring::all()), e(2, 3), e(3, 4)) == e(1, 2));
  CHECK_THROWS_AS(pmv_product(ring({2}), e(1, 3), e(1)), error);
}

TEST_CASE("product laws hold on every scalar carrier") {
  auto all = totally_ordered();
  all.push_back(bool_square());
  all.push_back(make_pmv(MvAlgebra::product({MvAlgebra::boolean(), MvAlgebra::interval_q()})));
  for (const auto& p : all) {
    INFO(p.describe());
    CHECK(check_pmv_axioms(p).passed());
  }
}

TEST_CASE("MV-domain verdicts") {
  for (const auto& p : totally_ordered()) {
    DomainReport d = is_mv_domain(p);
    INFO(p.describe());
    CHECK(d.holds);
    CHECK(d.status() == "certified");
  }
  Budget order6;
  order6.order = 6;
  DomainReport six = is_mv_domain(ring({2, 3}), order6);
  CHECK(six.holds);
  CHECK(six.cases > 0);

  DomainReport sq = is_mv_domain(bool_square());
  CHECK_FALSE(sq.holds);
  CHECK(sq.exhaustive);
  // All 16 pairs: exactly the two off-diagonal idempotent pairs are zero divisors.
  auto es = enumerate_elements(bool_square().base(), 1);
  REQUIRE(es.size() == 4);
  int divisors = 0;
  for (const auto& x : es)
    for (const auto& y : es) divisors += bool_square().product(x, y).is_zero() && !x.is_zero() && !y.is_zero();
  CHECK(divisors == 2);
  REQUIRE(sq.witness);
  CHECK(sq.witness->at(0).second == MvElement{Rational(1), Rational(0)});
  CHECK(sq.witness->at(1).second == MvElement{Rational(0), Rational(1)});
  CHECK(sq.status() == "refuted");
}

TEST_CASE("PMV+ is strictly weaker than MV-domain") {
  CHECK(is_pmv_plus(bool_square()).holds);
  CHECK_FALSE(is_mv_domain(bool_square()).holds);
  CHECK(is_pmv_plus(gamma_ring(RationalSubring::all())).holds);
  CHECK(is_pmv_plus(gamma_ring(RationalSubring::integers())).holds);
  for (const auto& p : totally_ordered())
    if (is_mv_domain(p).holds) CHECK(is_pmv_plus(p).holds);
}

TEST_CASE("MV-domain iff the ring is an integral domain") {
  for (const auto& p : totally_ordered()) {
    auto rings = p.rings();
    CHECK(is_mv_domain(p).holds == ring_is_integral_domain(rings).holds);
  }
  auto rings = bool_square().rings();
  CHECK(is_mv_domain(bool_square()).holds == ring_is_integral_domain(rings).holds);

  CHECK(ring_is_integral_domain(RationalSubring::localized({2})).holds);
  CHECK(ring_is_integral_domain(RationalSubring::all()).holds);
  std::vector<RationalSubring> zz{RationalSubring::integers(), RationalSubring::integers()};
  DomainReport r = ring_is_integral_domain(zz);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->at(0).second == MvElement{Rational(1), Rational(0)});
}

TEST_CASE("scalar multiples stay in ideals of finite modules") {
  PmvAlgebra b = gamma_ring(RationalSubring::integers());
  for (const auto& carrier : {MvAlgebra::chain(4), MvAlgebra::chain(6), MvAlgebra::product({MvAlgebra::chain(2), MvAlgebra::chain(3)})}) {
    MvModule m = make_module(b, carrier);
    for (const auto& ideal : ideals_finite(carrier))
      for (const auto& x : ideal.elements)
        for (const auto& a : enumerate_elements(b.base(), 1)) CHECK(ideal.contains(m.act(a, x)));
  }
  PmvAlgebra bb = bool_square();
  MvModule m = make_module(bb, bb.base());
  for (const auto& ideal : ideals_finite(bb.base()))
    for (const auto& x : ideal.elements)
      for (const auto& a : enumerate_elements(bb.base(), 1)) CHECK(ideal.contains(m.act(a, x)));
}

TEST_CASE("every element is bounded by a multiple of any positive element") {
  for (const auto& g : {RationalSubgroup::cyclic(Rational(1, 6)), RationalSubgroup::localized(Rational(1), {2}),
                        RationalSubgroup::all()}) {
    std::vector<Rational> pos;
    for (const auto& f : farey_sequence(7))
      for (int k = 0; k < 4; ++k)
        if (Rational q = f + Rational(k); q.sign() > 0 && g.contains(q)) pos.push_back(q);
    for (const auto& p : pos)
      for (const auto& x : pos) {
        std::int64_t n = archimedean_witness(p, x);
        CHECK(x <= Rational(n) * p);
      }
  }
}
