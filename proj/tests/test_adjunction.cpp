#include <catch_amalgamated.hpp>

#include <random>

#include "mvlab/adjunction.hpp"

using namespace mvlab;

namespace {

MvElement e(std::int64_t p, std::int64_t q = 1) { return MvElement{Rational(p, q)}; }

const PmvAlgebra kBool = gamma_ring(RationalSubring::integers());
const PmvAlgebra kDyadic = gamma_ring(RationalSubring::localized({2}));
const PmvAlgebra kQ = gamma_ring(RationalSubring::all());

MvModule over_bool(const MvAlgebra& a) { return make_module(kBool, a); }

ModuleHom only_hom(const MvModule& a, const MvModule& b, std::size_t k = 0) {
  auto hs = module_hom_all(a, b);
  REQUIRE(hs.size() > k);
  return hs[k];
}

ModuleHom into_gamma(const MvModule& m, const LinearSpace& v, std::vector<std::size_t> r, std::vector<Rational> s) {
  MvModule gv = functor_gamma_V(v);
  return make_module_hom(m, gv, make_hom(m.carrier(), gv.carrier(), std::move(r), std::move(s)));
}

}  // namespace

TEST_CASE("Gamma of a vector lattice") {
  CHECK(functor_gamma_V(make_linear_space({Rational(1)})) == make_module(kQ, MvAlgebra::interval_q()));
  MvModule two = functor_gamma_V(make_linear_space({Rational(2)}));
  CHECK(two.carrier() == gamma(RationalSubgroup::all(), Rational(2)));
  CHECK(check_module_axioms(two).passed());
  MvModule sq = functor_gamma_V(make_linear_space({Rational(1), Rational(1)}));
  CHECK(sq.carrier() == MvAlgebra::product({MvAlgebra::interval_q(), MvAlgebra::interval_q()}));
  CHECK(check_module_axioms(sq).passed());
  CHECK_THROWS_AS(make_linear_space({Rational(0)}), error);
}

TEST_CASE("restricting linear maps to the unit interval") {
  LinearSpace q1 = make_linear_space({Rational(1)}), q2 = make_linear_space({Rational(2)});
  ModuleHom id = restrict_linear_map(identity_linear_map(1), q1, q1);
  CHECK(id.map().is_identity());
  LinearMap dbl{1, {0}, {Rational(2)}};
  ModuleHom d = restrict_linear_map(dbl, q1, q2);
  CHECK(d(e(1, 3)) == e(2, 3));
  try {
    restrict_linear_map(dbl, q1, q1);
    FAIL("x -> 2x accepted into [0,1]");
  } catch (const error& err) {
    CHECK(err.code() == errc::restriction);
  }
}

TEST_CASE("linear maps are homogeneous lattice homs") {
  LinearSpace v = make_linear_space({Rational(1), Rational(3)});
  LinearMap m{2, {1, 0, 1}, {Rational(1, 2), Rational(2), Rational(5)}};
  CHECK(linear_map_laws(m, v).passed());
}

TEST_CASE("L on objects") {
  LinearSpace a = functor_L_obj(over_bool(MvAlgebra::chain(2)));
  CHECK(a.unit == std::vector<Rational>{Rational(1)});
  CHECK(a.field.describe() == "Q");
  CHECK(a.field.source == RationalSubring::integers());
  LinearSpace b = functor_L_obj(make_module(kDyadic, kDyadic.base()));
  CHECK(b.unit == std::vector<Rational>{Rational(1)});
  LinearSpace c = functor_L_obj(over_bool(MvAlgebra::product({MvAlgebra::chain(2), MvAlgebra::chain(3)})));
  CHECK(c.unit == std::vector<Rational>{Rational(1), Rational(1)});
  CHECK(c.product);
  PmvAlgebra bb = make_pmv(MvAlgebra::product({MvAlgebra::boolean(), MvAlgebra::boolean()}));
  CHECK_THROWS_AS(functor_L_obj(make_module(bb, bb.base())), error);
}

TEST_CASE("universal arrows") {
  LinearSpace q1 = make_linear_space({Rational(1)}), q2 = make_linear_space({Rational(2)});
  MvModule c2 = over_bool(MvAlgebra::chain(2));

  UniversalArrow inc = universal_arrow(c2, q1, into_gamma(c2, q1, {0}, {Rational(1)}));
  CHECK(inc.sharp == identity_linear_map(1));
  CHECK(inc.report.passed());

  UniversalArrow dbl = universal_arrow(c2, q2, into_gamma(c2, q2, {0}, {Rational(2)}));
  CHECK(dbl.sharp == LinearMap{1, {0}, {Rational(2)}});
  CHECK(dbl.star.scalars() == dbl.sharp.scalars);

  MvModule dy = make_module(kDyadic, kDyadic.base());
  UniversalArrow d = universal_arrow(dy, q1, into_gamma(dy, q1, {0}, {Rational(1)}));
  CHECK(d.sharp == identity_linear_map(1));
}

TEST_CASE("only the returned scalar satisfies the triangle") {
  LinearSpace q2 = make_linear_space({Rational(2)});
  MvModule c4 = over_bool(MvAlgebra::chain(4));
  ModuleHom f = into_gamma(c4, q2, {0}, {Rational(2)});
  UniversalArrow ua = universal_arrow(c4, q2, f);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(0, 40), den(1, 12);
  auto xs = enumerate_elements(c4.carrier(), 4);
  for (int i = 0; i < 200; ++i) {
    Rational lambda(num(rng), den(rng));
    bool triangle = true;
    for (const auto& x : xs) triangle = triangle && MvElement{lambda * x[0]} == f(x);
    if (triangle) CHECK(lambda == ua.sharp.scalars[0]);
  }
  CHECK(ua.sharp.scalars[0] == Rational(2));
}

TEST_CASE("L on morphisms") {
  MvModule c2 = over_bool(MvAlgebra::chain(2)), c6 = over_bool(MvAlgebra::chain(6));
  MvModule p = over_bool(MvAlgebra::product({MvAlgebra::chain(2), MvAlgebra::chain(2)}));
  CHECK(functor_L_mor(only_hom(c2, c6)).map == identity_linear_map(1));
  CHECK(functor_L_mor(identity_module_hom(c2)).map == identity_linear_map(1));
  LiftedHom diag = functor_L_mor(only_hom(c2, p));
  CHECK(diag.map == LinearMap{1, {0, 0}, {Rational(1), Rational(1)}});
  CHECK(diag.square.passed());
}

TEST_CASE("functoriality") {
  MvModule c2 = over_bool(MvAlgebra::chain(2)), c4 = over_bool(MvAlgebra::chain(4)), c12 = over_bool(MvAlgebra::chain(12));
  ModuleHom h = only_hom(c2, c4), g = only_hom(c4, c12);
  CHECK(check_functoriality(g, h).passed());
  CHECK(functor_L_mor(compose(g, h)).map == identity_linear_map(1));
  CHECK(check_functoriality(identity_module_hom(c2), identity_module_hom(c2)).passed());

  MvModule p = over_bool(MvAlgebra::product({MvAlgebra::chain(2), MvAlgebra::chain(2)}));
  ModuleHom diag = only_hom(c2, p);
  for (const auto& proj : module_hom_all(p, c2)) {
    CHECK(check_functoriality(proj, diag).passed());
    CHECK(functor_L_mor(compose(proj, diag)).map == identity_linear_map(1));
  }
  try {
    check_functoriality(h, g);
    FAIL("non-composable pair accepted");
  } catch (const error& err) {
    CHECK(err.code() == errc::composition);
  }
}

TEST_CASE("naturality") {
  MvModule c2 = over_bool(MvAlgebra::chain(2)), c6 = over_bool(MvAlgebra::chain(6));
  MvModule p = over_bool(MvAlgebra::product({MvAlgebra::chain(2), MvAlgebra::chain(2)}));
  LawReport inc = check_naturality(only_hom(c2, c6));
  CHECK(inc.passed());
  CHECK(inc.cases() == 3);
  CHECK(check_naturality(identity_module_hom(c6)).passed());
  CHECK(check_naturality(only_hom(c2, p)).passed());
}

TEST_CASE("the default family passes every check") {
  Family fam = default_family();
  CHECK(fam.modules.size() == 6);
  FamilyReport r = check_family(fam);
  CHECK(r.adjunction.passed());
  CHECK(r.adjunction.invalid.empty());
  CHECK(r.adjunction.valid == fam.instances.size());
  CHECK(r.functoriality.passed());
  CHECK(r.functoriality.cases() > 0);
  CHECK(r.naturality.passed());
  CHECK(r.passed());
}

TEST_CASE("adjunction check: vacuous and invalid instances") {
  AdjunctionReport empty = check_adjunction({});
  CHECK(empty.vacuous());
  CHECK(empty.passed());
  CHECK(empty.laws.cases() == 0);

  MvModule c2 = over_bool(MvAlgebra::chain(2));
  LinearSpace q1 = make_linear_space({Rational(1)});
  std::vector<AdjunctionInstance> fam{
      {"inclusion", c2, q1, {0}, {Rational(1)}},
      {"halving", c2, q1, {0}, {Rational(1, 2)}},  // not a hom: top goes to 1/2
  };
  AdjunctionReport r = check_adjunction(fam);
  CHECK(r.valid == 1);
  REQUIRE(r.invalid.size() == 1);
  CHECK(r.invalid[0].rfind("halving", 0) == 0);
  CHECK(r.failures.empty());
  CHECK(r.passed());
}

TEST_CASE("the adjunction is not an equivalence") {
  NonEquivalenceReport w = non_equivalence_witness();
  CHECK(w.field == "Q");
  CHECK(w.module == "chain(2)");
  CHECK(w.gamma_of_lift == "interval_q");
  CHECK_FALSE(w.isomorphic);
  CHECK(w.certificate.find("cardinality") != std::string::npos);

  NonEquivalenceReport q = compare_with_lift(make_module(kQ, MvAlgebra::interval_q()));
  CHECK(q.isomorphic);
  CHECK(q.unit_is_iso);
  NonEquivalenceReport b = compare_with_lift(over_bool(MvAlgebra::boolean()));
  CHECK_FALSE(b.isomorphic);
  CHECK(b.gamma_of_lift == "interval_q");
}
