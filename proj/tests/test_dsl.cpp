#include <catch_amalgamated.hpp>

#include <optional>
#include <random>

#include "mvlab/dsl.hpp"

using namespace mvlab;

namespace {

std::optional<errc> code_of(std::string_view text) {
  try {
    parse_module(text);
  } catch (const error& e) {
    return e.code();
  }
  return std::nullopt;
}

std::size_t syntax_position(std::string_view text) {
  try {
    parse_expr(text);
  } catch (const syntax_error& e) {
    return e.position();
  }
  FAIL("no syntax error for " << text);
  return 0;
}

// Random well-formed syntax trees; elaboration is not required to succeed.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  Expr any(int depth) {
    int pick = below(depth <= 0 ? 2 : 4);
    if (pick == 0) return number();
    if (pick == 1) return atom();
    return call(depth - 1);
  }

 private:
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Expr number() {
    Expr e;
    e.kind = Expr::Kind::Number;
    e.number = Rational(below(41) - 20, 1 + below(9));
    return e;
  }

  Expr atom() {
    static const char* atoms[] = {"boolean", "interval_q", "integers", "rationals"};
    Expr e;
    e.head = atoms[below(4)];
    return e;
  }

  Expr tuple() {
    Expr e;
    e.kind = Expr::Kind::Tuple;
    for (int i = below(4); i > 0; --i) {
      e.args.push_back(number());
      e.keys.emplace_back();
    }
    return e;
  }

  Expr call(int depth) {
    std::vector<std::string> heads;
    for (const auto& [h, rule] : detail::head_rules())
      if (rule.max_args != 0) heads.push_back(h);
    Expr e;
    e.head = heads[below(static_cast<int>(heads.size()))];
    const auto& rule = detail::head_rules().at(e.head);
    if (rule.keyed) {
      std::vector<std::string> keys = rule.required;
      for (const auto& k : rule.keys)
        if (std::find(keys.begin(), keys.end(), k) == keys.end() &&
            (static_cast<int>(keys.size()) < rule.min_args || (static_cast<int>(keys.size()) < rule.max_args && below(2))))
          keys.push_back(k);
      for (const auto& k : keys) {
        e.keys.push_back(k);
        e.args.push_back(k == "route" ? tuple() : any(depth));
      }
    } else {
      int n = rule.max_args < 0 ? rule.min_args + below(3) : rule.min_args + below(rule.max_args - rule.min_args + 1);
      for (int i = 0; i < n; ++i) {
        e.keys.emplace_back();
        e.args.push_back(any(depth));
      }
    }
    return e;
  }

  std::mt19937_64 rng_;
};

}  // namespace

TEST_CASE("parsing algebras") {
  CHECK(parse_algebra("chain(6)") == MvAlgebra::chain(6));
  const MvAlgebra halves = gamma(RationalSubgroup::cyclic(Rational(1, 2)), Rational(2));
  CHECK(parse_algebra("gamma(cyclic(1/2), 2)") == halves);
  CHECK(parse_algebra("gamma(cyclic(1/2), 2)").cardinality() == 5u);
  CHECK(parse_algebra("  gamma ( cyclic ( 1 / 2 ) , 2 ) ") == halves);
  CHECK(parse_algebra("boolean") == MvAlgebra::boolean());
  CHECK(parse_algebra("interval_q") == MvAlgebra::interval_q());
  CHECK(parse_algebra("prod(chain(2), chain(3))") == MvAlgebra::product({MvAlgebra::chain(2), MvAlgebra::chain(3)}));
  CHECK(parse_algebra("gamma(localized(2), 1)") == gamma(RationalSubgroup::localized(Rational(1), {2}), Rational(1)));
  CHECK(parse_algebra("gamma(scaled(1/3, localized(2)), 1)") ==
        gamma(RationalSubgroup::localized(Rational(1, 3), {2}), Rational(1)));
  CHECK(parse_algebra("gamma(rationals, 2)") == gamma(RationalSubgroup::all(), Rational(2)));
}

TEST_CASE("parsing scalar algebras") {
  CHECK(parse_pmv("pmv(localized(6))") == gamma_ring(RationalSubring::localized({2, 3})));
  CHECK(parse_pmv("pmv(integers)") == gamma_ring(RationalSubring::integers()));
  CHECK(parse_pmv("pmv(interval_q)") == gamma_ring(RationalSubring::all()));
  try {
    parse_pmv("pmv(chain(2))");
    FAIL("pmv(chain(2)) accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::elaboration);
    CHECK(std::string(e.what()).find("1/4") != std::string::npos);
  }
}

TEST_CASE("parsing modules and homs") {
  MvModule m = parse_module("module(scalars=pmv(localized(2)), group=localized(2), unit=2)");
  CHECK(m.scalars() == gamma_ring(RationalSubring::localized({2})));
  CHECK(m.carrier() == gamma(RationalSubgroup::localized(Rational(1), {2}), Rational(2)));
  MvModule c = parse_module("module(scalars=pmv(integers), carrier=chain(3))");
  CHECK(c == make_module(gamma_ring(RationalSubring::integers()), MvAlgebra::chain(3)));
  CHECK(parse_module("chain(4)") == make_module(gamma_ring(RationalSubring::integers()), MvAlgebra::chain(4)));
  CHECK(code_of("module(scalars=pmv(localized(2)), group=cyclic(1/3), unit=1)") == errc::elaboration);
  CHECK(code_of("gamma(cyclic(1/2), 1/3)") == errc::elaboration);

  ModuleHom h = elaborate_hom(parse_expr("hom(source=chain(2), target=chain(6))"));
  CHECK(h(MvElement{Rational(1, 2)}) == MvElement{Rational(1, 2)});
  ModuleHom p = elaborate_hom(parse_expr("hom(source=prod(chain(2), chain(2)), target=chain(2), index=1)"));
  CHECK(p.map().routing() == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(elaborate_hom(parse_expr("hom(source=chain(3), target=chain(4))")), error);
}

TEST_CASE("syntax errors carry the offending position") {
  CHECK(syntax_position("chain(6") == 7);
  CHECK(syntax_position("chian(6)") == 0);
  CHECK(syntax_position("gamma(cyclic(1/2) 2)") == 18);
  CHECK(syntax_position("prod(chain(2), )") == 15);
  CHECK(syntax_position("boolean(1)") == 7);
  CHECK(syntax_position("chain(6) x") == 9);
  CHECK(syntax_position("module(scalars=pmv(integers), colour=1)") == 30);
  CHECK(syntax_position("chain(1/0)") == 6);
  CHECK(syntax_position("") == 0);
  try {
    parse_expr("gamma(cyclic(1/2))");
    FAIL("arity not checked");
  } catch (const syntax_error& e) {
    CHECK(e.code() == errc::syntax);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("print then parse is the identity on syntax trees") {
  ExprGen gen(20241015);
  for (int i = 0; i < 500; ++i) {
    Expr e = gen.any(3);
    std::string text = print_expr(e);
    INFO(text);
    Expr back = parse_expr(text);
    CHECK(back == e);
    CHECK(print_expr(back) == text);
  }
}

TEST_CASE("descriptions parse back to the same structure") {
  std::vector<MvAlgebra> as{MvAlgebra::boolean(), MvAlgebra::chain(7), MvAlgebra::interval_q(),
                            gamma(RationalSubgroup::cyclic(Rational(1, 2)), Rational(3)),
                            gamma(RationalSubgroup::localized(Rational(1), {2, 3}), Rational(1)),
                            gamma(RationalSubgroup::localized(Rational(1, 5), {2}), Rational(2)),
                            gamma(RationalSubgroup::all(), Rational(3, 2)),
                            MvAlgebra::product({MvAlgebra::chain(2), MvAlgebra::interval_q()})};
  for (const auto& a : as) {
    INFO(a.describe());
    CHECK(parse_algebra(a.describe()) == a);
  }
  for (const auto& p : {gamma_ring(RationalSubring::integers()), gamma_ring(RationalSubring::localized({2})),
                        gamma_ring(RationalSubring::all())}) {
    INFO(p.describe());
    CHECK(parse_pmv(p.describe()) == p);
  }
}
