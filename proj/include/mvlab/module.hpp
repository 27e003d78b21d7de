#pragma once

/**
 * @file module.hpp
 * @brief MV-modules over a PMV-algebra P, module homs and the unit embedding.
 *
 * The action is rational multiplication. `route[j]` names the scalar
 * coordinate acting on carrier coordinate j: all zeros when P is totally
 * ordered (a scalar acts on every coordinate), the identity when P and the
 * carrier have the same arity.
 */

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvlab/check.hpp"
#include "mvlab/hom.hpp"
#include "mvlab/pmv.hpp"

namespace mvlab {

class MvModule {
 public:
  MvModule() = default;  // boolean over boolean

  const PmvAlgebra& scalars() const noexcept { return scalars_; }
  const MvAlgebra& carrier() const noexcept { return carrier_; }
  const std::vector<std::size_t>& route() const noexcept { return route_; }

  MvElement act(const MvElement& alpha, const MvElement& x) const {
    MvElement r(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) r[j] = alpha[route_[j]] * x[j];
    return r;
  }

  bool default_route() const { return route_ == default_route_for(scalars_, carrier_); }

  std::string describe() const {
    std::string s = "module(scalars=" + scalars_.describe() + ", ";
    if (carrier_.is_product()) {
      s += "carrier=" + carrier_.describe();
    } else {
      s += "group=" + carrier_.component(0).group.describe() + ", unit=" + carrier_.component(0).unit.str();
    }
    if (!default_route()) {
      s += ", route=(";
      for (std::size_t j = 0; j < route_.size(); ++j) s += (j ? ", " : "") + std::to_string(route_[j]);
      s += ")";
    }
    return s + ")";
  }

  friend bool operator==(const MvModule&, const MvModule&) = default;

  static std::vector<std::size_t> default_route_for(const PmvAlgebra& p, const MvAlgebra& m) {
    std::vector<std::size_t> r(m.arity(), 0);
    if (p.base().arity() > 1 && p.base().arity() == m.arity())
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = j;
    return r;
  }

  friend MvModule make_module(const PmvAlgebra& p, const MvAlgebra& carrier, std::vector<std::size_t> route);

 private:
  PmvAlgebra scalars_;
  MvAlgebra carrier_;
  std::vector<std::size_t> route_{0};
};

/// Validates closure of every carrier group under its scalar ring, checked on
/// generators: for each ring generator r (1/p for an inverted prime p) and the
/// group generator g, r g must stay in the group.
inline MvModule make_module(const PmvAlgebra& p, const MvAlgebra& carrier, std::vector<std::size_t> route) {
  if (route.size() != carrier.arity()) fail(errc::not_a_module, "scalar routing arity does not match the carrier");
  const auto rings = p.rings();
  for (std::size_t j = 0; j < carrier.arity(); ++j) {
    if (route[j] >= rings.size()) fail(errc::not_a_module, "scalar routing index out of range");
    const auto& ring = rings[route[j]];
    const auto& g = carrier.component(j).group;
    if (g.is_all()) continue;
    std::optional<Rational> r;
    if (ring.is_all()) {
      for (std::int64_t q = 2; !r; ++q)
        if (prime_factors(q) == PrimeSet{q} && !std::binary_search(g.primes().begin(), g.primes().end(), q))
          r = Rational(1, q);
    } else {
      for (auto q : ring.inverted_primes())
        if (!std::binary_search(g.primes().begin(), g.primes().end(), q)) {
          r = Rational(1, q);
          break;
        }
    }
    if (r) {
      fail(errc::not_a_module, "not closed under scalars: (" + r->str() + ")*(" + g.scale().str() + ") = " +
                                   (*r * g.scale()).str() + " is not in " + g.describe());
    }
  }
  MvModule m;
  m.scalars_ = p;
  m.carrier_ = carrier;
  m.route_ = std::move(route);
  return m;
}

inline MvModule make_module(const PmvAlgebra& p, const MvAlgebra& carrier) {
  if (p.base().arity() > 1 && p.base().arity() != carrier.arity()) {
    fail(errc::not_a_module, "scalars " + p.describe() + " cannot act on " + carrier.describe() +
                                 ": arities differ and the scalars are not totally ordered");
  }
  return make_module(p, carrier, MvModule::default_route_for(p, carrier));
}

/// The module Gamma(G, v) over P.
inline MvModule module_make(const PmvAlgebra& p, const RationalSubgroup& g, const Rational& v) {
  return make_module(p, gamma(g, v));
}

inline MvElement scalar_mul(const MvModule& m, const MvElement& alpha, const MvElement& x) {
  detail::require_member(m.scalars().base(), alpha);
  detail::require_member(m.carrier(), x);
  return m.act(alpha, x);
}

struct StandardAction {
  const MvModule* m;
  MvElement operator()(const MvElement& alpha, const MvElement& x) const { return m->act(alpha, x); }
};

namespace detail {

inline std::optional<MvElement> partial_sum(const MvAlgebra& a, const MvElement& x, const MvElement& y) {
  MvElement s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    s[i] = x[i] + y[i];
    if (a.component(i).unit < s[i]) return std::nullopt;
  }
  return s;
}

}  // namespace detail

/// Module laws with partial addition (only where sums stay below the unit),
/// plus isotonicity of the action in each argument.
template <class Action>
LawReport check_module_axioms(const MvModule& m, const Budget& budget, Action act) {
  TupleSpace space(budget);
  const auto& P = m.scalars().base();
  const auto& M = m.carrier();
  const auto sp = space.add(P);
  const auto sm = space.add(M);
  using Span = std::span<const MvElement>;
  LawReport rep;
  rep.instance = m.describe();
  rep.seed = budget.seed;
  rep.laws.push_back(space.check("closure", "alpha x lies in M", {{sp, "alpha"}, {sm, "x"}},
                                 [&](Span t) -> std::optional<bool> { return M.contains(act(t[0], t[1])); }));
  rep.laws.push_back(space.check("distrib_vector", "alpha (x + y) = alpha x + alpha y when x + y is defined",
                                 {{sp, "alpha"}, {sm, "x"}, {sm, "y"}}, [&](Span t) -> std::optional<bool> {
                                   auto s = detail::partial_sum(M, t[1], t[2]);
                                   if (!s) return std::nullopt;
                                   auto rhs = detail::partial_sum(M, act(t[0], t[1]), act(t[0], t[2]));
                                   return rhs && act(t[0], *s) == *rhs;
                                 }));
  rep.laws.push_back(space.check("distrib_scalar", "(alpha + beta) x = alpha x + beta x when alpha + beta is defined",
                                 {{sp, "alpha"}, {sp, "beta"}, {sm, "x"}}, [&](Span t) -> std::optional<bool> {
                                   auto s = detail::partial_sum(P, t[0], t[1]);
                                   if (!s) return std::nullopt;
                                   auto rhs = detail::partial_sum(M, act(t[0], t[2]), act(t[1], t[2]));
                                   return rhs && act(*s, t[2]) == *rhs;
                                 }));
  rep.laws.push_back(space.check("mixed_assoc", "alpha (beta x) = (alpha . beta) x",
                                 {{sp, "alpha"}, {sp, "beta"}, {sm, "x"}}, [&](Span t) -> std::optional<bool> {
                                   return act(t[0], act(t[1], t[2])) == act(m.scalars().product(t[0], t[1]), t[2]);
                                 }));
  rep.laws.push_back(space.check("unit_action", "1 x = x", {{sm, "x"}},
                                 [&](Span t) -> std::optional<bool> { return act(P.top(), t[0]) == t[0]; }));
  rep.laws.push_back(space.check("unit_complement", "(alpha 1)* = alpha* 1", {{sp, "alpha"}},
                                 [&](Span t) -> std::optional<bool> {
                                   return detail::neg(M, act(t[0], M.top())) == act(detail::neg(P, t[0]), M.top());
                                 }));
  rep.laws.push_back(space.check("isotone_scalar", "alpha <= beta implies alpha x <= beta x",
                                 {{sp, "alpha"}, {sp, "beta"}, {sm, "x"}}, [&](Span t) -> std::optional<bool> {
                                   if (!leq(t[0], t[1])) return std::nullopt;
                                   return leq(act(t[0], t[2]), act(t[1], t[2]));
                                 }));
  rep.laws.push_back(space.check("isotone_vector", "x <= y implies alpha x <= alpha y",
                                 {{sp, "alpha"}, {sm, "x"}, {sm, "y"}}, [&](Span t) -> std::optional<bool> {
                                   if (!leq(t[1], t[2])) return std::nullopt;
                                   return leq(act(t[0], t[1]), act(t[0], t[2]));
                                 }));
  return rep;
}

inline LawReport check_module_axioms(const MvModule& m, const Budget& budget = {}) {
  return check_module_axioms(m, budget, StandardAction{&m});
}

/// True when P is a totally ordered MV-domain; every scalar carrier in scope
/// is then Gamma of a subring of Q, a semisimple subalgebra of [0,1].
inline bool scalars_meet_domain_hypothesis(const PmvAlgebra& p, const Budget& budget = {}) {
  return p.totally_ordered() && is_mv_domain(p, budget).holds;
}

/// alpha x = 0 implies alpha = 0 or x = 0.
inline DomainReport check_no_zero_divisors(const MvModule& m, const Budget& budget = {}) {
  TupleSpace space(budget);
  const auto sp = space.add(m.scalars().base());
  const auto sm = space.add(m.carrier());
  auto c = space.check("no_zero_divisors", "alpha x = 0 implies alpha = 0 or x = 0", {{sp, "alpha"}, {sm, "x"}},
                       [&](std::span<const MvElement> t) -> std::optional<bool> {
                         return !m.act(t[0], t[1]).is_zero() || t[0].is_zero() || t[1].is_zero();
                       });
  auto rep = detail::to_domain_report(c, m.describe(), "no_zero_divisors", budget);
  if (scalars_meet_domain_hypothesis(m.scalars(), budget)) {
    rep.certificates.push_back("hypothesis met: scalars form a totally ordered semisimple MV-domain");
    if (rep.holds) {
      rep.certificates.push_back("scalars act by multiplication in Q on each coordinate; a product of rationals "
                                 "vanishes only if a factor does");
    }
  } else {
    rep.certificates.push_back("hypothesis not met: scalars are not a totally ordered MV-domain");
  }
  return rep;
}

/// An MV-hom between carriers that commutes with the action of the source scalars.
class ModuleHom {
 public:
  const MvModule& source() const noexcept { return source_; }
  const MvModule& target() const noexcept { return target_; }
  const MvHom& map() const noexcept { return map_; }
  MvElement operator()(const MvElement& x) const { return map_(x); }
  std::string describe() const { return map_.describe(); }
  friend bool operator==(const ModuleHom&, const ModuleHom&) = default;

  static ModuleHom unchecked(MvModule s, MvModule t, MvHom h) {
    ModuleHom m;
    m.source_ = std::move(s);
    m.target_ = std::move(t);
    m.map_ = std::move(h);
    return m;
  }

 private:
  ModuleHom() : map_(identity_hom(MvAlgebra())) {}
  MvModule source_, target_;
  MvHom map_;
};

namespace detail {

/// A source scalar seen in the target's scalar coordinates (diagonally when
/// the source scalars are totally ordered), if it is one.
inline std::optional<MvElement> embed_scalar(const MvAlgebra& q, const MvElement& a) {
  MvElement b(q.arity());
  if (a.size() == q.arity()) {
    b = a;
  } else if (a.size() == 1) {
    for (std::size_t j = 0; j < q.arity(); ++j) b[j] = a[0];
  } else {
    return std::nullopt;
  }
  if (!q.contains(b)) return std::nullopt;
  return b;
}

}  // namespace detail

/// Hom laws of the carrier map plus h(alpha x) = alpha h(x) for alpha in the
/// source scalars, which must also be scalars of the target.
inline LawReport module_hom_laws(const MvModule& src, const MvModule& tgt, const MvHom& h, const Budget& budget = {}) {
  TupleSpace space(budget);
  const auto sp = space.add(src.scalars().base());
  const auto sm = space.add(src.carrier());
  const auto& q = tgt.scalars().base();
  LawReport rep = hom_laws(h, budget);
  rep.laws.push_back(space.check("scalars_embed", "alpha in P is a scalar of the target", {{sp, "alpha"}},
                                 [&](std::span<const MvElement> t) -> std::optional<bool> {
                                   return detail::embed_scalar(q, t[0]).has_value();
                                 }));
  if (!rep.laws.back().passed()) return rep;
  rep.laws.push_back(space.check("commutes", "h(alpha x) = alpha h(x)", {{sp, "alpha"}, {sm, "x"}},
                                 [&](std::span<const MvElement> t) -> std::optional<bool> {
                                   return h(src.act(t[0], t[1])) == tgt.act(*detail::embed_scalar(q, t[0]), h(t[1]));
                                 }));
  return rep;
}

inline ModuleHom make_module_hom(const MvModule& src, const MvModule& tgt, const MvHom& h, const Budget& budget = {}) {
  if (!(h.source() == src.carrier()) || !(h.target() == tgt.carrier()))
    fail(errc::invalid_hom, "hom " + h.describe() + " does not connect the module carriers");
  auto rep = module_hom_laws(src, tgt, h, budget);
  for (const auto& l : rep.laws)
    if (!l.passed()) fail(errc::invalid_hom, "module hom law '" + l.statement + "' fails at " + to_string(*l.counterexample));
  return ModuleHom::unchecked(src, tgt, h);
}

inline ModuleHom compose(const ModuleHom& g, const ModuleHom& h) {
  if (!(h.target() == g.source()))
    fail(errc::composition, "cannot compose: " + h.target().describe() + " != " + g.source().describe());
  return ModuleHom::unchecked(h.source(), g.target(), compose(g.map(), h.map()));
}

inline ModuleHom identity_module_hom(const MvModule& m) { return ModuleHom::unchecked(m, m, identity_hom(m.carrier())); }

/// Every module hom between two modules over the same scalars.
inline std::vector<ModuleHom> module_hom_all(const MvModule& a, const MvModule& b, const Budget& budget = {}) {
  std::vector<ModuleHom> out;
  for (const auto& h : hom_all(a.carrier(), b.carrier(), budget)) {
    try {
      out.push_back(make_module_hom(a, b, h, budget));
    } catch (const error& e) {
      if (e.code() != errc::invalid_hom) throw;
    }
  }
  return out;
}

struct UnitEmbedding {
  MvHom iota;
  LawReport report;
};

/// iota(a) = a 1 from the scalars into the module: validated as an injective MV-hom.
inline UnitEmbedding unit_embedding(const MvModule& m, const Budget& budget = {}) {
  const PmvAlgebra& p = m.scalars();
  if (!p.totally_ordered())
    fail(errc::hypothesis_not_met, "unit embedding needs totally ordered scalars, got " + p.describe());
  const MvAlgebra& P = p.base();
  const MvAlgebra& M = m.carrier();
  std::vector<Rational> lambda(M.arity());
  for (std::size_t j = 0; j < M.arity(); ++j) lambda[j] = M.component(j).unit;
  MvHom iota = make_hom(P, M, m.route(), lambda, budget);

  TupleSpace space(budget);
  const auto d = space.add(P);
  using Span = std::span<const MvElement>;
  UnitEmbedding out{iota, hom_laws(iota, budget)};
  auto& rep = out.report;
  rep.instance = "iota: " + p.describe() + " -> " + m.describe();
  rep.laws.push_back(space.check("is_a_times_1", "iota(a) = a 1", {{d, "a"}}, [&](Span t) -> std::optional<bool> {
    return iota(t[0]) == m.act(t[0], M.top());
  }));
  rep.laws.push_back(space.check("injective", "iota(a) = iota(b) implies a = b", {{d, "a"}, {d, "b"}},
                                 [&](Span t) -> std::optional<bool> { return iota(t[0]) != iota(t[1]) || t[0] == t[1]; }));
  rep.laws.push_back(space.check("additive", "iota(a + b) = iota(a) + iota(b) when a + b is defined",
                                 {{d, "a"}, {d, "b"}}, [&](Span t) -> std::optional<bool> {
                                   auto s = detail::partial_sum(P, t[0], t[1]);
                                   if (!s) return std::nullopt;
                                   auto rhs = detail::partial_sum(M, iota(t[0]), iota(t[1]));
                                   return rhs && iota(*s) == *rhs;
                                 }));
  rep.laws.push_back(space.check("oplus_decomposition", "a (+) b = (a /\\ b*) + b", {{d, "a"}, {d, "b"}},
                                 [&](Span t) -> std::optional<bool> {
                                   auto lhs = detail::oplus(P, t[0], t[1]);
                                   auto meet = mv_derived(P, DerivedOp::meet, t[0], detail::neg(P, t[1]));
                                   auto rhs = detail::partial_sum(P, meet, t[1]);
                                   return rhs && lhs == *rhs;
                                 }));
  return out;
}

}  // namespace mvlab
