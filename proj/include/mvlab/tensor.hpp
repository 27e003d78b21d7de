#pragma once

/**
 * @file tensor.hpp
 * @brief Semisimple tensor products of Gamma carriers.
 *
 * For rank-1 groups the Archimedean tensor G (x)a H is the subgroup of Q
 * generated by all products g h, so
 *
 *     Gamma(G, u) (x)ss Gamma(H, v)  =  Gamma(G (x)a H, u v)
 *
 * with the universal bimorphism beta(a, b) = a b. Products of carriers are
 * tensored coordinate by coordinate, left coordinate major.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvlab/check.hpp"
#include "mvlab/hom.hpp"
#include "mvlab/module.hpp"
#include "mvlab/pmv.hpp"

namespace mvlab {

/// c1 Z[1/S1] (x) c2 Z[1/S2] = c1 c2 Z[1/(S1 u S2)]; Q absorbs everything.
inline RationalSubgroup tensor_group(const RationalSubgroup& g, const RationalSubgroup& h) {
  if (g.is_all() || h.is_all()) return RationalSubgroup::all();
  return RationalSubgroup::localized(g.scale() * h.scale(), prime_union(g.primes(), h.primes()));
}

struct TensorResult {
  MvAlgebra left;
  MvAlgebra right;
  MvAlgebra result;
  /// index[k] = (left coordinate, right coordinate) feeding result coordinate k
  std::vector<std::pair<std::size_t, std::size_t>> index;

  MvElement beta(const MvElement& a, const MvElement& b) const {
    MvElement t(index.size());
    for (std::size_t k = 0; k < index.size(); ++k) t[k] = a[index[k].first] * b[index[k].second];
    return t;
  }
};

inline TensorResult tensor_ss(const MvAlgebra& a, const MvAlgebra& b) {
  TensorResult t{a, b, MvAlgebra(), {}};
  std::vector<Component> comps;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    for (std::size_t j = 0; j < b.arity(); ++j) {
      const auto& ca = a.component(i);
      const auto& cb = b.component(j);
      comps.push_back(Component{tensor_group(ca.group, cb.group), ca.unit * cb.unit});
      t.index.emplace_back(i, j);
    }
  }
  t.result = MvAlgebra::from_components(std::move(comps), a.is_product() || b.is_product());
  return t;
}

struct StandardBeta {
  const TensorResult* t;
  MvElement operator()(const MvElement& a, const MvElement& b) const { return t->beta(a, b); }
};

/// beta is a bimorphism: additive in each slot where the partial sum exists,
/// commuting with joins and meets in each slot, beta(1,1) = 1, beta(0,b) = 0.
template <class Beta>
LawReport check_bimorphism(const TensorResult& t, const Budget& budget, Beta beta) {
  TupleSpace space(budget);
  const auto da = space.add(t.left);
  const auto db = space.add(t.right);
  const auto& A = t.left;
  const auto& B = t.right;
  const auto& C = t.result;
  using Span = std::span<const MvElement>;
  auto join = [](const MvAlgebra& x, const MvElement& p, const MvElement& q) { return mv_derived(x, DerivedOp::join, p, q); };
  auto meet = [](const MvAlgebra& x, const MvElement& p, const MvElement& q) { return mv_derived(x, DerivedOp::meet, p, q); };

  LawReport rep;
  rep.instance = "beta: " + A.describe() + " x " + B.describe() + " -> " + C.describe();
  rep.seed = budget.seed;
  rep.laws.push_back(space.check("lands_in_result", "beta(a, b) lies in the tensor", {{da, "a"}, {db, "b"}},
                                 [&](Span s) -> std::optional<bool> { return C.contains(beta(s[0], s[1])); }));
  rep.laws.push_back(space.check("additive_left", "beta(a + a', b) = beta(a, b) + beta(a', b) when a + a' is defined",
                                 {{da, "a"}, {da, "a'"}, {db, "b"}}, [&](Span s) -> std::optional<bool> {
                                   auto sum = detail::partial_sum(A, s[0], s[1]);
                                   if (!sum) return std::nullopt;
                                   auto rhs = detail::partial_sum(C, beta(s[0], s[2]), beta(s[1], s[2]));
                                   return rhs && beta(*sum, s[2]) == *rhs;
                                 }));
  rep.laws.push_back(space.check("additive_right", "beta(a, b + b') = beta(a, b) + beta(a, b') when b + b' is defined",
                                 {{da, "a"}, {db, "b"}, {db, "b'"}}, [&](Span s) -> std::optional<bool> {
                                   auto sum = detail::partial_sum(B, s[1], s[2]);
                                   if (!sum) return std::nullopt;
                                   auto rhs = detail::partial_sum(C, beta(s[0], s[1]), beta(s[0], s[2]));
                                   return rhs && beta(s[0], *sum) == *rhs;
                                 }));
  rep.laws.push_back(space.check("join_left", "beta(a \\/ a', b) = beta(a, b) \\/ beta(a', b)",
                                 {{da, "a"}, {da, "a'"}, {db, "b"}}, [&](Span s) -> std::optional<bool> {
                                   return beta(join(A, s[0], s[1]), s[2]) == join(C, beta(s[0], s[2]), beta(s[1], s[2]));
                                 }));
  rep.laws.push_back(space.check("meet_left", "beta(a /\\ a', b) = beta(a, b) /\\ beta(a', b)",
                                 {{da, "a"}, {da, "a'"}, {db, "b"}}, [&](Span s) -> std::optional<bool> {
                                   return beta(meet(A, s[0], s[1]), s[2]) == meet(C, beta(s[0], s[2]), beta(s[1], s[2]));
                                 }));
  rep.laws.push_back(space.check("join_right", "beta(a, b \\/ b') = beta(a, b) \\/ beta(a, b')",
                                 {{da, "a"}, {db, "b"}, {db, "b'"}}, [&](Span s) -> std::optional<bool> {
                                   return beta(s[0], join(B, s[1], s[2])) == join(C, beta(s[0], s[1]), beta(s[0], s[2]));
                                 }));
  rep.laws.push_back(space.check("meet_right", "beta(a, b /\\ b') = beta(a, b) /\\ beta(a, b')",
                                 {{da, "a"}, {db, "b"}, {db, "b'"}}, [&](Span s) -> std::optional<bool> {
                                   return beta(s[0], meet(B, s[1], s[2])) == meet(C, beta(s[0], s[1]), beta(s[0], s[2]));
                                 }));
  rep.laws.push_back(space.check("unit", "beta(1, 1) = 1", {}, [&](Span) -> std::optional<bool> {
    return beta(A.top(), B.top()) == C.top();
  }));
  rep.laws.push_back(space.check("zero", "beta(0, b) = 0 = beta(a, 0)", {{da, "a"}, {db, "b"}},
                                 [&](Span s) -> std::optional<bool> {
                                   return beta(A.zero(), s[1]).is_zero() && beta(s[0], B.zero()).is_zero();
                                 }));
  return rep;
}

inline LawReport check_bimorphism(const TensorResult& t, const Budget& budget = {}) {
  return check_bimorphism(t, budget, StandardBeta{&t});
}

enum class Side { left, right };

/// b |-> beta(1, b) (right) or a |-> beta(a, 1) (left), validated as an injective hom.
inline MvHom iota_embedding(const TensorResult& t, Side side, const Budget& budget = {}) {
  const MvAlgebra& src = side == Side::right ? t.right : t.left;
  const MvAlgebra& other = side == Side::right ? t.left : t.right;
  std::vector<std::size_t> routing;
  std::vector<Rational> scalars;
  for (const auto& [i, j] : t.index) {
    routing.push_back(side == Side::right ? j : i);
    scalars.push_back(other.component(side == Side::right ? i : j).unit);
  }
  MvHom h = make_hom(src, t.result, std::move(routing), std::move(scalars), budget);
  TupleSpace space(budget);
  const auto d = space.add(src);
  auto inj = space.check("injective", "iota(x) = iota(y) implies x = y", {{d, "x"}, {d, "y"}},
                         [&](std::span<const MvElement> s) -> std::optional<bool> { return h(s[0]) != h(s[1]) || s[0] == s[1]; });
  if (!inj.passed()) fail(errc::invalid_hom, "tensor embedding is not injective at " + to_string(*inj.counterexample));
  return h;
}

/// The tensor of P's base with B, as a module over P acting on the left factor.
inline MvModule tensor_module_structure(const PmvAlgebra& p, const MvAlgebra& b) {
  const TensorResult t = tensor_ss(p.base(), b);
  std::vector<std::size_t> route;
  for (const auto& ij : t.index) route.push_back(ij.first);
  // Closed by construction: each coordinate group is R_i (x) G_j, an R_i-module.
  return make_module(p, t.result, std::move(route));
}

struct ExtendedHom {
  ModuleHom map;
  LawReport report;
};

/// The unique P-module hom f~ : P (x)ss B -> M with f~ . iota_B = f.
inline ExtendedHom extend_hom(const PmvAlgebra& p, const MvAlgebra& b, const MvModule& m, const MvHom& f,
                              const Budget& budget = {}) {
  if (!p.totally_ordered()) fail(errc::hypothesis_not_met, "extend_hom needs totally ordered scalars, got " + p.describe());
  if (!(m.scalars() == p)) fail(errc::hypothesis_not_met, "target module is not over " + p.describe());
  if (!(f.source() == b) || !(f.target() == m.carrier()))
    fail(errc::hypothesis_not_met, "f must map " + b.describe() + " into the carrier of the target module");

  const MvModule tensor = tensor_module_structure(p, b);
  const TensorResult t = tensor_ss(p.base(), b);
  const MvHom iota = iota_embedding(t, Side::right, budget);
  const Rational& unit_p = p.base().component(0).unit;

  std::vector<std::size_t> routing = f.routing();  // with P rank-1, tensor coordinate j comes from B coordinate j
  std::vector<Rational> mu(routing.size());
  std::vector<std::string> certs;
  for (std::size_t k = 0; k < routing.size(); ++k) {
    const Rational& top_t = tensor.carrier().component(routing[k]).unit;
    if (top_t.is_zero()) fail(errc::universal_property_violation, "tensor unit vanishes");
    mu[k] = m.carrier().component(k).unit / top_t;  // the only solution of mu * top_T = top_M
    Rational from_iota = f.scalars()[k] / unit_p;   // the only solution of mu * iota(b) = f(b)
    if (mu[k] != from_iota) {
      fail(errc::universal_property_violation, "coordinate " + std::to_string(k) + ": unit forces " + mu[k].str() +
                                                   " but f . iota forces " + from_iota.str());
    }
    certs.push_back("coordinate " + std::to_string(k) + ": mu * " + top_t.str() + " = " +
                    m.carrier().component(k).unit.str() + " has the single solution mu = " + mu[k].str());
  }
  MvHom ft = make_hom(tensor.carrier(), m.carrier(), routing, mu, budget);
  ModuleHom fm = make_module_hom(tensor, m, ft, budget);

  TupleSpace space(budget);
  const auto db = space.add(b);
  using Span = std::span<const MvElement>;
  ExtendedHom out{fm, module_hom_laws(tensor, m, ft, budget)};
  auto& rep = out.report;
  rep.instance = "extend " + f.describe() + " along " + p.describe() + " (x) " + b.describe();
  rep.certificates = certs;
  rep.laws.push_back(space.check("triangle", "f~(iota(b)) = f(b)", {{db, "b"}},
                                 [&](Span s) -> std::optional<bool> { return ft(iota(s[0])) == f(s[0]); }));
  // Uniqueness among all homs T -> M, not only the forced one.
  std::size_t solutions = 0;
  for (const auto& g : hom_all(tensor.carrier(), m.carrier(), budget)) {
    auto tri = space.check("candidate", "", {{db, "b"}}, [&](Span s) -> std::optional<bool> { return g(iota(s[0])) == f(s[0]); });
    if (tri.passed()) ++solutions;
  }
  LawCheck uniq;
  uniq.law = "unique";
  uniq.statement = "exactly one hom T -> M satisfies the triangle";
  uniq.cases = 1;
  uniq.exhaustive = true;
  if (solutions != 1) uniq.counterexample = Assignment{};
  rep.laws.push_back(uniq);
  rep.certificates.push_back("homs T -> M satisfying the triangle: " + std::to_string(solutions));
  if (!rep.passed()) fail(errc::universal_property_violation, "extension fails: " + rep.instance);
  return out;
}

}  // namespace mvlab
