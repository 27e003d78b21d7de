#pragma once

/**
 * @file pmv.hpp
 * @brief Unital commutative PMV-algebras Gamma_(.)(R, 1) and the MV-domain
 *        and PMV+ quasi-identities.
 *
 * The product is rational multiplication, coordinatewise. It is internal on
 * [0,1]_G exactly when G is a unital subring of Q, so the admissible carriers
 * are finite products of Gamma(Z[1/S], 1) (boolean when S is empty) and
 * Gamma(Q, 1) = interval_q.
 */

#include <span>
#include <string>
#include <vector>

#include "mvlab/check.hpp"
#include "mvlab/groups.hpp"
#include "mvlab/mv_algebra.hpp"

namespace mvlab {

class PmvAlgebra {
 public:
  PmvAlgebra() = default;  // the boolean PMV-algebra

  const MvAlgebra& base() const noexcept { return base_; }
  bool totally_ordered() const noexcept { return base_.totally_ordered(); }

  /// The l-u ring of each coordinate.
  std::vector<RationalSubring> rings() const {
    std::vector<RationalSubring> rs;
    for (const auto& c : base_.components())
      rs.push_back(c.group.is_all() ? RationalSubring::all() : RationalSubring::localized(c.group.primes()));
    return rs;
  }

  MvElement product(const MvElement& x, const MvElement& y) const {
    MvElement r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * y[i];
    return r;
  }

  std::string describe() const {
    if (base_.is_product()) return "pmv(" + base_.describe() + ")";
    const auto& c = base_.component(0);
    if (c.group.kind() == RationalSubgroup::Kind::Localized) return "pmv(" + rings()[0].describe() + ")";
    return "pmv(" + base_.describe() + ")";
  }

  friend bool operator==(const PmvAlgebra&, const PmvAlgebra&) = default;

  friend PmvAlgebra make_pmv(const MvAlgebra& base);

 private:
  explicit PmvAlgebra(MvAlgebra base) : base_(std::move(base)) {}
  MvAlgebra base_;
};

/// Validates that the carrier is product-closed with unit 1 in every coordinate.
inline PmvAlgebra make_pmv(const MvAlgebra& base) {
  for (std::size_t i = 0; i < base.arity(); ++i) {
    const auto& c = base.component(i);
    if (c.unit != Rational(1)) {
      fail(errc::invalid_unit, "a PMV carrier needs unit 1 (the product unit), got " + c.unit.str() + " in " +
                                   base.describe());
    }
    if (c.group.is_all() || c.group.scale() == Rational(1)) continue;
    // 1 lies in G = s Z[1/S] with s != 1, so s = 1/k for some k > 1 coprime to S and s*s is not in G.
    const Rational& s = c.group.scale();
    Rational sq = s * s;
    fail(errc::not_product_closed, "carrier not product-closed: (" + s.str() + ")*(" + s.str() + ") = " + sq.str() +
                                       " is not in " + MvAlgebra::describe_component(c));
  }
  return PmvAlgebra(base);
}

inline PmvAlgebra gamma_ring(std::span<const RationalSubring> rings, const MvElement& e) {
  if (rings.empty() || rings.size() != e.size()) fail(errc::invalid_unit, "unit arity does not match the ring product");
  std::vector<Component> comps;
  for (std::size_t i = 0; i < rings.size(); ++i) {
    if (e[i] != Rational(1)) fail(errc::invalid_unit, "the ring unit must be 1, got " + e[i].str());
    comps.push_back(Component{rings[i].as_group(), Rational(1)});
  }
  return make_pmv(MvAlgebra::from_components(std::move(comps), rings.size() > 1));
}

inline PmvAlgebra gamma_ring(const RationalSubring& r, const Rational& e = Rational(1)) {
  return gamma_ring(std::span<const RationalSubring>(&r, 1), MvElement{e});
}

inline MvElement pmv_product(const PmvAlgebra& p, const MvElement& x, const MvElement& y) {
  detail::require_member(p.base(), x);
  detail::require_member(p.base(), y);
  return p.product(x, y);
}

/// Product laws: internal, commutative, associative, unital, below the meet, monotone.
inline LawReport check_pmv_axioms(const PmvAlgebra& p, const Budget& budget = {}) {
  TupleSpace space(budget);
  const auto d = space.add(p.base());
  const auto& a = p.base();
  using Span = std::span<const MvElement>;
  LawReport rep;
  rep.instance = p.describe();
  rep.seed = budget.seed;
  rep.laws.push_back(space.check("internal", "x.y lies in P and x.y <= x /\\ y", {{d, "x"}, {d, "y"}},
                                 [&](Span t) -> std::optional<bool> {
                                   auto xy = p.product(t[0], t[1]);
                                   return a.contains(xy) && leq(xy, t[0]) && leq(xy, t[1]);
                                 }));
  rep.laws.push_back(space.check("commutative", "x.y = y.x", {{d, "x"}, {d, "y"}}, [&](Span t) -> std::optional<bool> {
    return p.product(t[0], t[1]) == p.product(t[1], t[0]);
  }));
  rep.laws.push_back(space.check("associative", "x.(y.z) = (x.y).z", {{d, "x"}, {d, "y"}, {d, "z"}},
                                 [&](Span t) -> std::optional<bool> {
                                   return p.product(t[0], p.product(t[1], t[2])) ==
                                          p.product(p.product(t[0], t[1]), t[2]);
                                 }));
  rep.laws.push_back(space.check("unital", "1.x = x", {{d, "x"}},
                                 [&](Span t) -> std::optional<bool> { return p.product(a.top(), t[0]) == t[0]; }));
  rep.laws.push_back(space.check("monotone", "x <= y implies x.z <= y.z", {{d, "x"}, {d, "y"}, {d, "z"}},
                                 [&](Span t) -> std::optional<bool> {
                                   if (!leq(t[0], t[1])) return std::nullopt;
                                   return leq(p.product(t[0], t[2]), p.product(t[1], t[2]));
                                 }));
  return rep;
}

namespace detail {

inline DomainReport to_domain_report(const LawCheck& c, std::string instance, std::string property, const Budget& b) {
  DomainReport rep;
  rep.instance = std::move(instance);
  rep.property = std::move(property);
  rep.seed = b.seed;
  rep.cases = c.cases;
  rep.exhaustive = c.exhaustive;
  rep.holds = c.passed();
  rep.witness = c.counterexample;
  return rep;
}

}  // namespace detail

/// x.y = 0 implies x = 0 or y = 0.
inline DomainReport is_mv_domain(const PmvAlgebra& p, const Budget& budget = {}) {
  TupleSpace space(budget);
  const auto d = space.add(p.base());
  auto c = space.check("mv_domain", "x.y = 0 implies x = 0 or y = 0", {{d, "x"}, {d, "y"}},
                       [&](std::span<const MvElement> t) -> std::optional<bool> {
                         return !p.product(t[0], t[1]).is_zero() || t[0].is_zero() || t[1].is_zero();
                       });
  auto rep = detail::to_domain_report(c, p.describe(), "mv_domain", budget);
  if (rep.holds && p.totally_ordered()) {
    rep.certificates.push_back("rank-1: the product is multiplication in Q, a field, which has no zero divisors");
  }
  return rep;
}

/// PMV+: x.x = 0 implies x = 0.
inline DomainReport is_pmv_plus(const PmvAlgebra& p, const Budget& budget = {}) {
  TupleSpace space(budget);
  const auto d = space.add(p.base());
  auto c = space.check("pmv_plus", "x.x = 0 implies x = 0", {{d, "x"}},
                       [&](std::span<const MvElement> t) -> std::optional<bool> {
                         return !p.product(t[0], t[0]).is_zero() || t[0].is_zero();
                       });
  auto rep = detail::to_domain_report(c, p.describe(), "pmv_plus", budget);
  if (rep.holds) {
    rep.certificates.push_back("coordinatewise squares in Q: q*q = 0 forces q = 0 in every coordinate");
  }
  return rep;
}

/// A single subring of Q is an integral domain; a product of two or more has
/// the zero divisors e_0 . e_1 = 0.
inline DomainReport ring_is_integral_domain(std::span<const RationalSubring> rings) {
  DomainReport rep;
  rep.property = "integral_domain";
  for (std::size_t i = 0; i < rings.size(); ++i) rep.instance += (i ? " x " : "") + rings[i].describe();
  if (rings.size() == 1) {
    rep.holds = true;
    rep.certificates.push_back("a unital subring of the field Q has no zero divisors");
    return rep;
  }
  MvElement e0(rings.size()), e1(rings.size());
  e0[0] = Rational(1);
  e1[1] = Rational(1);
  rep.holds = false;
  rep.cases = 1;
  rep.witness = Assignment{{"x", e0}, {"y", e1}};
  return rep;
}

inline DomainReport ring_is_integral_domain(const RationalSubring& r) {
  return ring_is_integral_domain(std::span<const RationalSubring>(&r, 1));
}

}  // namespace mvlab
