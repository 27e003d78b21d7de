#pragma once

#include <span>

#include "mvlab/check.hpp"
#include "mvlab/mv_algebra.hpp"

namespace mvlab {

struct StandardOplus {
  const MvAlgebra* a;
  MvElement operator()(const MvElement& x, const MvElement& y) const { return detail::oplus(*a, x, y); }
};

struct StandardNeg {
  const MvAlgebra* a;
  MvElement operator()(const MvElement& x) const { return detail::neg(*a, x); }
};

/// Evaluates the MV-algebra axioms for the given (+) and * on A's carrier.
/// Passing operations other than the standard ones is how mutants are tested.
template <class Oplus, class Neg>
LawReport check_axioms(const MvAlgebra& a, const Budget& budget, Oplus oplus, Neg neg) {
  TupleSpace space(budget);
  const auto d = space.add(a);
  const MvElement zero = a.zero();
  using Span = std::span<const MvElement>;

  LawReport rep;
  rep.instance = a.describe();
  rep.seed = budget.seed;
  rep.laws.push_back(space.check("closure", "x (+) y and x* lie in A", {{d, "x"}, {d, "y"}},
                                 [&](Span t) -> std::optional<bool> {
                                   return a.contains(oplus(t[0], t[1])) && a.contains(neg(t[0]));
                                 }));
  rep.laws.push_back(space.check("oplus_assoc", "x (+) (y (+) z) = (x (+) y) (+) z", {{d, "x"}, {d, "y"}, {d, "z"}},
                                 [&](Span t) -> std::optional<bool> {
                                   return oplus(t[0], oplus(t[1], t[2])) == oplus(oplus(t[0], t[1]), t[2]);
                                 }));
  rep.laws.push_back(space.check("oplus_comm", "x (+) y = y (+) x", {{d, "x"}, {d, "y"}},
                                 [&](Span t) -> std::optional<bool> { return oplus(t[0], t[1]) == oplus(t[1], t[0]); }));
  rep.laws.push_back(space.check("oplus_zero", "x (+) 0 = x", {{d, "x"}},
                                 [&](Span t) -> std::optional<bool> { return oplus(t[0], zero) == t[0]; }));
  rep.laws.push_back(space.check("involution", "x** = x", {{d, "x"}},
                                 [&](Span t) -> std::optional<bool> { return neg(neg(t[0])) == t[0]; }));
  rep.laws.push_back(space.check("lukasiewicz", "(x* (+) y)* (+) y = (y* (+) x)* (+) x", {{d, "x"}, {d, "y"}},
                                 [&](Span t) -> std::optional<bool> {
                                   return oplus(neg(oplus(neg(t[0]), t[1])), t[1]) ==
                                          oplus(neg(oplus(neg(t[1]), t[0])), t[0]);
                                 }));
  rep.laws.push_back(space.check("oplus_top", "x (+) 0* = 0*", {{d, "x"}},
                                 [&](Span t) -> std::optional<bool> { return oplus(t[0], neg(zero)) == neg(zero); }));
  return rep;
}

inline LawReport check_axioms(const MvAlgebra& a, const Budget& budget = {}) {
  return check_axioms(a, budget, StandardOplus{&a}, StandardNeg{&a});
}

}  // namespace mvlab
