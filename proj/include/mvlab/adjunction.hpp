#pragma once

/**
 * @file adjunction.hpp
 * @brief The functors Gamma_(K,e) and L between MV-modules over a totally
 *        ordered MV-domain P and Archimedean vector lattices over K = Q.
 *
 * L(M) for M = Gamma(G, u) over P = Gamma_(.)(R, 1) is K (x)a G with unit
 * e (x) u; since K = Q this is Q^m with unit u. The unit of the adjunction
 * iota_M : M -> Gamma(L(M)) is the coordinatewise inclusion, and a module
 * hom f : M -> Gamma(V) factors uniquely as Gamma(f#) . iota_M with f# the
 * linear map forced by the images of the basis vectors u_i e_i.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "mvlab/check.hpp"
#include "mvlab/hom.hpp"
#include "mvlab/module.hpp"
#include "mvlab/pmv.hpp"
#include "mvlab/tensor.hpp"

namespace mvlab {

/// (Q^n, u) over K = Q: an Archimedean vector lattice with strong unit u.
struct LinearSpace {
  RationalField field;
  std::vector<Rational> unit;
  bool product = false;

  std::size_t dim() const noexcept { return unit.size(); }

  std::string describe() const {
    std::string s = dim() == 1 && !product ? "Q" : "Q^" + std::to_string(dim());
    s += ", u=";
    if (dim() == 1 && !product) return "(" + s + unit[0].str() + ")";
    s += "(";
    for (std::size_t i = 0; i < unit.size(); ++i) s += (i ? ", " : "") + unit[i].str();
    return "(" + s + "))";
  }

  friend bool operator==(const LinearSpace& a, const LinearSpace& b) {
    return a.field == b.field && a.unit == b.unit && a.product == b.product;
  }
};

inline LinearSpace make_linear_space(std::vector<Rational> unit, RationalField field = fraction_field(RationalSubring::all())) {
  if (unit.empty()) fail(errc::invalid_unit, "a linear space needs at least one coordinate");
  for (const auto& u : unit)
    if (u.sign() <= 0) fail(errc::invalid_unit, "a strong unit must be positive, got " + u.str());
  LinearSpace v{std::move(field), std::move(unit), false};
  v.product = v.unit.size() > 1;
  return v;
}

/// Coordinate j of the image is scalars[j] * x[routing[j]].
struct LinearMap {
  std::size_t source_dim = 1;
  std::vector<std::size_t> routing;
  std::vector<Rational> scalars;

  std::vector<Rational> operator()(const std::vector<Rational>& x) const {
    std::vector<Rational> y(routing.size());
    for (std::size_t j = 0; j < routing.size(); ++j) y[j] = scalars[j] * x[routing[j]];
    return y;
  }

  /// Dense form: entry (j, i) is the coefficient of x_i in coordinate j.
  std::vector<std::vector<Rational>> matrix() const {
    std::vector<std::vector<Rational>> a(routing.size(), std::vector<Rational>(source_dim));
    for (std::size_t j = 0; j < routing.size(); ++j) a[j][routing[j]] = scalars[j];
    return a;
  }

  std::string describe() const {
    std::string s = "x |-> (";
    for (std::size_t j = 0; j < routing.size(); ++j)
      s += (j ? ", " : "") + scalars[j].str() + "*x" + (source_dim > 1 ? std::to_string(routing[j]) : "");
    return s + ")";
  }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

inline LinearMap identity_linear_map(std::size_t n) {
  LinearMap m{n, std::vector<std::size_t>(n), std::vector<Rational>(n, Rational(1))};
  for (std::size_t i = 0; i < n; ++i) m.routing[i] = i;
  return m;
}

/// g after h.
inline LinearMap compose(const LinearMap& g, const LinearMap& h) {
  if (g.source_dim != h.routing.size()) fail(errc::composition, "linear maps are not composable");
  LinearMap c{h.source_dim, std::vector<std::size_t>(g.routing.size()), std::vector<Rational>(g.routing.size())};
  for (std::size_t j = 0; j < g.routing.size(); ++j) {
    c.routing[j] = h.routing[g.routing[j]];
    c.scalars[j] = g.scalars[j] * h.scalars[g.routing[j]];
  }
  return c;
}

/// Homogeneous l-group hom checks on sampled vectors: additive, order preserving, K-linear.
inline LawReport linear_map_laws(const LinearMap& f, const LinearSpace& v1, const Budget& budget = {}) {
  std::vector<Component> comps;
  for (const auto& u : v1.unit) comps.push_back(Component{RationalSubgroup::all(), u});
  const MvAlgebra box = MvAlgebra::from_components(comps, v1.product);
  TupleSpace space(budget);
  const auto d = space.add(box);
  const auto k = space.add(MvAlgebra::interval_q());
  using Span = std::span<const MvElement>;
  auto apply = [&](const MvElement& x) { return MvElement(f(x.coords())); };
  LawReport rep;
  rep.instance = f.describe();
  rep.seed = budget.seed;
  rep.laws.push_back(space.check("additive", "f(x + y) = f(x) + f(y)", {{d, "x"}, {d, "y"}}, [&](Span t) -> std::optional<bool> {
    MvElement s(t[0].size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = t[0][i] + t[1][i];
    auto fx = apply(t[0]), fy = apply(t[1]), fs = apply(s);
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (fs[j] != fx[j] + fy[j]) return false;
    return true;
  }));
  rep.laws.push_back(space.check("isotone", "x <= y implies f(x) <= f(y)", {{d, "x"}, {d, "y"}}, [&](Span t) -> std::optional<bool> {
    if (!leq(t[0], t[1])) return std::nullopt;
    return leq(apply(t[0]), apply(t[1]));
  }));
  rep.laws.push_back(space.check("homogeneous", "f(c x) = c f(x)", {{k, "c"}, {d, "x"}}, [&](Span t) -> std::optional<bool> {
    MvElement cx(t[1].size());
    for (std::size_t i = 0; i < cx.size(); ++i) cx[i] = t[0][0] * t[1][i];
    auto lhs = apply(cx), fx = apply(t[1]);
    for (std::size_t j = 0; j < fx.size(); ++j)
      if (lhs[j] != t[0][0] * fx[j]) return false;
    return true;
  }));
  return rep;
}

/// Gamma_(K,e)(V): [0, u]_V over Gamma_(.)(Q, 1).
inline MvModule functor_gamma_V(const LinearSpace& v) {
  std::vector<Component> comps;
  for (const auto& u : v.unit) comps.push_back(Component{RationalSubgroup::all(), u});
  return make_module(gamma_ring(RationalSubring::all()), MvAlgebra::from_components(std::move(comps), v.product));
}

inline LinearSpace linear_space_of(const MvModule& m) {
  std::vector<Rational> u;
  for (const auto& c : m.carrier().components()) u.push_back(c.unit);
  LinearSpace v = make_linear_space(std::move(u));
  v.product = m.carrier().is_product();
  return v;
}

/// The restriction of h to the unit intervals, as a module hom Gamma(V1) -> Gamma(V2).
inline ModuleHom restrict_linear_map(const LinearMap& h, const LinearSpace& v1, const LinearSpace& v2,
                                     const Budget& budget = {}) {
  if (h.source_dim != v1.dim() || h.routing.size() != v2.dim())
    fail(errc::restriction, "linear map dimensions do not match the spaces");
  for (std::size_t j = 0; j < v2.dim(); ++j) {
    Rational image = h.scalars[j] * v1.unit[h.routing[j]];
    if (image.sign() < 0 || v2.unit[j] < image) {
      fail(errc::restriction, "[0,u1] is not mapped into [0,u2]: coordinate " + std::to_string(j) + " sends " +
                                  v1.unit[h.routing[j]].str() + " to " + image.str() + " > " + v2.unit[j].str());
    }
    if (image != v2.unit[j]) {
      fail(errc::restriction, "the restriction does not preserve the unit in coordinate " + std::to_string(j) + ": " +
                                  image.str() + " != " + v2.unit[j].str());
    }
  }
  const MvModule g1 = functor_gamma_V(v1), g2 = functor_gamma_V(v2);
  return make_module_hom(g1, g2, make_hom(g1.carrier(), g2.carrier(), h.routing, h.scalars, budget), budget);
}

namespace detail {

inline void require_domain_scalars(const MvModule& m) {
  if (!m.scalars().totally_ordered())
    fail(errc::hypothesis_not_met, "L needs totally ordered scalars, got " + m.scalars().describe());
}

}  // namespace detail

/// L on objects: (K (x)a G, e (x) u), computed through the tensor of groups.
inline LinearSpace functor_L_obj(const MvModule& m) {
  detail::require_domain_scalars(m);
  const RationalSubring ring = m.scalars().rings()[0];
  const RationalField k = fraction_field(ring);
  std::vector<Rational> unit;
  for (const auto& c : m.carrier().components()) {
    RationalSubgroup kg = tensor_group(RationalSubgroup::all(), c.group);
    if (!kg.is_all()) fail(errc::universal_property_violation, "K (x) G is not Q");
    unit.push_back(k.unit * c.unit);
  }
  LinearSpace v = make_linear_space(std::move(unit), k);
  v.product = m.carrier().is_product();
  return v;
}

/// iota_M : M -> Gamma(L(M)), x |-> 1 (x) x.
inline ModuleHom unit_map(const MvModule& m, const Budget& budget = {}) {
  const MvModule target = functor_gamma_V(functor_L_obj(m));
  std::vector<std::size_t> r(m.carrier().arity());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = i;
  MvHom h = make_hom(m.carrier(), target.carrier(), r, std::vector<Rational>(r.size(), Rational(1)), budget);
  return make_module_hom(m, target, h, budget);
}

struct UniversalArrow {
  LinearMap sharp;     // f#
  MvHom star;          // f* on Gamma(K) (x)ss M, from the tensor universal property
  LawReport report;
};

/// f# : L(M) -> V with Gamma(f#) . iota_M = f.
inline UniversalArrow universal_arrow(const MvModule& m, const LinearSpace& v, const ModuleHom& f, const Budget& budget = {}) {
  detail::require_domain_scalars(m);
  const MvModule gv = functor_gamma_V(v);
  if (!(f.source() == m) || !(f.target().carrier() == gv.carrier()))
    fail(errc::hypothesis_not_met, "f must be a module hom " + m.describe() + " -> Gamma" + v.describe());
  const MvAlgebra& M = m.carrier();
  const LinearSpace lm = functor_L_obj(m);

  // Forced by the triangle at the basis vectors u_i e_i of L(M).
  std::vector<std::vector<Rational>> forced(v.dim(), std::vector<Rational>(M.arity()));
  for (std::size_t i = 0; i < M.arity(); ++i) {
    MvElement b = M.zero();
    b[i] = M.component(i).unit;
    MvElement fb = f(b);
    for (std::size_t j = 0; j < v.dim(); ++j) forced[j][i] = fb[j] / b[i];
  }
  LinearMap sharp{lm.dim(), f.map().routing(), f.map().scalars()};

  UniversalArrow out{sharp, MvHom::unchecked(M, gv.carrier(), {}, {}), {}};
  auto& rep = out.report;
  rep.instance = "f = " + f.describe() + " into Gamma" + v.describe();
  rep.seed = budget.seed;
  rep.certificates.push_back("f# is determined by f on the basis {u_i e_i} of L(M); any linear map satisfying the "
                             "triangle has the forced matrix");

  TupleSpace space(budget);
  const auto d = space.add(M);
  using Span = std::span<const MvElement>;
  rep.laws.push_back(space.check("triangle", "Gamma(f#)(iota_M(x)) = f(x)", {{d, "x"}}, [&](Span t) -> std::optional<bool> {
    return MvElement(sharp(t[0].coords())) == f(t[0]);
  }));
  LawCheck uniq;
  uniq.law = "uniqueness";
  uniq.statement = "the forced matrix equals f#";
  uniq.cases = 1;
  uniq.exhaustive = true;
  if (forced != sharp.matrix()) uniq.counterexample = Assignment{};
  rep.laws.push_back(uniq);
  rep.laws.push_back(linear_map_laws(sharp, lm, budget).laws[0]);

  // Two-step factorization through the tensor: f* on Gamma(K,e) (x)ss M.
  const PmvAlgebra qk = gamma_ring(RationalSubring::all());
  ExtendedHom ext = extend_hom(qk, M, gv, f.map(), budget);
  out.star = ext.map.map();
  LawCheck fac;
  fac.law = "factorization";
  fac.statement = "f# restricted to the unit interval is f* with f* . iota_M = f";
  fac.cases = 1;
  fac.exhaustive = true;
  if (out.star.routing() != sharp.routing || out.star.scalars() != sharp.scalars || !ext.report.passed())
    fac.counterexample = Assignment{};
  rep.laws.push_back(fac);
  if (!rep.passed()) fail(errc::universal_property_violation, "universal arrow fails: " + rep.instance);
  return out;
}

struct LiftedHom {
  LinearMap map;
  LawReport square;
};

/// L on morphisms: h# = universal arrow of iota_N . h, with Figure-1 square checked.
inline LiftedHom functor_L_mor(const ModuleHom& h, const Budget& budget = {}) {
  const MvModule& m = h.source();
  const MvModule& n = h.target();
  if (!(m.scalars() == n.scalars())) fail(errc::hypothesis_not_met, "h must connect modules over the same scalars");
  const ModuleHom iota_n = unit_map(n, budget);
  const ModuleHom f = ModuleHom::unchecked(m, iota_n.target(), compose(iota_n.map(), h.map()));
  UniversalArrow ua = universal_arrow(m, functor_L_obj(n), f, budget);
  LiftedHom out{ua.sharp, {}};

  const ModuleHom iota_m = unit_map(m, budget);
  TupleSpace space(budget);
  const auto d = space.add(m.carrier());
  out.square.instance = "L(" + h.describe() + ")";
  out.square.seed = budget.seed;
  out.square.laws.push_back(space.check("square", "Gamma(h#)(iota_M(x)) = iota_N(h(x))", {{d, "x"}},
                                        [&](std::span<const MvElement> t) -> std::optional<bool> {
                                          return MvElement(ua.sharp(iota_m(t[0]).coords())) == iota_n(h(t[0]));
                                        }));
  return out;
}

inline LawReport check_naturality(const ModuleHom& h, const Budget& budget = {}) {
  LawReport rep = functor_L_mor(h, budget).square;
  rep.instance = "naturality at " + h.describe();
  return rep;
}

/// (g . h)# = g# . h#.
inline LawReport check_functoriality(const ModuleHom& g, const ModuleHom& h, const Budget& budget = {}) {
  if (!(h.target() == g.source()))
    fail(errc::composition, "not composable: " + h.target().describe() + " != " + g.source().describe());
  const LinearMap lhs = functor_L_mor(compose(g, h), budget).map;
  const LinearMap rhs = compose(functor_L_mor(g, budget).map, functor_L_mor(h, budget).map);
  LawReport rep;
  rep.instance = "(" + g.describe() + ") . (" + h.describe() + ")";
  rep.seed = budget.seed;
  LawCheck c;
  c.law = "composition";
  c.statement = "L(g . h) = L(g) . L(h)";
  c.cases = 1;
  c.exhaustive = true;
  if (!(lhs == rhs)) c.counterexample = Assignment{};
  rep.laws.push_back(c);
  return rep;
}

/// A module M, a space V and a candidate map M -> Gamma(V) given by routing and scalars.
struct AdjunctionInstance {
  std::string label;
  MvModule module;
  LinearSpace space;
  std::vector<std::size_t> routing;
  std::vector<Rational> scalars;
};

struct AdjunctionReport {
  LawReport laws;
  std::size_t instances = 0;
  std::size_t valid = 0;
  std::vector<std::string> invalid;   // rejected at validation, with reason
  std::vector<std::string> failures;  // valid instances whose universal arrow failed
  bool vacuous() const noexcept { return instances == 0; }
  bool passed() const noexcept { return failures.empty() && laws.passed(); }
};

inline AdjunctionReport check_adjunction(const std::vector<AdjunctionInstance>& family, const Budget& budget = {}) {
  AdjunctionReport out;
  out.instances = family.size();
  out.laws.instance = "adjunction L -| Gamma_(K,e) on " + std::to_string(family.size()) + " instances";
  out.laws.seed = budget.seed;
  LawCheck existence{"existence", "f# exists with Gamma(f#) . iota_M = f", 0, true, std::nullopt};
  LawCheck triangle{"triangle", "Gamma(f#)(iota_M(x)) = f(x) pointwise", 0, true, std::nullopt};
  LawCheck uniqueness{"uniqueness", "f# is the only linear map satisfying the triangle", 0, true, std::nullopt};
  LawCheck factor{"factorization", "f# extends the tensor extension f*", 0, true, std::nullopt};
  for (const auto& inst : family) {
    std::optional<ModuleHom> f;
    try {
      const MvModule gv = functor_gamma_V(inst.space);
      f = make_module_hom(inst.module, gv, make_hom(inst.module.carrier(), gv.carrier(), inst.routing, inst.scalars, budget),
                          budget);
    } catch (const error& e) {
      out.invalid.push_back(inst.label + ": " + e.what());
      continue;
    }
    ++out.valid;
    ++existence.cases;
    try {
      UniversalArrow ua = universal_arrow(inst.module, inst.space, *f, budget);
      for (auto [dst, name] : {std::pair{&triangle, "triangle"}, {&uniqueness, "uniqueness"}, {&factor, "factorization"}}) {
        const LawCheck* c = ua.report.find(name);
        dst->cases += c ? c->cases : 0;
        dst->exhaustive = dst->exhaustive && c && c->exhaustive;
      }
    } catch (const error& e) {
      out.failures.push_back(inst.label + ": " + e.what());
      if (!existence.counterexample) existence.counterexample = Assignment{};
    }
  }
  out.laws.laws = {existence, triangle, uniqueness, factor};
  if (out.vacuous()) out.laws.certificates.push_back("vacuous: no instances");
  return out;
}

struct Family {
  std::vector<MvModule> modules;
  std::vector<ModuleHom> homs;
  std::vector<AdjunctionInstance> instances;
};

/// chain(2), chain(4), chain(6), chain(12), prod(chain(2), chain(2)) over boolean
/// with every hom among them, plus Gamma(Z[1/2], 1) over itself into (Q, 1) and (Q, 2).
inline Family default_family(const Budget& budget = {}) {
  Family fam;
  const PmvAlgebra boolean = gamma_ring(RationalSubring::integers());
  for (std::int64_t d : {2, 4, 6, 12}) fam.modules.push_back(make_module(boolean, MvAlgebra::chain(d)));
  fam.modules.push_back(make_module(boolean, MvAlgebra::product({MvAlgebra::chain(2), MvAlgebra::chain(2)})));
  for (const auto& a : fam.modules)
    for (const auto& b : fam.modules)
      for (auto& h : module_hom_all(a, b, budget)) fam.homs.push_back(std::move(h));

  for (const auto& h : fam.homs) {
    const ModuleHom iota_n = unit_map(h.target(), budget);
    const MvHom f = compose(iota_n.map(), h.map());
    fam.instances.push_back(AdjunctionInstance{"iota_N . (" + h.describe() + ")", h.source(), functor_L_obj(h.target()),
                                               f.routing(), f.scalars()});
  }

  const PmvAlgebra half = gamma_ring(RationalSubring::localized({2}));
  const MvModule dyadic = make_module(half, half.base());
  fam.modules.push_back(dyadic);
  fam.homs.push_back(identity_module_hom(dyadic));
  for (std::int64_t u : {1, 2}) {
    const LinearSpace v = make_linear_space({Rational(u)});
    for (const auto& f : hom_all(dyadic.carrier(), functor_gamma_V(v).carrier(), budget)) {
      fam.instances.push_back(AdjunctionInstance{dyadic.describe() + " -> Gamma" + v.describe() + " : " + f.describe(),
                                                 dyadic, v, f.routing(), f.scalars()});
    }
  }
  return fam;
}

struct FamilyReport {
  AdjunctionReport adjunction;
  LawReport functoriality;
  LawReport naturality;
  bool passed() const { return adjunction.passed() && functoriality.passed() && naturality.passed(); }
};

/// Adjunction, functoriality on every composable pair and naturality on every hom of a family.
inline FamilyReport check_family(const Family& fam, const Budget& budget = {}) {
  FamilyReport out;
  out.adjunction = check_adjunction(fam.instances, budget);

  // L(h) once per hom; the family is closed under composition, so pairs reuse these.
  std::vector<LiftedHom> lifted;
  lifted.reserve(fam.homs.size());
  for (const auto& h : fam.homs) lifted.push_back(functor_L_mor(h, budget));
  auto lift_of = [&](const ModuleHom& h) {
    for (std::size_t i = 0; i < fam.homs.size(); ++i)
      if (fam.homs[i] == h) return lifted[i].map;
    return functor_L_mor(h, budget).map;
  };

  LawCheck ident{"identity", "L(id) = id", 0, true, std::nullopt};
  LawCheck comp{"composition", "L(g . h) = L(g) . L(h)", 0, true, std::nullopt};
  for (const auto& m : fam.modules) {
    ++ident.cases;
    if (!(lift_of(identity_module_hom(m)) == identity_linear_map(m.carrier().arity()))) ident.counterexample = Assignment{};
  }
  for (std::size_t i = 0; i < fam.homs.size(); ++i)
    for (std::size_t k = 0; k < fam.homs.size(); ++k) {
      const ModuleHom &h = fam.homs[i], &g = fam.homs[k];
      if (!(h.target() == g.source())) continue;
      ++comp.cases;
      if (!(lift_of(compose(g, h)) == compose(lifted[k].map, lifted[i].map)) && !comp.counterexample)
        comp.counterexample = Assignment{};
    }
  out.functoriality.instance = "L on " + std::to_string(fam.homs.size()) + " homs";
  out.functoriality.seed = budget.seed;
  out.functoriality.laws = {ident, comp};

  LawCheck square{"square", "Gamma(L(h)) . iota_M = iota_N . h", 0, true, std::nullopt};
  for (const auto& l : lifted) {
    const LawReport& r = l.square;
    square.cases += r.cases();
    square.exhaustive = square.exhaustive && r.exhaustive();
    if (!r.passed() && !square.counterexample) square.counterexample = r.laws[0].counterexample;
  }
  out.naturality.instance = "iota on " + std::to_string(fam.homs.size()) + " homs";
  out.naturality.seed = budget.seed;
  out.naturality.laws = {square};
  return out;
}

struct NonEquivalenceReport {
  std::string scalars;
  std::string ring;
  std::string field;
  std::string module;
  std::string lifted_space;
  std::string gamma_of_lift;
  bool isomorphic = false;
  std::string certificate;
  bool unit_is_iso = false;  // iota_M is an isomorphism
};

/// Compares M with Gamma(L(M)): cardinality first, then a search for an isomorphism.
inline NonEquivalenceReport compare_with_lift(const MvModule& m, const Budget& budget = {}) {
  NonEquivalenceReport rep;
  const LinearSpace v = functor_L_obj(m);
  const MvModule glm = functor_gamma_V(v);
  rep.scalars = m.scalars().describe();
  rep.ring = m.scalars().rings()[0].describe();
  rep.field = v.field.describe();
  rep.module = m.carrier().describe();
  rep.lifted_space = v.describe();
  rep.gamma_of_lift = glm.carrier().describe();
  auto cm = m.carrier().cardinality();
  auto cg = glm.carrier().cardinality();
  auto card = [](const std::optional<std::uint64_t>& c) { return c ? std::to_string(*c) : std::string("infinite"); };
  if (cm != cg) {
    rep.isomorphic = false;
    rep.certificate = "cardinality: |M| = " + card(cm) + " but |Gamma(L(M))| = " + card(cg);
    if (cm) {
      const auto homs = hom_all(m.carrier(), glm.carrier(), budget);
      const auto src = enumerate_elements(m.carrier(), budget.order);
      for (const auto& x : enumerate_elements(glm.carrier(), 3)) {
        bool hit = false;
        for (const auto& h : homs)
          for (const auto& y : src) hit = hit || h(y) == x;
        if (!hit) {
          rep.certificate += "; " + x.str() + " is not in the image of any hom M -> Gamma(L(M))";
          break;
        }
      }
    }
  } else if (auto iso = find_isomorphism(m.carrier(), glm.carrier(), budget)) {
    rep.isomorphic = true;
    rep.certificate = "isomorphism " + iso->describe();
  } else {
    rep.certificate = "no bijective routed scalar map between the carriers";
  }
  // iota_M is the inclusion, so it is onto exactly when M and Gamma(L(M)) have the same components.
  const auto a = m.carrier().components(), b = glm.carrier().components();
  rep.unit_is_iso = std::ranges::equal(a, b);
  return rep;
}

/// P = Gamma_(.)(Z, 1) = {0, 1}, M = the 3-element chain: Gamma(L(M)) = [0,1] cap Q is not M.
inline NonEquivalenceReport non_equivalence_witness(const Budget& budget = {}) {
  const PmvAlgebra p = gamma_ring(RationalSubring::integers());
  const MvModule m = module_make(p, RationalSubgroup::cyclic(Rational(1, 2)), Rational(1));
  return compare_with_lift(m, budget);
}

}  // namespace mvlab
