#pragma once

/**
 * @file hom.hpp
 * @brief MV-algebra homomorphisms between Gamma carriers.
 *
 * A hom into a rank-1 component must factor through one source coordinate
 * (its kernel is a prime ideal) and there be x -> lambda x, where unit
 * preservation forces lambda = u_target / u_source. A hom is therefore a
 * routing (target coordinate j reads source coordinate routing[j]) plus
 * one forced scalar per target coordinate. Construction validates the
 * scalar, the carrier inclusion lambda G_src <= G_tgt, and replays the
 * hom laws on the source carrier.
 */

#include <optional>
#include <string>
#include <vector>

#include "mvlab/check.hpp"
#include "mvlab/mv_algebra.hpp"

namespace mvlab {

class MvHom {
 public:
  const MvAlgebra& source() const noexcept { return source_; }
  const MvAlgebra& target() const noexcept { return target_; }
  const std::vector<std::size_t>& routing() const noexcept { return routing_; }
  const std::vector<Rational>& scalars() const noexcept { return scalars_; }

  MvElement operator()(const MvElement& x) const {
    MvElement y(routing_.size());
    for (std::size_t j = 0; j < routing_.size(); ++j) y[j] = scalars_[j] * x[routing_[j]];
    return y;
  }

  bool is_identity() const {
    if (!(source_ == target_)) return false;
    for (std::size_t j = 0; j < routing_.size(); ++j)
      if (routing_[j] != j || scalars_[j] != Rational(1)) return false;
    return true;
  }

  std::string describe() const {
    std::string s = source_.describe() + " -> " + target_.describe() + " : x |-> (";
    for (std::size_t j = 0; j < routing_.size(); ++j) {
      s += (j ? ", " : "") + scalars_[j].str() + "*x" + (source_.arity() > 1 ? std::to_string(routing_[j]) : "");
    }
    return s + ")";
  }

  friend bool operator==(const MvHom&, const MvHom&) = default;

  /// Assembles without validation. Use make_hom unless the map is known good.
  static MvHom unchecked(MvAlgebra src, MvAlgebra tgt, std::vector<std::size_t> routing, std::vector<Rational> scalars) {
    MvHom h;
    h.source_ = std::move(src);
    h.target_ = std::move(tgt);
    h.routing_ = std::move(routing);
    h.scalars_ = std::move(scalars);
    return h;
  }

 private:
  MvAlgebra source_, target_;
  std::vector<std::size_t> routing_;
  std::vector<Rational> scalars_;
};

/// Replays h(0) = 0, h(top) = top, h(x*) = h(x)*, h(x (+) y) = h(x) (+) h(y) and
/// membership of images on the source carrier.
inline LawReport hom_laws(const MvHom& h, const Budget& budget = {}) {
  TupleSpace space(budget);
  const auto d = space.add(h.source());
  const auto& src = h.source();
  const auto& tgt = h.target();
  using Span = std::span<const MvElement>;
  LawReport rep;
  rep.instance = h.describe();
  rep.seed = budget.seed;
  rep.laws.push_back(space.check("zero", "h(0) = 0", {}, [&](Span) -> std::optional<bool> {
    return h(src.zero()) == tgt.zero();
  }));
  rep.laws.push_back(space.check("top", "h(top) = top", {}, [&](Span) -> std::optional<bool> {
    return h(src.top()) == tgt.top();
  }));
  rep.laws.push_back(space.check("into", "h(x) lies in the target", {{d, "x"}},
                                 [&](Span t) -> std::optional<bool> { return tgt.contains(h(t[0])); }));
  rep.laws.push_back(space.check("neg", "h(x*) = h(x)*", {{d, "x"}}, [&](Span t) -> std::optional<bool> {
    return h(detail::neg(src, t[0])) == detail::neg(tgt, h(t[0]));
  }));
  rep.laws.push_back(space.check("oplus", "h(x (+) y) = h(x) (+) h(y)", {{d, "x"}, {d, "y"}},
                                 [&](Span t) -> std::optional<bool> {
                                   return h(detail::oplus(src, t[0], t[1])) == detail::oplus(tgt, h(t[0]), h(t[1]));
                                 }));
  return rep;
}

namespace detail {

/// Why (routing, scalars) is not a hom, or empty when the structural checks pass.
inline std::string hom_defect(const MvAlgebra& src, const MvAlgebra& tgt, const std::vector<std::size_t>& routing,
                              const std::vector<Rational>& scalars) {
  if (routing.size() != tgt.arity() || scalars.size() != tgt.arity()) return "routing/scalar arity does not match target";
  for (std::size_t j = 0; j < routing.size(); ++j) {
    if (routing[j] >= src.arity()) return "routing index " + std::to_string(routing[j]) + " out of range";
    const auto& s = src.component(routing[j]);
    const auto& t = tgt.component(j);
    if (scalars[j] * s.unit != t.unit) {
      return "top is not preserved in coordinate " + std::to_string(j) + ": " + scalars[j].str() + "*" +
             s.unit.str() + " != " + t.unit.str();
    }
    if (!is_subgroup(scaled(s.group, scalars[j]), t.group)) {
      return "coordinate " + std::to_string(j) + ": " + scalars[j].str() + "*" + s.group.describe() +
             " is not contained in " + t.group.describe();
    }
  }
  return {};
}

}  // namespace detail

inline MvHom make_hom(const MvAlgebra& src, const MvAlgebra& tgt, std::vector<std::size_t> routing,
                      std::vector<Rational> scalars, const Budget& budget = {}) {
  if (auto why = detail::hom_defect(src, tgt, routing, scalars); !why.empty()) {
    fail(errc::invalid_hom, "not an MV-homomorphism " + src.describe() + " -> " + tgt.describe() + ": " + why);
  }
  MvHom h = MvHom::unchecked(src, tgt, std::move(routing), std::move(scalars));
  LawReport laws = hom_laws(h, budget);
  for (const auto& l : laws.laws) {
    if (!l.passed()) fail(errc::invalid_hom, "hom law '" + l.statement + "' fails at " + to_string(*l.counterexample));
  }
  return h;
}

inline std::optional<MvHom> try_make_hom(const MvAlgebra& src, const MvAlgebra& tgt, std::vector<std::size_t> routing,
                                         std::vector<Rational> scalars, const Budget& budget = {}) {
  try {
    return make_hom(src, tgt, std::move(routing), std::move(scalars), budget);
  } catch (const error& e) {
    if (e.code() != errc::invalid_hom) throw;
    return std::nullopt;
  }
}

inline MvHom identity_hom(const MvAlgebra& a) {
  std::vector<std::size_t> r(a.arity());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = i;
  return MvHom::unchecked(a, a, std::move(r), std::vector<Rational>(a.arity(), Rational(1)));
}

/// g after h. Throws errc::composition unless target(h) == source(g).
inline MvHom compose(const MvHom& g, const MvHom& h) {
  if (!(h.target() == g.source()))
    fail(errc::composition, "cannot compose: " + h.target().describe() + " != " + g.source().describe());
  std::vector<std::size_t> r(g.routing().size());
  std::vector<Rational> s(g.routing().size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    r[j] = h.routing()[g.routing()[j]];
    s[j] = g.scalars()[j] * h.scalars()[g.routing()[j]];
  }
  return MvHom::unchecked(h.source(), g.target(), std::move(r), std::move(s));
}

namespace detail {

/// Source coordinates that can feed target coordinate j, preferring j itself.
inline std::vector<std::size_t> route_candidates(const MvAlgebra& src, const MvAlgebra& tgt, std::size_t j) {
  std::vector<std::size_t> out;
  auto ok = [&](std::size_t i) {
    const auto& s = src.component(i);
    const auto& t = tgt.component(j);
    Rational lambda = t.unit / s.unit;
    return is_subgroup(scaled(s.group, lambda), t.group);
  };
  if (j < src.arity() && ok(j)) out.push_back(j);
  for (std::size_t i = 0; i < src.arity(); ++i)
    if (i != j && ok(i)) out.push_back(i);
  return out;
}

}  // namespace detail

/// Every hom A -> B, in routing order (each target coordinate prefers its own index).
inline std::vector<MvHom> hom_all(const MvAlgebra& a, const MvAlgebra& b, const Budget& budget = {}) {
  std::vector<std::vector<std::size_t>> cands;
  for (std::size_t j = 0; j < b.arity(); ++j) {
    cands.push_back(detail::route_candidates(a, b, j));
    if (cands.back().empty()) return {};
  }
  std::vector<MvHom> out;
  std::vector<std::size_t> idx(b.arity(), 0);
  while (true) {
    std::vector<std::size_t> r(b.arity());
    std::vector<Rational> s(b.arity());
    for (std::size_t j = 0; j < r.size(); ++j) {
      r[j] = cands[j][idx[j]];
      s[j] = b.component(j).unit / a.component(r[j]).unit;
    }
    if (auto h = try_make_hom(a, b, std::move(r), std::move(s), budget)) out.push_back(std::move(*h));
    std::size_t k = b.arity();
    bool done = true;
    while (k-- > 0) {
      if (++idx[k] < cands[k].size()) {
        done = false;
        break;
      }
      idx[k] = 0;
    }
    if (done) break;
  }
  return out;
}

/// The preferred hom A -> B (the identity when A == B), if any exists.
inline std::optional<MvHom> hom_find(const MvAlgebra& a, const MvAlgebra& b, const Budget& budget = {}) {
  auto all = hom_all(a, b, budget);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// An isomorphism A -> B if one exists: a hom that routes bijectively and
/// whose coordinate scalings are onto.
inline std::optional<MvHom> find_isomorphism(const MvAlgebra& a, const MvAlgebra& b, const Budget& budget = {}) {
  if (a.arity() != b.arity() || a.cardinality() != b.cardinality()) return std::nullopt;
  for (auto& h : hom_all(a, b, budget)) {
    std::vector<bool> hit(a.arity(), false);
    bool bijective = true;
    for (std::size_t j = 0; j < b.arity(); ++j) {
      std::size_t i = h.routing()[j];
      if (hit[i]) bijective = false;
      hit[i] = true;
      if (!is_subgroup(b.component(j).group, scaled(a.component(i).group, h.scalars()[j]))) bijective = false;
    }
    if (bijective) return std::move(h);
  }
  return std::nullopt;
}

}  // namespace mvlab
