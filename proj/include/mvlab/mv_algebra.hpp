#pragma once

/**
 * @file mv_algebra.hpp
 * @brief MV-algebras presented as Gamma(G, u) of rank-1 rational groups.
 *
 * Every algebra here is a finite product of components [0, u]_G with G a
 * RationalSubgroup and u a positive member of G, carrying
 *
 *     x (+) y = (x + y) /\ u,      x* = u - x
 *
 * coordinatewise. The descriptor (components plus a product flag) is the
 * algebra's identity: two algebras are equal iff their descriptors are.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvlab/element.hpp"
#include "mvlab/error.hpp"
#include "mvlab/groups.hpp"
#include "mvlab/report.hpp"

namespace mvlab {

struct Component {
  RationalSubgroup group;
  Rational unit;

  bool finite() const { return group.kind() == RationalSubgroup::Kind::Cyclic; }
  friend bool operator==(const Component&, const Component&) = default;
};

/// Cap on explicit enumerations; larger carriers are only sampled.
inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t(1) << 22;

class MvAlgebra {
 public:
  enum class Kind { FiniteChain, IntervalQ, GammaRank1, Product };

  /// The two-element algebra.
  MvAlgebra() : comps_{Component{RationalSubgroup::cyclic(Rational(1)), Rational(1)}} {}

  static MvAlgebra rank1(RationalSubgroup g, Rational u) {
    if (u.sign() <= 0) fail(errc::invalid_unit, "unit must be positive, got " + u.str());
    if (!g.contains(u)) fail(errc::invalid_unit, "unit " + u.str() + " is not in " + g.describe());
    MvAlgebra a;
    a.comps_ = {Component{std::move(g), u}};
    return a;
  }

  static MvAlgebra chain(std::int64_t d) {
    if (d < 1) fail(errc::precondition, "chain(d) needs d >= 1, got " + std::to_string(d));
    return rank1(RationalSubgroup::cyclic(Rational(1, d)), Rational(1));
  }
  static MvAlgebra boolean() { return chain(1); }
  static MvAlgebra interval_q() { return rank1(RationalSubgroup::all(), Rational(1)); }

  /// Flattens nested products; the result is always flagged as a product.
  static MvAlgebra product(std::span<const MvAlgebra> factors) {
    if (factors.empty()) fail(errc::precondition, "a product needs at least one factor");
    MvAlgebra a;
    a.comps_.clear();
    a.product_ = true;
    for (const auto& f : factors) a.comps_.insert(a.comps_.end(), f.comps_.begin(), f.comps_.end());
    return a;
  }
  static MvAlgebra product(std::initializer_list<MvAlgebra> factors) {
    return product(std::span<const MvAlgebra>(factors.begin(), factors.size()));
  }
  static MvAlgebra from_components(std::vector<Component> comps, bool is_product) {
    if (comps.empty()) fail(errc::precondition, "an algebra needs at least one component");
    if (comps.size() > 1) is_product = true;
    MvAlgebra a;
    for (auto& c : comps) {
      if (c.unit.sign() <= 0 || !c.group.contains(c.unit))
        fail(errc::invalid_unit, "unit " + c.unit.str() + " is not a positive member of " + c.group.describe());
    }
    a.comps_ = std::move(comps);
    a.product_ = is_product;
    return a;
  }

  Kind kind() const {
    if (product_) return Kind::Product;
    const auto& c = comps_[0];
    if (c.unit == Rational(1)) {
      if (c.group.is_all()) return Kind::IntervalQ;
      if (c.finite() && c.group.scale().num() == 1) return Kind::FiniteChain;
    }
    return Kind::GammaRank1;
  }

  bool is_product() const noexcept { return product_; }
  std::size_t arity() const noexcept { return comps_.size(); }
  const Component& component(std::size_t i) const { return comps_[i]; }
  std::span<const Component> components() const noexcept { return comps_; }
  /// Totally ordered iff there is a single coordinate.
  bool totally_ordered() const noexcept { return comps_.size() == 1; }

  MvElement zero() const { return MvElement(comps_.size()); }
  MvElement top() const {
    MvElement t(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) t[i] = comps_[i].unit;
    return t;
  }

  /// Number of elements, or nullopt for infinite carriers. Saturates at kMaxEnumeration + 1.
  std::optional<std::uint64_t> cardinality() const {
    std::uint64_t n = 1;
    for (const auto& c : comps_) {
      if (!c.finite()) return std::nullopt;
      Rational steps = c.unit / c.group.scale();
      std::uint64_t k = static_cast<std::uint64_t>(steps.num()) + 1;
      n = (k > kMaxEnumeration || n > kMaxEnumeration / k) ? kMaxEnumeration + 1 : n * k;
    }
    return n;
  }
  bool finite() const { return cardinality().has_value(); }

  bool contains(const MvElement& x) const {
    if (x.size() != comps_.size()) return false;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      if (x[i].sign() < 0 || comps_[i].unit < x[i] || !comps_[i].group.contains(x[i])) return false;
    }
    return true;
  }

  std::string describe() const {
    if (!product_) return describe_component(comps_[0]);
    std::string s = "prod(";
    for (std::size_t i = 0; i < comps_.size(); ++i) s += (i ? ", " : "") + describe_component(comps_[i]);
    return s + ")";
  }

  static std::string describe_component(const Component& c) {
    if (c.unit == Rational(1)) {
      if (c.group.is_all()) return "interval_q";
      if (c.finite() && c.group.scale().num() == 1) {
        return c.group.scale().den() == 1 ? "boolean" : "chain(" + std::to_string(c.group.scale().den()) + ")";
      }
    }
    return "gamma(" + c.group.describe() + ", " + c.unit.str() + ")";
  }

  friend bool operator==(const MvAlgebra&, const MvAlgebra&) = default;

 private:
  std::vector<Component> comps_;
  bool product_ = false;
};

/// Gamma(G, u) = [0, u]_G.
inline MvAlgebra gamma(const RationalSubgroup& g, const Rational& u) { return MvAlgebra::rank1(g, u); }

/// Gamma of a finite product of groups with a componentwise unit.
inline MvAlgebra gamma(std::span<const RationalSubgroup> gs, const MvElement& u) {
  if (gs.size() != u.size() || gs.empty()) fail(errc::invalid_unit, "unit arity does not match the group product");
  std::vector<Component> comps;
  for (std::size_t i = 0; i < gs.size(); ++i) comps.push_back(Component{gs[i], u[i]});
  return MvAlgebra::from_components(std::move(comps), gs.size() > 1);
}

/// The (G, u) an algebra was built from. Exact bookkeeping: every algebra is a Gamma image.
struct GroupWithUnit {
  std::vector<RationalSubgroup> groups;
  MvElement unit;
  bool product = false;

  std::string describe() const {
    std::string g, u;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      g += (i ? " x " : "") + groups[i].describe();
      u += (i ? ", " : "") + unit[i].str();
    }
    return product ? "(" + g + ", (" + u + "))" : "(" + g + ", " + u + ")";
  }
  friend bool operator==(const GroupWithUnit&, const GroupWithUnit&) = default;
};

inline GroupWithUnit gamma_inverse(const MvAlgebra& a) {
  GroupWithUnit gu;
  for (const auto& c : a.components()) gu.groups.push_back(c.group);
  gu.unit = a.top();
  gu.product = a.is_product();
  return gu;
}

inline MvAlgebra gamma(const GroupWithUnit& gu) {
  std::vector<Component> comps;
  for (std::size_t i = 0; i < gu.groups.size(); ++i) comps.push_back(Component{gu.groups[i], gu.unit[i]});
  return MvAlgebra::from_components(std::move(comps), gu.product);
}

namespace detail {

inline MvElement oplus(const MvAlgebra& a, const MvElement& x, const MvElement& y) {
  MvElement r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = min(x[i] + y[i], a.component(i).unit);
  return r;
}

inline MvElement neg(const MvAlgebra& a, const MvElement& x) {
  MvElement r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a.component(i).unit - x[i];
  return r;
}

inline void require_member(const MvAlgebra& a, const MvElement& x) {
  if (!a.contains(x)) fail(errc::membership, x.str() + " is not an element of " + a.describe());
}

}  // namespace detail

inline MvElement mv_oplus(const MvAlgebra& a, const MvElement& x, const MvElement& y) {
  detail::require_member(a, x);
  detail::require_member(a, y);
  return detail::oplus(a, x, y);
}

inline MvElement mv_neg(const MvAlgebra& a, const MvElement& x) {
  detail::require_member(a, x);
  return detail::neg(a, x);
}

enum class DerivedOp { odot, join, meet, truncated_minus };

/// The derived operations, written in terms of (+) and * only.
inline MvElement mv_derived(const MvAlgebra& a, DerivedOp op, const MvElement& x, const MvElement& y) {
  detail::require_member(a, x);
  detail::require_member(a, y);
  using detail::neg;
  using detail::oplus;
  auto join = [&](const MvElement& p, const MvElement& q) { return oplus(a, neg(a, oplus(a, neg(a, p), q)), q); };
  switch (op) {
    case DerivedOp::odot: return neg(a, oplus(a, neg(a, x), neg(a, y)));
    case DerivedOp::join: return join(x, y);
    case DerivedOp::meet: return neg(a, join(neg(a, x), neg(a, y)));
    case DerivedOp::truncated_minus: return neg(a, oplus(a, neg(a, x), y));
  }
  return {};
}

namespace detail {

inline std::vector<Rational> enumerate_component(const Component& c, std::int64_t order) {
  std::vector<Rational> out;
  if (c.finite()) {
    const Rational& s = c.group.scale();
    std::int64_t k = (c.unit / s).num();
    if (static_cast<std::uint64_t>(k) >= kMaxEnumeration)
      fail(errc::unsupported_carrier, "carrier too large to enumerate: " + MvAlgebra::describe_component(c));
    out.reserve(static_cast<std::size_t>(k) + 1);
    for (std::int64_t i = 0; i <= k; ++i) out.push_back(s * Rational(i));
    return out;
  }
  for (const auto& f : farey_sequence(order)) {
    Rational x = c.unit * f;
    if (c.group.contains(x)) out.push_back(x);
  }
  if (!c.group.is_all()) {
    // c * m / D for S-smooth D <= order.
    const Rational& scale = c.group.scale();
    for (std::int64_t d = 1; d <= order; ++d) {
      if (!is_smooth(d, c.group.primes())) continue;
      Rational step = scale / Rational(d);
      std::int64_t m = (c.unit / step).floor();
      if (static_cast<std::uint64_t>(m) >= kMaxEnumeration)
        fail(errc::unsupported_carrier, "carrier too large to enumerate: " + MvAlgebra::describe_component(c));
      for (std::int64_t i = 0; i <= m; ++i) out.push_back(step * Rational(i));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

inline constexpr std::int64_t kSampleDenominator = 1000;
inline constexpr std::int64_t kSampleSmoothBound = std::int64_t(1) << 16;

inline Rational sample_component(const Component& c, Sampler& rng) {
  if (c.finite()) {
    std::int64_t k = (c.unit / c.group.scale()).num();
    return c.group.scale() * Rational(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(k) + 1)));
  }
  if (c.group.is_all()) {
    auto b = static_cast<std::int64_t>(rng.below(kSampleDenominator)) + 1;
    auto a = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(b) + 1));
    return c.unit * Rational(a, b);
  }
  std::int64_t d = 1;
  for (auto p : c.group.primes()) {
    auto e = rng.below(8);
    for (std::uint64_t i = 0; i < e && d * p <= kSampleSmoothBound; ++i) d *= p;
  }
  Rational step = c.group.scale() / Rational(d);
  std::int64_t m = (c.unit / step).floor();
  return step * Rational(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(m) + 1)));
}

}  // namespace detail

/// Finite carriers exactly, ascending; infinite rank-1 carriers by their
/// members among u * F_order together with the multiples c m / D (D <= order,
/// D smooth over the inverted primes). Products are the cartesian product with
/// the first coordinate varying fastest.
inline std::vector<MvElement> enumerate_elements(const MvAlgebra& a, std::int64_t order) {
  std::vector<std::vector<Rational>> axes;
  std::uint64_t total = 1;
  for (const auto& c : a.components()) {
    axes.push_back(detail::enumerate_component(c, order));
    total *= axes.back().size();
    if (total > kMaxEnumeration) fail(errc::unsupported_carrier, "carrier too large to enumerate: " + a.describe());
  }
  std::vector<MvElement> out;
  out.reserve(total);
  std::vector<std::size_t> idx(axes.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    MvElement x(axes.size());
    for (std::size_t i = 0; i < axes.size(); ++i) x[i] = axes[i][idx[i]];
    out.push_back(std::move(x));
    for (std::size_t i = 0; i < axes.size(); ++i) {
      if (++idx[i] < axes[i].size()) break;
      idx[i] = 0;
    }
  }
  return out;
}

inline MvElement sample_element(const MvAlgebra& a, Sampler& rng) {
  MvElement x(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) x[i] = detail::sample_component(a.component(i), rng);
  return x;
}

}  // namespace mvlab
