#pragma once

/**
 * @file groups.hpp
 * @brief Rank-1 ordered groups and rings inside the rationals.
 *
 * A RationalSubgroup is one of
 *   - Cyclic(s)       = { k s : k in Z }
 *   - Localized(c, S) = c * Z[1/S], S a nonempty finite set of primes
 *   - All             = Q
 * Cyclic(s) is the S = {} case of Localized and is always stored as Cyclic.
 * The scale c is kept positive and coprime to every prime of S, which makes
 * the descriptor a normal form: two descriptors are equal iff the subgroups are.
 *
 * A RationalSubring is Z[1/S] (Localized) or Q (All); its quotient field is
 * always Q, returned as a RationalField that remembers the ring it came from.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mvlab/error.hpp"
#include "mvlab/rational.hpp"

namespace mvlab {

using PrimeSet = std::vector<std::int64_t>;  // sorted, unique

inline PrimeSet prime_union(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool prime_subset(const PrimeSet& a, const PrimeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::int64_t prime_product(const PrimeSet& s) {
  std::int64_t n = 1;
  for (auto p : s) n *= p;
  return n;
}

class RationalSubgroup {
 public:
  enum class Kind { Cyclic, Localized, All };

  static RationalSubgroup cyclic(const Rational& step) { return localized(step, {}); }

  static RationalSubgroup localized(Rational scale, PrimeSet primes) {
    if (scale.sign() <= 0) fail(errc::invalid_generator, "subgroup scale must be positive, got " + scale.str());
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::int64_t n = scale.num(), d = scale.den();
    for (auto p : primes) {
      if (p < 2 || prime_factors(p) != PrimeSet{p}) fail(errc::invalid_generator, "not a prime: " + std::to_string(p));
      while (n % p == 0) n /= p;
      while (d % p == 0) d /= p;
    }
    RationalSubgroup g;
    g.kind_ = primes.empty() ? Kind::Cyclic : Kind::Localized;
    g.scale_ = Rational(n, d);
    g.primes_ = std::move(primes);
    return g;
  }

  static RationalSubgroup all() {
    RationalSubgroup g;
    g.kind_ = Kind::All;
    return g;
  }

  Kind kind() const noexcept { return kind_; }
  bool is_all() const noexcept { return kind_ == Kind::All; }
  /// Generator of a cyclic group; the scale c of c*Z[1/S]. Meaningless for All.
  const Rational& scale() const noexcept { return scale_; }
  const PrimeSet& primes() const noexcept { return primes_; }

  bool contains(const Rational& q) const {
    if (kind_ == Kind::All || q.is_zero()) return true;
    Rational t = q / scale_;
    return kind_ == Kind::Cyclic ? t.is_integer() : is_smooth(t.den(), primes_);
  }

  /// DSL text; parses back to an equal descriptor.
  std::string describe() const {
    switch (kind_) {
      case Kind::All: return "rationals";
      case Kind::Cyclic: return scale_ == Rational(1) ? "integers" : "cyclic(" + scale_.str() + ")";
      case Kind::Localized: {
        std::string base = "localized(" + std::to_string(prime_product(primes_)) + ")";
        return scale_ == Rational(1) ? base : "scaled(" + scale_.str() + ", " + base + ")";
      }
    }
    return {};
  }

  friend bool operator==(const RationalSubgroup&, const RationalSubgroup&) = default;

 private:
  Kind kind_ = Kind::Cyclic;
  Rational scale_{1};
  PrimeSet primes_;
};

/// The image { lambda x : x in G } for lambda > 0.
inline RationalSubgroup scaled(const RationalSubgroup& g, const Rational& lambda) {
  if (g.is_all()) return g;
  return RationalSubgroup::localized(g.scale() * lambda, g.primes());
}

/// Decides A <= B.
inline bool is_subgroup(const RationalSubgroup& a, const RationalSubgroup& b) {
  if (b.is_all()) return true;
  if (a.is_all()) return false;
  return prime_subset(a.primes(), b.primes()) && b.contains(a.scale());
}

/// Smallest subgroup containing every generator: Cyclic(g/l) with l the lcm of
/// the denominators and g the gcd of the rescaled numerators.
inline RationalSubgroup subgroup_generate(std::span<const Rational> gens) {
  if (gens.empty()) fail(errc::invalid_generator, "subgroup_generate needs at least one generator");
  std::int64_t l = 1;
  for (const auto& q : gens) {
    if (q.sign() <= 0) fail(errc::invalid_generator, "generator must be positive, got " + q.str());
    wide_int w = wide_int(l / std::gcd(l, q.den())) * q.den();
    if (w > std::numeric_limits<std::int64_t>::max()) fail(errc::overflow, "lcm of denominators overflows");
    l = static_cast<std::int64_t>(w);
  }
  std::int64_t g = 0;
  for (const auto& q : gens) g = std::gcd(g, static_cast<std::int64_t>((Rational(l) * q).num()));
  return RationalSubgroup::cyclic(Rational(g, l));
}

inline bool subgroup_member(const RationalSubgroup& g, const Rational& q) { return g.contains(q); }

class RationalSubring {
 public:
  enum class Kind { Localized, All };

  static RationalSubring localized(PrimeSet primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (auto p : primes)
      if (p < 2 || prime_factors(p) != PrimeSet{p}) fail(errc::invalid_generator, "not a prime: " + std::to_string(p));
    RationalSubring r;
    r.primes_ = std::move(primes);
    return r;
  }
  static RationalSubring integers() { return localized({}); }
  static RationalSubring all() {
    RationalSubring r;
    r.kind_ = Kind::All;
    return r;
  }

  Kind kind() const noexcept { return kind_; }
  bool is_all() const noexcept { return kind_ == Kind::All; }
  const PrimeSet& inverted_primes() const noexcept { return primes_; }

  bool contains(const Rational& q) const { return kind_ == Kind::All || is_smooth(q.den(), primes_); }

  /// The ring viewed as an additive group.
  RationalSubgroup as_group() const {
    return kind_ == Kind::All ? RationalSubgroup::all() : RationalSubgroup::localized(Rational(1), primes_);
  }

  std::string describe() const {
    if (kind_ == Kind::All) return "rationals";
    return primes_.empty() ? "integers" : "localized(" + std::to_string(prime_product(primes_)) + ")";
  }

  friend bool operator==(const RationalSubring&, const RationalSubring&) = default;

 private:
  Kind kind_ = Kind::Localized;
  PrimeSet primes_;
};

/// Smallest unital subring containing the generators: invert every prime that
/// divides some lowest-terms denominator.
inline RationalSubring subring_generate(std::span<const Rational> gens) {
  PrimeSet s;
  for (const auto& q : gens) s = prime_union(s, prime_factors(q.den()));
  return RationalSubring::localized(std::move(s));
}

inline bool subring_member(const RationalSubring& r, const Rational& q) { return r.contains(q); }

/// Q with unit 1. `source` is the ring whose fractions produced it.
struct RationalField {
  RationalSubring source = RationalSubring::all();
  Rational unit{1};

  std::string describe() const { return "Q"; }
  friend bool operator==(const RationalField& a, const RationalField& b) { return a.unit == b.unit; }
};

inline RationalField fraction_field(const RationalSubring& r) { return RationalField{r, Rational(1)}; }

/// Writes q = x / y with x, y in R and y != 0. Integers lie in every subring,
/// so the lowest-terms numerator and denominator always work.
inline std::pair<Rational, Rational> quotient_representation(const RationalSubring& r, const Rational& q) {
  std::pair<Rational, Rational> xy{Rational(q.num()), Rational(q.den())};
  if (!r.contains(xy.first) || !r.contains(xy.second)) fail(errc::precondition, "integers must lie in every subring");
  return xy;
}

/// Least n with n a > b.
inline std::int64_t archimedean_witness(const Rational& a, const Rational& b) {
  if (a.sign() <= 0) fail(errc::precondition, "archimedean_witness needs a > 0, got " + a.str());
  if (b.sign() <= 0) fail(errc::precondition, "archimedean_witness needs b > 0, got " + b.str());
  return (b / a).floor() + 1;
}

}  // namespace mvlab
