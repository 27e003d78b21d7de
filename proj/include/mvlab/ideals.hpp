#pragma once

/**
 * @file ideals.hpp
 * @brief Ideals, maximal ideals and the radical of finite MV-algebras.
 *
 * In a finite algebra every ideal is principal: it is generated by the (+)-sum
 * of its own elements. So the ideal lattice is exactly the set of ideals
 * generated by single elements, each computed by closing under (+) and
 * downward under the order. Infinite carriers are rejected; their
 * semisimplicity is certified structurally instead.
 */

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "mvlab/mv_algebra.hpp"

namespace mvlab {

struct Ideal {
  std::vector<MvElement> elements;  // ascending storage order
  bool maximal = false;

  bool contains(const MvElement& x) const { return std::binary_search(elements.begin(), elements.end(), x); }
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.elements == b.elements; }
};

namespace detail {

inline std::vector<MvElement> finite_elements(const MvAlgebra& a, const char* op) {
  if (!a.finite()) fail(errc::unsupported_carrier, std::string(op) + " needs a finite carrier, got " + a.describe());
  auto es = enumerate_elements(a, 1);
  std::sort(es.begin(), es.end());
  return es;
}

/// Smallest ideal containing `gen`, as a membership mask over `es`.
inline std::vector<bool> principal_ideal(const MvAlgebra& a, const std::vector<MvElement>& es, const MvElement& gen) {
  std::vector<bool> in(es.size(), false);
  std::vector<std::size_t> members;
  auto index_of = [&](const MvElement& x) {
    return static_cast<std::size_t>(std::lower_bound(es.begin(), es.end(), x) - es.begin());
  };
  std::vector<std::size_t> work;
  auto add_below = [&](const MvElement& x) {
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (!in[i] && leq(es[i], x)) {
        in[i] = true;
        work.push_back(i);
      }
    }
  };
  add_below(gen);
  while (!work.empty()) {
    std::size_t i = work.back();
    work.pop_back();
    members.push_back(i);
    for (std::size_t j : members) {
      MvElement s = oplus(a, es[i], es[j]);
      if (!in[index_of(s)]) add_below(s);
    }
  }
  return in;
}

}  // namespace detail

/// All ideals of a finite algebra, ordered by size then contents, with maximal ones flagged.
inline std::vector<Ideal> ideals_finite(const MvAlgebra& a) {
  auto es = detail::finite_elements(a, "ideals_finite");
  std::vector<std::vector<bool>> masks;
  for (const auto& g : es) {
    auto m = detail::principal_ideal(a, es, g);
    if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(std::move(m));
  }
  std::vector<Ideal> out;
  for (const auto& m : masks) {
    Ideal id;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (m[i]) id.elements.push_back(es[i]);
    out.push_back(std::move(id));
  }
  std::sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) {
    return x.elements.size() != y.elements.size() ? x.elements.size() < y.elements.size() : x.elements < y.elements;
  });
  auto subset = [](const Ideal& x, const Ideal& y) {
    return std::includes(y.elements.begin(), y.elements.end(), x.elements.begin(), x.elements.end());
  };
  const std::size_t whole = es.size();
  for (auto& i : out) {
    if (i.elements.size() == whole) continue;
    i.maximal = true;
    for (const auto& j : out)
      if (j.elements.size() != whole && j.elements.size() > i.elements.size() && subset(i, j)) i.maximal = false;
  }
  return out;
}

inline std::vector<Ideal> maximal_ideals(const MvAlgebra& a) {
  std::vector<Ideal> out;
  for (auto& i : ideals_finite(a))
    if (i.maximal) out.push_back(std::move(i));
  return out;
}

/// Intersection of the maximal ideals.
inline Ideal radical(const MvAlgebra& a) {
  auto es = detail::finite_elements(a, "radical");
  Ideal r;
  r.elements = es;
  for (const auto& m : maximal_ideals(a)) {
    std::vector<MvElement> keep;
    std::set_intersection(r.elements.begin(), r.elements.end(), m.elements.begin(), m.elements.end(),
                          std::back_inserter(keep));
    r.elements = std::move(keep);
  }
  return r;
}

struct SemisimplicityReport {
  bool semisimple = false;
  bool computed = false;  // radical actually computed (finite carrier)
  std::vector<std::string> certificates;
};

inline SemisimplicityReport semisimplicity(const MvAlgebra& a) {
  SemisimplicityReport rep;
  if (a.finite()) {
    Ideal r = radical(a);
    rep.computed = true;
    rep.semisimple = r.elements.size() == 1 && r.elements[0].is_zero();
    rep.certificates.push_back(rep.semisimple ? "radical computed: Rad(A) = {0}"
                                              : "radical computed: Rad(A) has " +
                                                    std::to_string(r.elements.size()) + " elements");
    return rep;
  }
  rep.semisimple = true;
  rep.certificates.push_back(
      "by construction: every component is an interval [0,u] of a subgroup of Q, so A embeds in a finite power "
      "of [0,1] and its maximal ideals (kernels of the coordinate maps) meet in {0}");
  return rep;
}

inline bool is_semisimple(const MvAlgebra& a) { return semisimplicity(a).semisimple; }

}  // namespace mvlab
