#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "mvlab/rational.hpp"

namespace mvlab {

/// A point of an MV carrier: one rational coordinate per rank-1 component.
/// Lexicographic `<=>` is a storage order only; the MV order is `leq`.
class MvElement {
 public:
  MvElement() = default;
  MvElement(std::initializer_list<Rational> xs) : c_(xs) {}
  explicit MvElement(std::vector<Rational> xs) : c_(std::move(xs)) {}
  explicit MvElement(std::size_t n, const Rational& fill = Rational(0)) : c_(n, fill) {}

  std::size_t size() const noexcept { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<Rational>& coords() const noexcept { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const MvElement&, const MvElement&) = default;
  friend auto operator<=>(const MvElement&, const MvElement&) = default;

  /// "p/q" for a single coordinate, "(a, b)" otherwise.
  std::string str() const {
    if (c_.size() == 1) return c_[0].str();
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ", " : "") + c_[i].str();
    return s + ")";
  }

 private:
  std::vector<Rational> c_;
};

inline bool leq(const MvElement& x, const MvElement& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] < x[i]) return false;
  return true;
}

}  // namespace mvlab
