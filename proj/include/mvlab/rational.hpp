#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over 64-bit integers.
 *
 * Values are always kept in lowest terms with a positive denominator, so
 * structural equality is numeric equality and zero is uniquely 0/1.
 * Intermediate products are computed in 128 bits; a result that does not
 * fit back into 64 bits raises errc::overflow instead of wrapping.
 */

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mvlab/error.hpp"

namespace mvlab {

__extension__ typedef __int128 wide_int;

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers
  Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  /// Largest integer not exceeding the value.
  std::int64_t floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  Rational operator-() const {
    if (num_ == std::numeric_limits<std::int64_t>::min()) fail(errc::overflow, "rational negation overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(wide_int(a.num_) + b.num_, a.den_);
    return from_wide(wide_int(a.num_) * b.den_ + wide_int(b.num_) * a.den_, wide_int(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(wide_int(a.num_) - b.num_, a.den_);
    return from_wide(wide_int(a.num_) * b.den_ - wide_int(b.num_) * a.den_, wide_int(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return from_wide(wide_int(a.num_) * b.num_, 1);
    return from_wide(wide_int(a.num_) * b.num_, wide_int(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(errc::division_by_zero, "rational division by zero");
    return from_wide(wide_int(a.num_) * b.den_, wide_int(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    wide_int l = wide_int(a.num_) * b.den_;
    wide_int r = wide_int(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or just "p" for integers.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto slash = text.find('/');
    std::int64_t n = parse_int(trim(text.substr(0, slash)));
    std::int64_t d = slash == std::string_view::npos ? 1 : parse_int(trim(text.substr(slash + 1)));
    if (d == 0) fail(errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::int64_t parse_int(std::string_view s) {
    if (s.empty()) fail(errc::syntax, "empty integer literal");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) fail(errc::syntax, "malformed integer literal '" + std::string(s) + "'");
    wide_int v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') fail(errc::syntax, "malformed integer literal '" + std::string(s) + "'");
      v = v * 10 + (s[i] - '0');
      if (v > wide_int(std::numeric_limits<std::int64_t>::max())) fail(errc::overflow, "integer literal too large");
    }
    return static_cast<std::int64_t>(neg ? -v : v);
  }

  static wide_int wide_gcd(wide_int a, wide_int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      wide_int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(wide_int n, wide_int d) {
    if (d == 0) fail(errc::division_by_zero, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Rational r;
    if (n == 0) return r;
    if (d != 1) {
      wide_int g = wide_gcd(n, d);
      n /= g;
      d /= g;
    }
    constexpr wide_int lo = std::numeric_limits<std::int64_t>::min();
    constexpr wide_int hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi) fail(errc::overflow, "rational arithmetic overflow");
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Farey sequence of order n: reduced fractions in [0,1] with denominator <= n, ascending.
inline std::vector<Rational> farey_sequence(std::int64_t n) {
  if (n < 1) fail(errc::precondition, "Farey order must be positive");
  std::vector<Rational> out;
  std::int64_t a = 0, b = 1, c = 1, d = n;
  out.emplace_back(a, b);
  while (c <= n) {
    std::int64_t k = (n + b) / d;
    std::int64_t e = k * c - a;
    std::int64_t f = k * d - b;
    a = c;
    b = d;
    c = e;
    d = f;
    out.emplace_back(a, b);
  }
  return out;
}

/// Distinct prime factors of |n|, ascending. Trial division; inputs are desk-sized.
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  std::uint64_t m = n < 0 ? std::uint64_t(0) - std::uint64_t(n) : std::uint64_t(n);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      ps.push_back(static_cast<std::int64_t>(p));
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) ps.push_back(static_cast<std::int64_t>(m));
  return ps;
}

/// True iff every prime factor of n lies in `primes` (n = 1 is smooth over anything).
inline bool is_smooth(std::int64_t n, const std::vector<std::int64_t>& primes) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (std::int64_t p : primes)
    while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace mvlab
