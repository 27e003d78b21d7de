#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mvlab/element.hpp"

namespace mvlab {

/// How hard a law check looks. Finite carriers no larger than
/// `exhaustive_limit` are checked on every tuple; otherwise `samples` seeded
/// tuples are drawn, preceded by the full enumeration at Farey `order` when
/// that enumeration is small enough.
struct Budget {
  std::size_t exhaustive_limit = 200;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::int64_t order = 4;
};

/// Seeded draws that do not depend on the standard library's distribution
/// implementations, so reports are identical across toolchains.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do v = rng_();
    while (v >= limit);
    return v % n;
  }

 private:
  std::mt19937_64 rng_;
};

using Assignment = std::vector<std::pair<std::string, MvElement>>;

inline std::string to_string(const Assignment& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].first + " = " + a[i].second.str();
  return s;
}

struct LawCheck {
  std::string law;
  std::string statement;
  std::size_t cases = 0;
  bool exhaustive = false;
  std::optional<Assignment> counterexample;

  bool passed() const noexcept { return !counterexample.has_value(); }
};

struct LawReport {
  std::string instance;
  std::uint64_t seed = 0;
  std::vector<LawCheck> laws;
  std::vector<std::string> certificates;

  bool passed() const noexcept {
    for (const auto& l : laws)
      if (!l.passed()) return false;
    return true;
  }
  std::size_t cases() const noexcept {
    std::size_t n = 0;
    for (const auto& l : laws) n += l.cases;
    return n;
  }
  bool exhaustive() const noexcept {
    for (const auto& l : laws)
      if (!l.exhaustive) return false;
    return !laws.empty();
  }
  const LawCheck* find(const std::string& law) const {
    for (const auto& l : laws)
      if (l.law == law) return &l;
    return nullptr;
  }
};

/// Verdict on a quasi-identity. `holds` is false exactly when a witness exists.
struct DomainReport {
  std::string instance;
  std::string property;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  bool exhaustive = false;
  bool holds = true;
  std::optional<Assignment> witness;
  std::vector<std::string> certificates;

  /// "certified" when a structural argument backs a positive verdict.
  std::string status() const {
    if (!holds) return "refuted";
    return certificates.empty() ? (exhaustive ? "exhaustive" : "tested") : "certified";
  }
};

}  // namespace mvlab
