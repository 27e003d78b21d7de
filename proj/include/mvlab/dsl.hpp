#pragma once

/**
 * @file dsl.hpp
 * @brief The algebra description language: parse, print, elaborate.
 *
 *   expr    := atom | head '(' args ')' | number | '(' number, ... ')'
 *   atom    := boolean | interval_q | integers | rationals
 *   head    := chain | gamma | prod | pmv | localized | cyclic | scaled | module | hom
 *   number  := ['-'] digits ['/' digits]
 *
 * module and hom take key=value arguments. Whitespace is ignored.
 */

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvlab/error.hpp"
#include "mvlab/groups.hpp"
#include "mvlab/module.hpp"
#include "mvlab/mv_algebra.hpp"
#include "mvlab/pmv.hpp"

namespace mvlab {

struct Expr {
  enum class Kind { Call, Number, Tuple };
  Kind kind = Kind::Call;
  std::string head;               // Call only
  Rational number;                // Number only
  std::vector<Expr> args;         // Call and Tuple
  std::vector<std::string> keys;  // parallel to args; empty string for positional
  std::size_t pos = 0;            // offset in the source text, not part of equality

  const Expr* arg(std::string_view key) const {
    for (std::size_t i = 0; i < keys.size(); ++i)
      if (keys[i] == key) return &args[i];
    return nullptr;
  }

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.head == b.head && a.number == b.number && a.args == b.args && a.keys == b.keys;
  }
};

namespace detail {

struct HeadRule {
  int min_args;
  int max_args;  // -1: unbounded
  bool keyed;
  std::vector<std::string> keys;     // allowed keys
  std::vector<std::string> required;
};

inline const std::map<std::string, HeadRule, std::less<>>& head_rules() {
  static const std::map<std::string, HeadRule, std::less<>> rules = {
      {"boolean", {0, 0, false, {}, {}}},
      {"interval_q", {0, 0, false, {}, {}}},
      {"integers", {0, 0, false, {}, {}}},
      {"rationals", {0, 0, false, {}, {}}},
      {"chain", {1, 1, false, {}, {}}},
      {"localized", {1, 1, false, {}, {}}},
      {"cyclic", {1, 1, false, {}, {}}},
      {"pmv", {1, 1, false, {}, {}}},
      {"gamma", {2, 2, false, {}, {}}},
      {"scaled", {2, 2, false, {}, {}}},
      {"prod", {1, -1, false, {}, {}}},
      {"module", {2, 4, true, {"scalars", "group", "unit", "carrier", "route"}, {"scalars"}}},
      {"hom", {2, 3, true, {"source", "target", "index"}, {"source", "target"}}},
  };
  return rules;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (i_ != s_.size()) throw syntax_error(i_, "unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) {
      throw syntax_error(i_, std::string("expected '") + c + "'" +
                             (i_ < s_.size() ? ", found '" + std::string(1, s_[i_]) + "'" : ", found end of input"));
    }
  }

  std::string ident() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return std::string(s_.substr(b, i_ - b));
  }

  Expr number() {
    skip();
    std::size_t b = i_;
    auto digits = [&] {
      std::size_t d = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (d == i_) throw syntax_error(i_, "expected digits");
    };
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    skip();
    std::string text(s_.substr(b, 1));
    if (text != "-" && text != "+") text.clear();
    std::size_t nb = i_;
    digits();
    text += s_.substr(nb, i_ - nb);
    if (eat('/')) {
      skip();
      std::size_t db = i_;
      digits();
      text += "/" + std::string(s_.substr(db, i_ - db));
    }
    Expr e;
    e.kind = Expr::Kind::Number;
    e.pos = b;
    try {
      e.number = Rational::parse(text);
    } catch (const error& err) {
      throw syntax_error(b, err.what());
    }
    return e;
  }

  Expr expr() {
    skip();
    if (i_ >= s_.size()) throw syntax_error(i_, "unexpected end of input");
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') return number();
    if (c == '(') return tuple();
    std::size_t at = i_;
    std::string head = ident();
    if (head.empty()) throw syntax_error(at, "unexpected '" + std::string(1, c) + "'");
    auto it = head_rules().find(head);
    if (it == head_rules().end()) throw syntax_error(at, "unknown name '" + head + "'");
    const HeadRule& rule = it->second;
    Expr e;
    e.head = head;
    e.pos = at;
    if (rule.max_args == 0) {
      skip();
      if (i_ < s_.size() && s_[i_] == '(') throw syntax_error(i_, "'" + head + "' takes no arguments");
      return e;
    }
    expect('(');
    if (!eat(')')) {
      do {
        std::string key;
        if (rule.keyed) {
          std::size_t kat = (skip(), i_);
          key = ident();
          if (key.empty()) throw syntax_error(kat, "expected key=value in '" + head + "'");
          if (std::find(rule.keys.begin(), rule.keys.end(), key) == rule.keys.end())
            throw syntax_error(kat, "unknown key '" + key + "' for '" + head + "'");
          if (e.arg(key)) throw syntax_error(kat, "duplicate key '" + key + "'");
          expect('=');
        }
        e.keys.push_back(key);
        e.args.push_back(expr());
      } while (eat(','));
      expect(')');
    }
    const int n = static_cast<int>(e.args.size());
    if (n < rule.min_args || (rule.max_args >= 0 && n > rule.max_args)) {
      throw syntax_error(at, "'" + head + "' takes " +
                             (rule.min_args == rule.max_args ? std::to_string(rule.min_args)
                                                             : std::to_string(rule.min_args) + ".." +
                                                                   (rule.max_args < 0 ? std::string("n")
                                                                                      : std::to_string(rule.max_args))) +
                             " arguments, got " + std::to_string(n));
    }
    for (const auto& k : rule.required)
      if (!e.arg(k)) throw syntax_error(at, "'" + head + "' needs " + k + "=");
    return e;
  }

  Expr tuple() {
    Expr e;
    e.kind = Expr::Kind::Tuple;
    e.pos = i_;
    expect('(');
    if (!eat(')')) {
      do {
        e.args.push_back(number());
        e.keys.emplace_back();
      } while (eat(','));
      expect(')');
    }
    return e;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Expr parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

/// Canonical text: ", " between arguments, key=value, no other whitespace.
inline std::string print_expr(const Expr& e) {
  if (e.kind == Expr::Kind::Number) return e.number.str();
  std::string s = e.kind == Expr::Kind::Call ? e.head : "";
  if (e.kind == Expr::Kind::Call && e.args.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) s += ", ";
    if (!e.keys[i].empty()) s += e.keys[i] + "=";
    s += print_expr(e.args[i]);
  }
  return s + ")";
}

namespace detail {

[[noreturn]] inline void elab_fail(const Expr& e, const std::string& why) {
  fail(errc::elaboration, print_expr(e) + ": " + why);
}

inline const Rational& expect_number(const Expr& e, const char* what) {
  if (e.kind != Expr::Kind::Number) elab_fail(e, std::string("expected ") + what);
  return e.number;
}

inline std::int64_t expect_positive_int(const Expr& e, const char* what) {
  const Rational& q = expect_number(e, what);
  if (!q.is_integer() || q.sign() <= 0) elab_fail(e, std::string(what) + " must be a positive integer");
  return q.num();
}

inline PrimeSet primes_of(const Expr& e) {
  std::int64_t n = expect_positive_int(e.args[0], "localized(n)");
  return prime_factors(n);
}

/// Re-raises library errors as elaboration errors that name the expression.
template <class F>
auto elaborating(const Expr& e, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const error& err) {
    if (err.code() == errc::elaboration) throw;
    elab_fail(e, err.what());
  }
}

}  // namespace detail

inline RationalSubgroup elaborate_group(const Expr& e) {
  if (e.kind != Expr::Kind::Call) detail::elab_fail(e, "expected a group");
  return detail::elaborating(e, [&]() -> RationalSubgroup {
    if (e.head == "integers") return RationalSubgroup::cyclic(Rational(1));
    if (e.head == "rationals") return RationalSubgroup::all();
    if (e.head == "cyclic") return RationalSubgroup::cyclic(detail::expect_number(e.args[0], "a rational step"));
    if (e.head == "localized") return RationalSubgroup::localized(Rational(1), detail::primes_of(e));
    if (e.head == "scaled") {
      const Rational& c = detail::expect_number(e.args[0], "a rational scale");
      RationalSubgroup g = elaborate_group(e.args[1]);
      if (c.sign() <= 0) detail::elab_fail(e, "scale must be positive");
      return scaled(g, c);
    }
    detail::elab_fail(e, "expected a group (integers, rationals, cyclic, localized, scaled)");
  });
}

inline RationalSubring elaborate_ring(const Expr& e) {
  if (e.kind != Expr::Kind::Call) detail::elab_fail(e, "expected a ring");
  if (e.head == "integers") return RationalSubring::integers();
  if (e.head == "rationals") return RationalSubring::all();
  if (e.head == "localized") return RationalSubring::localized(detail::primes_of(e));
  detail::elab_fail(e, "expected a ring (integers, rationals, localized)");
}

inline MvAlgebra elaborate_algebra(const Expr& e) {
  if (e.kind != Expr::Kind::Call) detail::elab_fail(e, "expected an algebra");
  return detail::elaborating(e, [&]() -> MvAlgebra {
    if (e.head == "boolean") return MvAlgebra::boolean();
    if (e.head == "interval_q") return MvAlgebra::interval_q();
    if (e.head == "chain") return MvAlgebra::chain(detail::expect_positive_int(e.args[0], "chain length"));
    if (e.head == "gamma") {
      RationalSubgroup g = elaborate_group(e.args[0]);
      const Rational& u = detail::expect_number(e.args[1], "a rational unit");
      if (u.sign() <= 0) detail::elab_fail(e, "unit must be positive");
      if (!g.contains(u)) detail::elab_fail(e, "unit " + u.str() + " is not in " + g.describe());
      return gamma(g, u);
    }
    if (e.head == "prod") {
      std::vector<MvAlgebra> fs;
      for (const auto& a : e.args) fs.push_back(elaborate_algebra(a));
      return MvAlgebra::product(fs);
    }
    detail::elab_fail(e, "expected an algebra (chain, boolean, interval_q, gamma, prod)");
  });
}

/// pmv(A) for a product-closed carrier A with unit 1, or pmv(R) for a ring literal R.
inline PmvAlgebra elaborate_pmv(const Expr& e) {
  if (e.kind != Expr::Kind::Call || e.head != "pmv") detail::elab_fail(e, "expected pmv(...)");
  const Expr& inner = e.args[0];
  return detail::elaborating(e, [&]() -> PmvAlgebra {
    if (inner.kind == Expr::Kind::Call && (inner.head == "integers" || inner.head == "rationals" || inner.head == "localized"))
      return gamma_ring(elaborate_ring(inner));
    return make_pmv(elaborate_algebra(inner));
  });
}

/// module(scalars=P, group=G, unit=u), module(scalars=P, carrier=A[, route=(...)]),
/// or a bare algebra, read as a module over pmv(boolean).
inline MvModule elaborate_module(const Expr& e) {
  if (e.kind == Expr::Kind::Call && e.head != "module") {
    MvAlgebra a = elaborate_algebra(e);
    return detail::elaborating(e, [&] { return make_module(PmvAlgebra(), a); });
  }
  if (e.kind != Expr::Kind::Call) detail::elab_fail(e, "expected a module");
  const PmvAlgebra p = elaborate_pmv(*e.arg("scalars"));
  const Expr* group = e.arg("group");
  const Expr* unit = e.arg("unit");
  const Expr* carrier = e.arg("carrier");
  const Expr* route = e.arg("route");
  return detail::elaborating(e, [&]() -> MvModule {
    MvAlgebra a;
    if (carrier) {
      if (group || unit) detail::elab_fail(e, "give either carrier= or group= and unit=, not both");
      a = elaborate_algebra(*carrier);
    } else {
      if (!group || !unit) detail::elab_fail(e, "module needs group= and unit= (or carrier=)");
      RationalSubgroup g = elaborate_group(*group);
      const Rational& u = detail::expect_number(*unit, "a rational unit");
      if (u.sign() <= 0 || !g.contains(u)) detail::elab_fail(e, "unit " + u.str() + " is not a positive element of " + g.describe());
      a = gamma(g, u);
    }
    if (!route) return make_module(p, a);
    if (route->kind != Expr::Kind::Tuple) detail::elab_fail(e, "route must be a tuple of indices");
    std::vector<std::size_t> r;
    for (const auto& x : route->args) {
      const Rational& q = x.number;
      if (!q.is_integer() || q.sign() < 0) detail::elab_fail(e, "route indices must be non-negative integers");
      r.push_back(static_cast<std::size_t>(q.num()));
    }
    return make_module(p, a, r);
  });
}

/// hom(source=M, target=N[, index=k]): the k-th module hom M -> N (default 0).
inline ModuleHom elaborate_hom(const Expr& e, const Budget& budget = {}) {
  if (e.kind != Expr::Kind::Call || e.head != "hom") detail::elab_fail(e, "expected hom(source=..., target=...)");
  const MvModule src = elaborate_module(*e.arg("source"));
  const MvModule tgt = elaborate_module(*e.arg("target"));
  std::size_t k = 0;
  if (const Expr* idx = e.arg("index")) {
    const Rational& q = detail::expect_number(*idx, "an index");
    if (!q.is_integer() || q.sign() < 0) detail::elab_fail(e, "index must be a non-negative integer");
    k = static_cast<std::size_t>(q.num());
  }
  auto homs = detail::elaborating(e, [&] { return module_hom_all(src, tgt, budget); });
  if (homs.empty()) detail::elab_fail(e, "no module homomorphism " + src.describe() + " -> " + tgt.describe());
  if (k >= homs.size())
    detail::elab_fail(e, "index " + std::to_string(k) + " out of range; there are " + std::to_string(homs.size()) + " homs");
  return homs[k];
}

inline MvAlgebra parse_algebra(std::string_view text) { return elaborate_algebra(parse_expr(text)); }
inline PmvAlgebra parse_pmv(std::string_view text) { return elaborate_pmv(parse_expr(text)); }
inline MvModule parse_module(std::string_view text) { return elaborate_module(parse_expr(text)); }

}  // namespace mvlab
