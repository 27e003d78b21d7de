#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvlab {

enum class errc {
  invalid_generator,
  precondition,
  invalid_unit,
  membership,
  unsupported_carrier,
  not_product_closed,
  invalid_hom,
  not_a_module,
  hypothesis_not_met,
  universal_property_violation,
  restriction,
  composition,
  syntax,
  elaboration,
  overflow,
  division_by_zero,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_generator: return "invalid-generator";
    case errc::precondition: return "precondition";
    case errc::invalid_unit: return "invalid-unit";
    case errc::membership: return "membership";
    case errc::unsupported_carrier: return "unsupported-carrier";
    case errc::not_product_closed: return "not-product-closed";
    case errc::invalid_hom: return "invalid-hom";
    case errc::not_a_module: return "not-a-module";
    case errc::hypothesis_not_met: return "hypothesis-not-met";
    case errc::universal_property_violation: return "universal-property-violation";
    case errc::restriction: return "restriction";
    case errc::composition: return "composition";
    case errc::syntax: return "syntax";
    case errc::elaboration: return "elaboration";
    case errc::overflow: return "overflow";
    case errc::division_by_zero: return "division-by-zero";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Parse failure; `position()` is a byte offset into the input text.
class syntax_error : public error {
 public:
  syntax_error(std::size_t pos, const std::string& what)
      : error(errc::syntax, what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace mvlab
