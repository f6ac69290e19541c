#pragma once

// Text front end for the Hilb^2 quartic form.
//
//   product := divisor '.' divisor '.' divisor '.' divisor
//   divisor := ['+'|'-'] term (('+'|'-') term)*
//   term    := [rational ['*']] atom
//   atom    := 'T' | name | '[' c0 ',' ... ',' c9 ']' | '(' divisor ')'
//
// Built-in names: F, Fp, Fq, K (= K_S), k, f, e0..e9. Further names come from
// definitions "NAME=divisor". Whitespace is ignored.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

#include "spinpoly/hilb2.hpp"

namespace spinpoly {

class Hilb2ParseError : public std::invalid_argument {
 public:
  Hilb2ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class Hilb2Context {
 public:
  explicit Hilb2Context(const SurfaceParams& params);

  const SurfaceParams& params() const { return params_; }
  /// Parses "NAME=divisor"; later definitions may use earlier ones.
  void define(const std::string& assignment);
  Hilb2Divisor parse_divisor(const std::string& text) const;
  /// Value of a four-fold product with K = K_S and c2 = 12.
  Rational evaluate(const std::string& product) const;

 private:
  SurfaceParams params_;
  std::map<std::string, Hilb2Divisor> names_;
};

}  // namespace spinpoly
