#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace spinpoly {

using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

bool is_integer(const Rational& x);

/// Converts an integral rational to int64; throws std::domain_error when the
/// value is not an integer or does not fit.
std::int64_t to_int64(const Rational& x);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& x);

/// Parses "n", "-n", "n/d" (surrounding whitespace allowed).
Rational parse_rational(const std::string& text);

/// Remainder in [0, |m|).
std::int64_t euclid_mod(std::int64_t a, std::int64_t m);

/// Floor of a / b for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace spinpoly
