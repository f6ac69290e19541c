#include "spinpoly/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace spinpoly {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r{mpz_class(std::to_string(num)), mpz_class(std::to_string(den))};
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::int64_t to_int64(const Rational& x) {
  if (!is_integer(x)) throw std::domain_error("value " + x.get_str() + " is not an integer");
  const mpz_class& z = x.get_num();
  if (!z.fits_slong_p()) throw std::domain_error("value " + z.get_str() + " overflows int64");
  return static_cast<std::int64_t>(z.get_si());
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string s = text.substr(b, e - b);
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("malformed rational '" + text + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::int64_t euclid_mod(std::int64_t a, std::int64_t m) {
  if (m == 0) throw std::invalid_argument("modulus zero");
  if (m < 0) m = -m;
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw std::invalid_argument("floor_div requires a positive divisor");
  return (a - euclid_mod(a, b)) / b;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace spinpoly
