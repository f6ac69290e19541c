#include "spinpoly/hilb2_expr.hpp"

#include <array>
#include <cctype>
#include <vector>

namespace spinpoly {

Hilb2ParseError::Hilb2ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::map<std::string, Hilb2Divisor>& names) : text_(text), names_(names) {}

  std::vector<Hilb2Divisor> product() {
    std::vector<Hilb2Divisor> factors{divisor()};
    while (peek() == '.') {
      ++pos_;
      factors.push_back(divisor());
    }
    expect_end();
    if (factors.size() != 4)
      throw Hilb2ParseError("expected a product of 4 divisors, got " + std::to_string(factors.size()), 0);
    return factors;
  }

  Hilb2Divisor whole_divisor() {
    Hilb2Divisor d = divisor();
    expect_end();
    return d;
  }

  std::string name() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start])))
      throw Hilb2ParseError("expected a name", start);
    return text_.substr(start, pos_ - start);
  }

  void finish() { expect_end(); }

  void expect(char c) {
    if (peek() != c) throw Hilb2ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect_end() {
    if (peek() != '\0') throw Hilb2ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
  }

  Hilb2Divisor divisor() {
    Rational sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (text_[pos_] == '-') sign = -1;
      ++pos_;
    }
    Hilb2Divisor acc = sign * term();
    while (peek() == '+' || peek() == '-') {
      const Rational s = text_[pos_] == '-' ? Rational(-1) : Rational(1);
      ++pos_;
      acc += s * term();
    }
    return acc;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Hilb2Divisor term() {
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      std::string num = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.empty()) throw Hilb2ParseError("expected a denominator", pos_);
        if (den.find_first_not_of('0') == std::string::npos) throw Hilb2ParseError("zero denominator", start);
        num += "/" + den;
      }
      coeff = Rational(num);
      coeff.canonicalize();
      if (peek() == '*') ++pos_;
    }
    return coeff * atom();
  }

  Hilb2Divisor atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Hilb2Divisor d = divisor();
      expect(')');
      return d;
    }
    if (c == '[') return Hilb2Divisor::from_surface(vector_literal());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      const std::string id = name();
      if (id == "T") return Hilb2Divisor::exceptional();
      const auto it = names_.find(id);
      if (it == names_.end()) throw Hilb2ParseError("unknown name '" + id + "'", start);
      return it->second;
    }
    if (c == '\0') throw Hilb2ParseError("unexpected end of input", pos_);
    throw Hilb2ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  LatticeClass vector_literal() {
    expect('[');
    LatticeClass::Coords coords;
    for (int i = 0; i < kRank; ++i) {
      if (i > 0) expect(',');
      skip_ws();
      const std::size_t start = pos_;
      Rational sign = 1;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        if (text_[pos_] == '-') sign = -1;
        ++pos_;
      }
      std::string num = digits();
      if (num.empty()) throw Hilb2ParseError("expected a coordinate", start);
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.empty() || den.find_first_not_of('0') == std::string::npos)
          throw Hilb2ParseError("bad denominator", pos_);
        num += "/" + den;
      }
      Rational v(num);
      v.canonicalize();
      coords[static_cast<std::size_t>(i)] = sign * v;
    }
    expect(']');
    return LatticeClass(coords);
  }

  const std::string& text_;
  const std::map<std::string, Hilb2Divisor>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Hilb2Context::Hilb2Context(const SurfaceParams& params) : params_(params) {
  const auto dc = distinguished_classes(params);
  names_.emplace("F", Hilb2Divisor::from_surface(dc.F));
  names_.emplace("Fp", Hilb2Divisor::from_surface(dc.F_p));
  names_.emplace("Fq", Hilb2Divisor::from_surface(dc.F_q));
  names_.emplace("K", Hilb2Divisor::from_surface(dc.K_S));
  names_.emplace("k", Hilb2Divisor::from_surface(dc.k));
  names_.emplace("f", Hilb2Divisor::from_surface(dc.f));
  for (int i = 0; i < kRank; ++i)
    names_.emplace("e" + std::to_string(i), Hilb2Divisor::from_surface(LatticeClass::basis(i)));
}

void Hilb2Context::define(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw Hilb2ParseError("expected NAME=divisor", assignment.size());
  // Blank out the other side so error positions refer to the whole text.
  const std::string lhs = assignment.substr(0, eq) + std::string(assignment.size() - eq, ' ');
  const std::string rhs = std::string(eq + 1, ' ') + assignment.substr(eq + 1);
  Parser np(lhs, names_);
  const std::string id = np.name();
  np.finish();
  if (id == "T") throw Hilb2ParseError("T cannot be redefined", 0);
  names_[id] = Parser(rhs, names_).whole_divisor();
}

Hilb2Divisor Hilb2Context::parse_divisor(const std::string& text) const { return Parser(text, names_).whole_divisor(); }

Rational Hilb2Context::evaluate(const std::string& product) const {
  const auto f = Parser(product, names_).product();
  return quartic(f[0], f[1], f[2], f[3], distinguished_classes(params_).K_S, kEulerNumber);
}

}  // namespace spinpoly
