#pragma once

// Rank-10 model of the second cohomology of a Dolgachev surface S(p,q).
//
// H^2(S;Z) is modelled as Z^{1,9} with Gram matrix diag(+1,-1,...,-1). The
// fibre ray is generated by the primitive isotropic class
//     f = 3e0 - e1 - ... - e9,
// which is characteristic, so every odd multiple of f is characteristic too.
// All multiples of the fibre (F, F_p, F_q, K_S, c1) are expressed through f.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spinpoly/rational.hpp"

namespace spinpoly {

inline constexpr int kRank = 10;
/// Signature of S; b2+ = 1 and rank 10.
inline constexpr int kSignature = -8;
/// Euler number c2(S); Noether with K^2 = 0 and chi(O_S) = 1.
inline constexpr int kEulerNumber = 12;

/// Coprime multiplicities (p, q) of the two multiple fibres, normalized so
/// that p is odd.
class SurfaceParams {
 public:
  /// Throws std::invalid_argument unless p, q >= 1 and gcd(p, q) = 1.
  SurfaceParams(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t pq() const { return p_ * q_; }
  /// True when the constructor exchanged the arguments to make p odd.
  bool swapped() const { return swapped_; }

  /// Coefficient of k in K_S: pq - p - q (always odd).
  std::int64_t canonical_multiple() const { return p_ * q_ - p_ - q_; }

  bool operator==(const SurfaceParams&) const = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
  bool swapped_ = false;
};

/// Rational vector over the basis e0..e9.
class LatticeClass {
 public:
  using Coords = std::array<Rational, kRank>;

  LatticeClass();
  explicit LatticeClass(Coords coords);

  static LatticeClass basis(int i);
  static LatticeClass from_ints(const std::array<std::int64_t, kRank>& v);

  const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const Coords& coords() const { return coords_; }

  bool is_integral() const;
  bool is_zero() const;

  /// Coordinates as int64; throws std::domain_error when not integral.
  std::array<std::int64_t, kRank> to_ints() const;

  LatticeClass& operator+=(const LatticeClass& o);
  LatticeClass& operator-=(const LatticeClass& o);
  LatticeClass& operator*=(const Rational& s);

  friend LatticeClass operator+(LatticeClass a, const LatticeClass& b) { return a += b; }
  friend LatticeClass operator-(LatticeClass a, const LatticeClass& b) { return a -= b; }
  friend LatticeClass operator*(const Rational& s, LatticeClass a) { return a *= s; }
  friend LatticeClass operator-(LatticeClass a) { return a *= Rational(-1); }
  friend bool operator==(const LatticeClass& a, const LatticeClass& b) { return a.coords_ == b.coords_; }

  /// "(c0,c1,...,c9)"
  std::string to_string() const;

 private:
  Coords coords_;
};

/// Intersection pairing under diag(+1,-1,...,-1).
Rational pair(const LatticeClass& x, const LatticeClass& y);
Rational self_intersection(const LatticeClass& x);

/// Parses "c0,c1,...,c9" (optionally wrapped in parentheses); entries may be
/// rationals "a/b".
LatticeClass parse_lattice_class(const std::string& text);

/// The primitive isotropic fibre generator f = 3e0 - e1 - ... - e9.
LatticeClass fiber_generator();

struct DistinguishedClasses {
  LatticeClass f;    // primitive generator of the fibre ray
  LatticeClass k;    // = f
  LatticeClass F;    // pq k
  LatticeClass F_p;  // q k
  LatticeClass F_q;  // p k
  LatticeClass K_S;  // (pq - p - q) k = F - F_p - F_q

  static constexpr int sign_X = kSignature;
  static constexpr int c2_S = kEulerNumber;

  /// c1(n) = K_S + 2n k.
  LatticeClass c1(std::int64_t n) const;
};

DistinguishedClasses distinguished_classes(const SurfaceParams& params);

/// T_y(x) = x + (x.y) F on k-perp. Throws std::domain_error when x or y is
/// not orthogonal to the fibre.
LatticeClass transvection(const LatticeClass& y, const LatticeClass& x, const SurfaceParams& params);

/// Dense row-major integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r * c), 0) {}
  static IntMatrix identity(int n);

  std::int64_t& operator()(int i, int j) { return data[static_cast<std::size_t>(i * cols + j)]; }
  std::int64_t operator()(int i, int j) const { return data[static_cast<std::size_t>(i * cols + j)]; }
  bool operator==(const IntMatrix&) const = default;
};

/// Result of reducing an integer row vector r by unimodular column operations:
/// r * transform = (g, 0, ..., 0) with g = gcd(r) >= 0, and inverse is the
/// exact integer inverse of transform.
struct UnimodularReduction {
  std::int64_t gcd = 0;
  IntMatrix transform;
  IntMatrix inverse;
};

UnimodularReduction reduce_row(const std::vector<std::int64_t>& row);

/// Integral basis (as columns, 10 x 9) of {x in Z^10 : x.f = 0}.
IntMatrix k_perp_basis();

/// Gram matrix of k-perp modulo its radical Z f, in an integral basis.
/// The model lattice does not depend on (p, q); the argument is accepted so
/// callers can sweep it.
IntMatrix k_perp_quotient_gram(const SurfaceParams& params);

/// Exact determinant (fraction-free Bareiss elimination).
std::int64_t determinant(const IntMatrix& m);
bool has_even_diagonal(const IntMatrix& m);
/// Leading principal minors of -m all positive.
bool is_negative_definite(const IntMatrix& m);

}  // namespace spinpoly
