#pragma once

// Formal divisor calculus on Hilb^2(S).
//
// Pic(Hilb^2 S) = Pic(S) + (1/2)Z T, where T is the exceptional divisor of the
// Chow map. Quartic products follow five rules for surface-induced divisors
// A, B, C, D:
//   A.B.C.D = (A.B)(C.D) + (A.C)(B.D) + (A.D)(B.C)
//   A.B.C.T = 0
//   A.B.T.T = -8 (A.B)
//   A.T.T.T =  8 (A.K)
//   T.T.T.T = -8 (K^2 + c2)
// and are extended multilinearly.

#include <cstdint>

#include "spinpoly/lattice.hpp"

namespace spinpoly {

struct Hilb2Divisor {
  LatticeClass surface;  // the divisor induced from S
  Rational t;            // coefficient of T

  static Hilb2Divisor from_surface(const LatticeClass& a) { return {a, Rational(0)}; }
  static Hilb2Divisor exceptional(const Rational& coeff = Rational(1)) { return {LatticeClass(), coeff}; }

  Hilb2Divisor& operator+=(const Hilb2Divisor& o) {
    surface += o.surface;
    t += o.t;
    return *this;
  }
  friend Hilb2Divisor operator+(Hilb2Divisor a, const Hilb2Divisor& b) { return a += b; }
  friend Hilb2Divisor operator*(const Rational& s, Hilb2Divisor a) {
    a.surface *= s;
    a.t *= s;
    return a;
  }
  friend bool operator==(const Hilb2Divisor& a, const Hilb2Divisor& b) { return a.surface == b.surface && a.t == b.t; }
};

Rational quartic(const Hilb2Divisor& a, const Hilb2Divisor& b, const Hilb2Divisor& c, const Hilb2Divisor& d,
                 const LatticeClass& K, std::int64_t c2);

/// (A + xF + yT)^3 . F expanded through quartic(). Requires F^2 = 0 and
/// F.K = 0 (std::invalid_argument otherwise).
Rational g_cubed_f_symbolic(const LatticeClass& A, const Rational& x, const Rational& y, const LatticeClass& K,
                            std::int64_t c2, const LatticeClass& F);

/// 3(A.A)(A.F) + 6x(A.F)^2 - 24y^2(A.F).
Rational g_cubed_f_closed_form(const LatticeClass& A, const Rational& x, const Rational& y, const LatticeClass& F);

/// Residues s_p = d mod 2p and s_q = d mod 2q.
struct FiberResidues {
  std::int64_t s_p = 0;
  std::int64_t s_q = 0;
};
FiberResidues fiber_residues(std::int64_t d, const SurfaceParams& params);

/// Type-1 coefficient
///   phi1 = (2dpq - d^2)/4 - (2q s_q - s_q^2)/4 - (2p s_p - s_p^2)/4.
/// Throws std::invalid_argument unless d is odd and positive.
Rational phi1_of_d(std::int64_t d, const SurfaceParams& params);

/// The alternative phi1 expression written through delta_p, delta_q:
///   delta_p q (delta_p q + q - d) + delta_q p (delta_q p + p - d) + d^2/4 + (d/2)(pq - p - q),
/// evaluated with delta_p = floor(d/2q) and with delta_p = floor(d/2q) - 1.
struct Phi1DeltaReport {
  std::int64_t d = 0;
  Rational reference;         // phi1_of_d
  Rational with_floor;        // delta = floor(d / 2q), floor(d / 2p)
  Rational with_floor_minus;  // delta = floor(...) - 1
  bool floor_matches = false;
  bool floor_minus_matches = false;
};
Phi1DeltaReport phi1_corollary48(std::int64_t d, const SurfaceParams& params);

/// Type-2 coefficient alpha (q - beta) pq for alpha q < beta p; zero when
/// alpha beta = 0. Throws std::invalid_argument outside that normalization or
/// for negative/out-of-range indices.
std::int64_t phi2(std::int64_t alpha, std::int64_t beta, const SurfaceParams& params);

/// phi2 evaluated in whichever orientation of (p, alpha) <-> (q, beta)
/// satisfies the normalization: beta (p - alpha) pq when alpha q > beta p.
std::int64_t phi2_symmetric(std::int64_t alpha, std::int64_t beta, const SurfaceParams& params);

/// mu(A)^3 on the type-1 family: 3(A.F)(A.A) + 6 phi1 (A.F)(A.k)^2.
Rational mu_cubed_type1(const LatticeClass& A, std::int64_t d, const SurfaceParams& params);

/// mu(A)^3 on the type-2 family: 3 phi2 (A.F)(A.k)^2.
Rational mu_cubed_type2(const LatticeClass& A, std::int64_t alpha, std::int64_t beta, const SurfaceParams& params);

}  // namespace spinpoly
