#pragma once

// Assembly of the Spin polynomial coefficients
//     q_S(n) = a(n) Q^2 + b(n) Q k^2 + c(n) k^4
// from the stratum square: sum_m = sum m(sigma,tau,n), a = 3 sum_m,
// b = sum m Phi.

#include <array>
#include <cstdint>
#include <optional>

#include "spinpoly/lattice.hpp"
#include "spinpoly/strata.hpp"

namespace spinpoly {

struct InvariantPolynomial {
  SurfaceParams params;
  std::int64_t n = 0;
  std::int64_t sum_m = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  /// Known only for p = q = 1, where c(n) = 21n.
  std::optional<std::int64_t> c_known;
};

InvariantPolynomial coefficients(std::int64_t n, const SurfaceParams& params);
InvariantPolynomial coefficients(std::int64_t n, const StrataTable& table);

/// 2p^2q^2 - 2p^2 - 2q^2 - 1.
std::int64_t closed_form_b_slope(const SurfaceParams& params);

struct ClosedFormReport {
  InvariantPolynomial computed;
  std::int64_t expected_a = 0;
  std::int64_t expected_b = 0;
  std::int64_t delta_a() const { return computed.a - expected_a; }
  std::int64_t delta_b() const { return computed.b - expected_b; }
  bool ok() const { return delta_a() == 0 && delta_b() == 0; }
};

ClosedFormReport closed_form_check(std::int64_t n, const SurfaceParams& params);
ClosedFormReport closed_form_check(std::int64_t n, const StrataTable& table);

/// Symmetrized quartic forms on four classes, normalized so that
/// (Q^2 + Qk^2 + k^4)(A,A,A,A) = (A.A)^2 + (A.A)(A.k)^2 + (A.k)^4.
struct SymmetricForms {
  Rational q2;   // (1/3) sum over the 3 pairings of (xi.xj)(xk.xl)
  Rational qk2;  // (1/6) sum over the 6 pairs {i,j} of (xi.xj)(k.xk)(k.xl)
  Rational k4;   // prod (k.xi)
};

SymmetricForms symmetric_forms(const std::array<LatticeClass, 4>& x, const LatticeClass& k);

struct QEvaluation {
  SymmetricForms forms;
  InvariantPolynomial coeffs;
  /// a Q^2 + b Qk^2, plus c k^4 when c(n) is known.
  Rational value;
  /// k^4 does not vanish and c(n) is unknown: value omits that term.
  bool c_term_unknown = false;
};

QEvaluation evaluate_q(std::int64_t n, const std::array<LatticeClass, 4>& x, const SurfaceParams& params);

/// Recomputes q(A,A,A,F) from the mu^3 formulas of both families, weighted by
/// the multiplicities, and compares with a (A.A)(A.F) + b (1/2)(A.F)(A.k)^2.
struct MuRouteReport {
  Rational stratum_route;
  Rational coefficient_route;
  bool agree() const { return stratum_route == coefficient_route; }
};

/// Throws std::invalid_argument when A.F = 0.
MuRouteReport mu_route_check(std::int64_t n, const LatticeClass& A, const SurfaceParams& params);

}  // namespace spinpoly
