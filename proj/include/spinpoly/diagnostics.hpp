#pragma once

// Reports for the three intermediate summation identities used on the way to
// the closed forms of a(n), b(n):
//   (S)  3 sum m S_q               = n(2q^2+1) + [case term in B]
//   (T)  3 sum m (p^2 T_q - S_q)   = n(2q^2+1)(p^2-1) + X_q
//   (R)  6pq sum m R               = n(p^2-1)(q^2-1) - X_p - X_q
// The case terms sum "S_q(tau)" over tau alone. Two readings are evaluated:
// FixedSigma takes the value at sigma = 0 (S_q only depends on tau because
// 2 sigma q vanishes mod 2q), ColumnSum adds the whole column over sigma.
// These reports never fail a run; the closed-form check is the binding one.

#include <cstdint>
#include <string>
#include <vector>

#include "spinpoly/lattice.hpp"

namespace spinpoly {

enum class SumReading { FixedSigma, ColumnSum };

std::string to_string(SumReading r);

struct IdentityDiagnostic {
  std::string identity;  // "sum-S", "sum-T", "sum-R"
  std::int64_t p = 0, q = 0, n = 0;
  SumReading reading = SumReading::FixedSigma;
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
  Rational difference() const { return lhs - rhs; }
};

std::vector<IdentityDiagnostic> sum_identity_diagnostics(const SurfaceParams& params, std::int64_t n,
                                                         SumReading reading);

/// True when S_q (resp. S_p) is constant along every column (row) of the square.
bool s_q_depends_only_on_tau(const SurfaceParams& params);
bool s_p_depends_only_on_sigma(const SurfaceParams& params);

}  // namespace spinpoly
