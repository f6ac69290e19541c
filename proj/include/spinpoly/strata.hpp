#pragma once

// The stratum square and everything indexed by it.
//
// For S(p,q) with p odd the square is {0 <= sigma <= (p-1)/2, 0 <= tau <= (q-1)/2}.
// It is in bijection with the type-1 components M(alpha, beta) and with the
// type-2 components N(alpha, beta); each cell carries the degree d, the
// residues s_p, s_q, the auxiliary sums T, S, R and the weights phi1, phi2,
// Phi = 12 phi1 + 6 phi2.

#include <compare>
#include <cstdint>
#include <vector>

#include "spinpoly/lattice.hpp"

namespace spinpoly {

struct StratumIndex {
  std::int64_t sigma = 0;
  std::int64_t tau = 0;
  auto operator<=>(const StratumIndex&) const = default;
};

/// All cells of the square in lexicographic order.
std::vector<StratumIndex> stratum_square(const SurfaceParams& params);
bool in_square(const StratumIndex& s, const SurfaceParams& params);

struct ComponentIndex {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  /// Type-2 only: alpha beta = 0, no component exists and phi2 vanishes.
  bool degenerate = false;
  bool operator==(const ComponentIndex&) const = default;
};

/// (alpha - 1) q + (beta - 1) p even, alpha, beta >= 0, alpha/p + beta/q < 1.
bool is_type1_index(std::int64_t alpha, std::int64_t beta, const SurfaceParams& params);
/// alpha q + beta p odd, alpha, beta >= 0, alpha/p + beta/q < 1.
bool is_type2_index(std::int64_t alpha, std::int64_t beta, const SurfaceParams& params);

/// Preimage of s under the type-1 bijection: (2 sigma + 1, 2 tau + 1) or
/// (p - 2 sigma - 1, q - 2 tau - 1), whichever is a type-1 index.
ComponentIndex type1_index(const StratumIndex& s, const SurfaceParams& params);

/// Preimage of s under the type-2 bijection: (2 sigma + 1, q - 2 tau - 1) or
/// (p - 2 sigma - 1, 2 tau + 1). At the corner sigma = (p-1)/2, tau = (q-1)/2
/// with p, q both odd neither candidate satisfies the strict inequality; the
/// cell is reported as the degenerate index (0, 0).
ComponentIndex type2_index(const StratumIndex& s, const SurfaceParams& params);

/// Forward maps of the two bijections (component index to cell).
StratumIndex type1_cell(std::int64_t alpha, std::int64_t beta, const SurfaceParams& params);
StratumIndex type2_cell(std::int64_t alpha, std::int64_t beta, const SurfaceParams& params);

struct StratumData {
  StratumIndex index;
  ComponentIndex type1;
  ComponentIndex type2;
  std::int64_t d = 0;  // pq - alpha q - beta p of the type-1 index
  std::int64_t s_p = 0, s_q = 0;
  std::int64_t T_p = 0, T_q = 0;
  std::int64_t S_p = 0, S_q = 0;
  std::int64_t R = 0;
  Rational phi1;
  std::int64_t phi2 = 0;
  std::int64_t Phi = 0;  // 12 phi1 + 6 phi2
  /// 2 sigma q + 2 tau p < pq - p - q, the first branch of the piecewise forms.
  bool first_branch = false;
};

StratumData stratum_data(const StratumIndex& s, const SurfaceParams& params);

/// T(sigma) = (2 sigma + 1)(2m - 2 sigma - 1) for modulus m = p or q.
std::int64_t t_value(std::int64_t index, std::int64_t modulus);
/// S = 2 m s - s^2.
std::int64_t s_value(std::int64_t residue, std::int64_t modulus);

/// The piecewise d of the cell: first branch pq - (2s+1)q - (2t+1)p; the else
/// branch as printed (-pq + (2s+1)q - (2t+1)p) and in absolute-value form.
struct DCrossCheck {
  std::int64_t bijection = 0;
  bool first_branch = false;
  std::int64_t piecewise_printed = 0;
  std::int64_t absolute = 0;  // |pq - p - q - 2 sigma q - 2 tau p|
};
DCrossCheck d_cross_check(const StratumIndex& s, const SurfaceParams& params);

/// Phi expanded through T, S, R. The printed variant carries -3(p^2 T_q + S_q),
/// the corrected one +3(p^2 T_q - S_q); reference is 12 phi1 + 6 phi2.
struct PhiExpansion {
  std::int64_t printed = 0;
  std::int64_t corrected = 0;
  std::int64_t reference = 0;
  bool corrected_matches() const { return corrected == reference; }
  bool printed_matches() const { return printed == reference; }
};
PhiExpansion phi_expanded(const StratumIndex& s, const SurfaceParams& params);

/// n = l pq + A q + B p with 0 <= A < p, 0 <= B < q.
struct NDecomposition {
  std::int64_t n = 0;
  std::int64_t l = 0;
  std::int64_t A = 0;
  std::int64_t B = 0;
};
/// Throws std::invalid_argument for n <= 0.
NDecomposition decompose(std::int64_t n, const SurfaceParams& params);

/// H(sigma, A): 1/2 if sigma >= m - A, -1/2 if sigma >= A, 0 otherwise
/// (first match). Throws std::logic_error if both conditions hold.
Rational h_correction(std::int64_t index, std::int64_t residue, std::int64_t modulus);
/// c(sigma, (m-1)/2): 1 when 2 sigma = m - 1, else 2.
std::int64_t c_factor(std::int64_t index, std::int64_t modulus);

/// Signed multiplicity m(sigma, tau, n) = (l + 1 + H_p + H_q) c_p c_q.
std::int64_t multiplicity(const StratumIndex& s, std::int64_t n, const SurfaceParams& params);
std::int64_t multiplicity(const StratumIndex& s, const NDecomposition& dec, const SurfaceParams& params);

/// Stratum data for every cell of one surface, computed once.
class StrataTable {
 public:
  explicit StrataTable(const SurfaceParams& params);

  const SurfaceParams& params() const { return params_; }
  const std::vector<StratumData>& cells() const { return cells_; }

 private:
  SurfaceParams params_;
  std::vector<StratumData> cells_;
};

}  // namespace spinpoly
