#pragma once

// The verify suite: every exact identity the library relies on, swept over a
// grid of surfaces, plus non-blocking diagnostics and the errata ledger.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spinpoly/diagnostics.hpp"
#include "spinpoly/errata.hpp"
#include "spinpoly/lattice.hpp"

namespace spinpoly {

enum class VerifyDepth { Fast, Full };

struct VerifyConfig {
  VerifyDepth depth = VerifyDepth::Fast;
  std::uint64_t seed = 1;
  std::int64_t max_pq() const { return depth == VerifyDepth::Fast ? 15 : 25; }
  std::int64_t n_max() const { return depth == VerifyDepth::Fast ? 200 : 1000; }
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;
  std::string detail;  // first failure, or a short summary
};

/// Every (p, q) with 1 <= p, q <= max_pq and gcd 1, in input order (p major);
/// each is normalized by SurfaceParams, so (2,3) and (3,2) both appear.
std::vector<SurfaceParams> coprime_grid(std::int64_t max_pq);

CheckResult check_stratum_sum(std::int64_t max_pq, std::int64_t n_max);
CheckResult check_closed_forms(std::int64_t max_pq, std::int64_t n_max);
CheckResult check_bijections(std::int64_t max_pq);
CheckResult check_phi_dual_route(std::int64_t max_pq);
CheckResult check_d_dual_route(std::int64_t max_pq);
CheckResult check_phi1_delta(std::int64_t max_pq);
CheckResult check_g_cubed(std::size_t samples, std::mt19937_64& rng);
CheckResult check_vertical_chi(std::int64_t max_pq, std::int64_t l_bound);
CheckResult check_k_perp(std::int64_t max_pq);
CheckResult check_transvection(std::size_t samples, std::mt19937_64& rng);
CheckResult check_mu_route(std::size_t samples, std::int64_t max_pq, std::mt19937_64& rng);
/// Integral M with |coords| <= coord_bound, M.K_S = 0 and c1 - 2M in the wall
/// range, for c1 = K_S + 2nk with 1 <= n <= n_max, over the given surfaces.
CheckResult check_orthogonal_walls(std::int64_t coord_bound, std::int64_t n_max,
                                   const std::vector<SurfaceParams>& surfaces);
CheckResult check_walls_oracle(std::size_t fixtures, std::mt19937_64& rng);

struct VerifyReport {
  VerifyConfig config;
  std::vector<CheckResult> checks;
  std::vector<IdentityDiagnostic> diagnostics;
  std::vector<ErrataLedgerEntry> ledger;
  bool all_passed() const;
};

/// Surfaces and range used for the summation-identity diagnostics.
std::vector<SurfaceParams> diagnostic_surfaces();
inline constexpr std::int64_t kDiagnosticNMax = 50;
std::vector<IdentityDiagnostic> collect_diagnostics(const std::vector<SurfaceParams>& surfaces, std::int64_t n_max);

VerifyReport run_verify(const VerifyConfig& config);

}  // namespace spinpoly
