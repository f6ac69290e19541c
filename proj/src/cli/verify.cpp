#include "spinpoly/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

#include "spinpoly/hilb2.hpp"
#include "spinpoly/invariants.hpp"
#include "spinpoly/strata.hpp"
#include "spinpoly/vertical.hpp"
#include "spinpoly/walls.hpp"
#include "spinpoly/walls_oracle.hpp"

namespace spinpoly {

namespace {

std::string pq_str(const SurfaceParams& s) {
  return "(p,q)=(" + std::to_string(s.p()) + "," + std::to_string(s.q()) + ")";
}

// Per-surface outcome: number of cases and the first failure, if any.
struct Partial {
  std::uint64_t cases = 0;
  std::string failure;
};

// Runs fn on every surface, in parallel, and merges in grid order.
CheckResult sweep(const std::string& name, const std::vector<SurfaceParams>& grid,
                  const std::function<Partial(const SurfaceParams&)>& fn) {
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Partial> parts(grid.size());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < grid.size(); i += workers) parts[i] = fn(grid[i]);
    }));
  for (auto& j : jobs) j.get();

  CheckResult r{name, true, 0, ""};
  for (const auto& p : parts) {
    r.cases += p.cases;
    if (!p.failure.empty() && r.passed) {
      r.passed = false;
      r.detail = p.failure;
    }
  }
  if (r.passed) r.detail = std::to_string(grid.size()) + " surfaces";
  return r;
}

LatticeClass random_integral(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::array<std::int64_t, kRank> v{};
  for (auto& x : v) x = dist(rng);
  return LatticeClass::from_ints(v);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  const int d = den(rng);
  return make_rational(num(rng), d);
}

LatticeClass random_k_perp(std::mt19937_64& rng, const IntMatrix& basis) {
  std::uniform_int_distribution<int> dist(-3, 3);
  std::array<std::int64_t, kRank> v{};
  for (int c = 0; c < basis.cols; ++c) {
    const int t = dist(rng);
    for (int r = 0; r < kRank; ++r) v[static_cast<std::size_t>(r)] += t * basis(r, c);
  }
  return LatticeClass::from_ints(v);
}

}  // namespace

std::vector<SurfaceParams> coprime_grid(std::int64_t max_pq) {
  std::vector<SurfaceParams> out;
  for (std::int64_t p = 1; p <= max_pq; ++p)
    for (std::int64_t q = 1; q <= max_pq; ++q)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

CheckResult check_stratum_sum(std::int64_t max_pq, std::int64_t n_max) {
  return sweep("stratum-sum", coprime_grid(max_pq), [n_max](const SurfaceParams& s) {
    Partial part;
    const auto cells = stratum_square(s);
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const NDecomposition dec = decompose(n, s);
      std::int64_t sum = 0;
      for (const auto& c : cells) sum += multiplicity(c, dec, s);
      ++part.cases;
      if (sum != n && part.failure.empty())
        part.failure = pq_str(s) + " n=" + std::to_string(n) + ": sum m = " + std::to_string(sum);
    }
    return part;
  });
}

CheckResult check_closed_forms(std::int64_t max_pq, std::int64_t n_max) {
  return sweep("closed-forms", coprime_grid(max_pq), [n_max](const SurfaceParams& s) {
    Partial part;
    const StrataTable table(s);
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const ClosedFormReport r = closed_form_check(n, table);
      ++part.cases;
      if (!r.ok() && part.failure.empty())
        part.failure = pq_str(s) + " n=" + std::to_string(n) + ": a=" + std::to_string(r.computed.a) + " (want " +
                       std::to_string(r.expected_a) + "), b=" + std::to_string(r.computed.b) + " (want " +
                       std::to_string(r.expected_b) + ")";
    }
    return part;
  });
}

CheckResult check_bijections(std::int64_t max_pq) {
  return sweep("bijections", coprime_grid(max_pq), [](const SurfaceParams& s) {
    Partial part;
    std::int64_t weight = 0;
    auto fail = [&](const StratumIndex& c, const std::string& what) {
      if (part.failure.empty())
        part.failure = pq_str(s) + " cell (" + std::to_string(c.sigma) + "," + std::to_string(c.tau) + "): " + what;
    };
    for (const auto& c : stratum_square(s)) {
      ++part.cases;
      const StratumData sd = stratum_data(c, s);
      if (type1_cell(sd.type1.alpha, sd.type1.beta, s) != c) fail(c, "type-1 round trip");
      if (!sd.type2.degenerate && type2_cell(sd.type2.alpha, sd.type2.beta, s) != c) fail(c, "type-2 round trip");
      if (sd.d < 1 || sd.d >= 2 * s.pq() || sd.d % 2 == 0) fail(c, "d out of range");
      if (sd.s_p % 2 == 0 || sd.s_q % 2 == 0) fail(c, "even residue");
      weight += c_factor(c.sigma, s.p()) * c_factor(c.tau, s.q());
    }
    if (weight != s.pq() && part.failure.empty()) part.failure = pq_str(s) + ": sum c c = " + std::to_string(weight);
    return part;
  });
}

CheckResult check_phi_dual_route(std::int64_t max_pq) {
  return sweep("phi-dual-route", coprime_grid(max_pq), [](const SurfaceParams& s) {
    Partial part;
    for (const auto& c : stratum_square(s)) {
      ++part.cases;
      const PhiExpansion e = phi_expanded(c, s);
      if (!e.corrected_matches() && part.failure.empty())
        part.failure = pq_str(s) + ": corrected " + std::to_string(e.corrected) + " vs " + std::to_string(e.reference);
    }
    return part;
  });
}

CheckResult check_d_dual_route(std::int64_t max_pq) {
  return sweep("d-dual-route", coprime_grid(max_pq), [](const SurfaceParams& s) {
    Partial part;
    for (const auto& c : stratum_square(s)) {
      ++part.cases;
      const DCrossCheck d = d_cross_check(c, s);
      if (d.absolute != d.bijection && part.failure.empty())
        part.failure = pq_str(s) + ": |.| form " + std::to_string(d.absolute) + " vs " + std::to_string(d.bijection);
    }
    return part;
  });
}

CheckResult check_phi1_delta(std::int64_t max_pq) {
  return sweep("phi1-delta-route", coprime_grid(max_pq), [](const SurfaceParams& s) {
    Partial part;
    for (std::int64_t d = 1; d <= 4 * s.pq(); d += 2) {
      ++part.cases;
      const Phi1DeltaReport r = phi1_corollary48(d, s);
      const FiberResidues res = fiber_residues(d, s);
      const Rational gap = r.with_floor_minus - r.reference;
      const bool gap_ok = gap == make_rational(s.q() * res.s_q + s.p() * res.s_p) ||
                          gap == make_rational(-(s.q() * res.s_q + s.p() * res.s_p));
      if ((!r.floor_matches || !gap_ok) && part.failure.empty())
        part.failure = pq_str(s) + " d=" + std::to_string(d) + ": floor form " + to_string(r.with_floor) + " vs " +
                       to_string(r.reference) + ", shifted gap " + to_string(gap);
    }
    return part;
  });
}

CheckResult check_g_cubed(std::size_t samples, std::mt19937_64& rng) {
  CheckResult r{"g-cubed-f", true, 0, ""};
  std::uniform_int_distribution<int> pq_dist(1, 15);
  for (std::size_t i = 0; i < samples; ++i) {
    std::int64_t p = pq_dist(rng), q = pq_dist(rng);
    while (std::gcd(p, q) != 1) q = pq_dist(rng);
    const SurfaceParams s(p, q);
    const auto dc = distinguished_classes(s);
    const LatticeClass A = random_integral(rng, 6);
    const Rational x = random_rational(rng), y = random_rational(rng);
    const Rational lhs = g_cubed_f_symbolic(A, x, y, dc.K_S, kEulerNumber, dc.F);
    const Rational rhs = g_cubed_f_closed_form(A, x, y, dc.F);
    ++r.cases;
    if (lhs != rhs && r.passed) {
      r.passed = false;
      r.detail = pq_str(s) + " A=" + A.to_string() + ": " + to_string(lhs) + " vs " + to_string(rhs);
    }
  }
  if (r.passed) r.detail = std::to_string(samples) + " samples";
  return r;
}

CheckResult check_vertical_chi(std::int64_t max_pq, std::int64_t l_bound) {
  return sweep("vertical-chi", coprime_grid(max_pq), [l_bound](const SurfaceParams& s) {
    Partial part;
    for (std::int64_t l = -l_bound; l <= l_bound; ++l)
      for (std::int64_t m = 0; m < s.p(); ++m)
        for (std::int64_t n = 0; n < s.q(); ++n) {
          ++part.cases;
          const CohomologyDims h = cohomology(VerticalDivisor(l, m, n, s));
          if (h.euler_characteristic() != 1 && part.failure.empty())
            part.failure = pq_str(s) + " (l,m,n)=(" + std::to_string(l) + "," + std::to_string(m) + "," +
                           std::to_string(n) + "): chi=" + std::to_string(h.euler_characteristic());
        }
    return part;
  });
}

CheckResult check_k_perp(std::int64_t max_pq) {
  return sweep("k-perp-lattice", coprime_grid(max_pq), [](const SurfaceParams& s) {
    Partial part{1, ""};
    const IntMatrix g = k_perp_quotient_gram(s);
    const std::int64_t det = determinant(g);
    if (g.rows != 8 || g.cols != 8 || !has_even_diagonal(g) || !is_negative_definite(g) || (det != 1 && det != -1))
      part.failure = pq_str(s) + ": rank " + std::to_string(g.rows) + ", det " + std::to_string(det);
    return part;
  });
}

CheckResult check_transvection(std::size_t samples, std::mt19937_64& rng) {
  CheckResult r{"transvection-isometry", true, 0, ""};
  const IntMatrix basis = k_perp_basis();
  std::uniform_int_distribution<int> pq_dist(1, 15);
  for (std::size_t i = 0; i < samples; ++i) {
    std::int64_t p = pq_dist(rng), q = pq_dist(rng);
    while (std::gcd(p, q) != 1) q = pq_dist(rng);
    const SurfaceParams s(p, q);
    const LatticeClass y = random_k_perp(rng, basis), x1 = random_k_perp(rng, basis),
                       x2 = random_k_perp(rng, basis);
    const LatticeClass t1 = transvection(y, x1, s), t2 = transvection(y, x2, s);
    const LatticeClass f = fiber_generator();
    ++r.cases;
    const bool ok = pair(t1, t2) == pair(x1, x2) && pair(t1, f) == 0 && t1.is_integral() &&
                    transvection(-y, t1, s) == x1;
    if (!ok && r.passed) {
      r.passed = false;
      r.detail = pq_str(s) + " y=" + y.to_string() + " x=" + x1.to_string();
    }
  }
  if (r.passed) r.detail = std::to_string(samples) + " samples";
  return r;
}

CheckResult check_mu_route(std::size_t samples, std::int64_t max_pq, std::mt19937_64& rng) {
  CheckResult r{"mu-route", true, 0, ""};
  std::uniform_int_distribution<std::int64_t> pq_dist(1, max_pq), n_dist(1, 60);
  const LatticeClass f = fiber_generator();
  for (std::size_t i = 0; i < samples; ++i) {
    std::int64_t p = pq_dist(rng), q = pq_dist(rng);
    while (std::gcd(p, q) != 1) q = pq_dist(rng);
    const SurfaceParams s(p, q);
    LatticeClass A = random_integral(rng, 5);
    while (pair(A, f) == 0) A = random_integral(rng, 5);
    const std::int64_t n = n_dist(rng);
    const MuRouteReport m = mu_route_check(n, A, s);
    ++r.cases;
    if (!m.agree() && r.passed) {
      r.passed = false;
      r.detail = pq_str(s) + " n=" + std::to_string(n) + " A=" + A.to_string() + ": " + to_string(m.stratum_route) +
                 " vs " + to_string(m.coefficient_route);
    }
  }
  if (r.passed) r.detail = std::to_string(samples) + " samples";
  return r;
}

CheckResult check_orthogonal_walls(std::int64_t coord_bound, std::int64_t n_max,
                                   const std::vector<SurfaceParams>& surfaces) {
  CheckResult r{"orthogonal-walls-ineffective", true, 0, ""};
  // Candidates M with M.f = 0. For those, (c1 - 2M)^2 = 4M^2 whenever c1 is a
  // multiple of f, so the wall range forces M^2 >= -2 and the spatial part is
  // confined to sum M_i^2 <= M_0^2 + 2. Every candidate is re-checked exactly.
  const auto fi = fiber_generator().to_ints();
  std::vector<LatticeClass> candidates;
  std::array<std::int64_t, kRank> m{};
  std::function<void(int, std::int64_t, std::int64_t)> rec = [&](int i, std::int64_t budget, std::int64_t dot) {
    if (i == kRank) {
      if (dot == 0) candidates.push_back(LatticeClass::from_ints(m));
      return;
    }
    const std::int64_t reach = std::min(coord_bound, isqrt(budget));
    for (std::int64_t v = -reach; v <= reach; ++v) {
      m[static_cast<std::size_t>(i)] = v;
      rec(i + 1, budget - v * v, dot - v * fi[static_cast<std::size_t>(i)]);
    }
    m[static_cast<std::size_t>(i)] = 0;
  };
  for (std::int64_t m0 = -coord_bound; m0 <= coord_bound; ++m0) {
    m[0] = m0;
    rec(1, m0 * m0 + 2, m0 * fi[0]);
  }

  std::uint64_t walls = 0;
  for (const auto& s : surfaces) {
    const auto dc = distinguished_classes(s);
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const LatticeClass c1 = dc.c1(n);
      for (const auto& M : candidates) {
        ++r.cases;
        if (pair(M, dc.K_S) != 0) continue;
        const Rational z2 = self_intersection(c1 - make_rational(2) * M);
        if (z2 < kWallSquareMin || z2 > kWallSquareMax) continue;
        ++walls;
        const Rational m2 = self_intersection(M);
        const bool even = is_integer(m2 / 2);
        const Rational index = dirac_index(make_rational(2) * M, -dc.K_S);
        const bool ok = !wall_effective(M, c1, dc.K_S) && even && index == (m2 + 2) / 2 && index <= 0;
        if (!ok && r.passed) {
          r.passed = false;
          r.detail = pq_str(s) + " n=" + std::to_string(n) + " M=" + M.to_string();
        }
      }
    }
  }
  if (r.passed)
    r.detail = std::to_string(candidates.size()) + " candidates, " + std::to_string(walls) + " walls, all ineffective";
  return r;
}

CheckResult check_walls_oracle(std::size_t fixtures, std::mt19937_64& rng) {
  CheckResult r{"walls-oracle", true, 0, ""};
  std::uniform_int_distribution<int> pq_dist(1, 7), n_dist(1, 5);
  std::uint64_t crossings = 0;
  for (std::size_t i = 0; i < fixtures; ++i) {
    std::int64_t p = pq_dist(rng), q = pq_dist(rng);
    while (std::gcd(p, q) != 1) q = pq_dist(rng);
    const SurfaceParams s(p, q);
    const LatticeClass c1 = distinguished_classes(s).c1(n_dist(rng));
    std::vector<oracle::SegmentFixture> fx = oracle::random_segment_fixtures(1, rng, c1);
    const auto& seg = fx.front();
    const auto fast = walls_on_segment(PeriodPoint(seg.w0), PeriodPoint(seg.w1), c1);
    const auto slow = oracle::brute_force_walls(seg.w0, seg.w1, c1);
    std::vector<LatticeClass> fast_z;
    for (const auto& w : fast) fast_z.push_back(w.zeta);
    ++r.cases;
    crossings += fast_z.size();
    if ((fast_z != slow.walls || !slow.endpoint_hits.empty()) && r.passed) {
      r.passed = false;
      r.detail = pq_str(s) + " w0=" + seg.w0.to_string() + " w1=" + seg.w1.to_string() + ": " +
                 std::to_string(fast_z.size()) + " vs " + std::to_string(slow.walls.size()) + " walls";
    }
  }
  if (r.passed)
    r.detail = std::to_string(fixtures) + " segments, " + std::to_string(crossings) + " crossings";
  return r;
}

std::vector<SurfaceParams> diagnostic_surfaces() { return {SurfaceParams(3, 2), SurfaceParams(3, 4), SurfaceParams(5, 2)}; }

std::vector<IdentityDiagnostic> collect_diagnostics(const std::vector<SurfaceParams>& surfaces, std::int64_t n_max) {
  std::vector<IdentityDiagnostic> out;
  for (const auto& s : surfaces)
    for (SumReading reading : {SumReading::FixedSigma, SumReading::ColumnSum})
      for (std::int64_t n = 1; n <= n_max; ++n) {
        auto d = sum_identity_diagnostics(s, n, reading);
        out.insert(out.end(), d.begin(), d.end());
      }
  return out;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verify(const VerifyConfig& config) {
  VerifyReport rep;
  rep.config = config;
  const std::int64_t P = config.max_pq(), N = config.n_max();
  const bool full = config.depth == VerifyDepth::Full;
  std::mt19937_64 rng(config.seed);

  rep.checks.push_back(check_stratum_sum(P, N));
  rep.checks.push_back(check_closed_forms(P, N));
  rep.checks.push_back(check_bijections(P));
  rep.checks.push_back(check_phi_dual_route(P));
  rep.checks.push_back(check_d_dual_route(P));
  rep.checks.push_back(check_phi1_delta(P));
  rep.checks.push_back(check_g_cubed(full ? 5000 : 1000, rng));
  rep.checks.push_back(check_vertical_chi(P, 100));
  rep.checks.push_back(check_k_perp(P));
  rep.checks.push_back(check_transvection(full ? 2000 : 500, rng));
  rep.checks.push_back(check_mu_route(full ? 400 : 100, P, rng));
  rep.checks.push_back(check_orthogonal_walls(4, 5, {SurfaceParams(1, 1), SurfaceParams(3, 2)}));
  rep.checks.push_back(check_walls_oracle(full ? 200 : 100, rng));

  rep.diagnostics = collect_diagnostics(diagnostic_surfaces(), kDiagnosticNMax);
  rep.ledger = build_errata_ledger(P);
  return rep;
}

}  // namespace spinpoly
