#include "spinpoly/strata.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "spinpoly/hilb2.hpp"

namespace spinpoly {

namespace {

std::string cell_str(const StratumIndex& s) {
  return "(" + std::to_string(s.sigma) + "," + std::to_string(s.tau) + ")";
}

void require_in_square(const StratumIndex& s, const SurfaceParams& params) {
  if (!in_square(s, params))
    throw std::invalid_argument("cell " + cell_str(s) + " is outside the stratum square of (" +
                                std::to_string(params.p()) + "," + std::to_string(params.q()) + ")");
}

bool below_diagonal(std::int64_t alpha, std::int64_t beta, const SurfaceParams& params) {
  return alpha >= 0 && beta >= 0 && alpha * params.q() + beta * params.p() < params.pq();
}

std::int64_t half_exact(std::int64_t v) {
  if (v % 2 != 0) throw std::logic_error("expected an even value, got " + std::to_string(v));
  return v / 2;
}

}  // namespace

std::vector<StratumIndex> stratum_square(const SurfaceParams& params) {
  std::vector<StratumIndex> out;
  const std::int64_t smax = (params.p() - 1) / 2, tmax = (params.q() - 1) / 2;
  out.reserve(static_cast<std::size_t>((smax + 1) * (tmax + 1)));
  for (std::int64_t s = 0; s <= smax; ++s)
    for (std::int64_t t = 0; t <= tmax; ++t) out.push_back({s, t});
  return out;
}

bool in_square(const StratumIndex& s, const SurfaceParams& params) {
  return s.sigma >= 0 && s.tau >= 0 && 2 * s.sigma <= params.p() - 1 && 2 * s.tau <= params.q() - 1;
}

bool is_type1_index(std::int64_t alpha, std::int64_t beta, const SurfaceParams& params) {
  return below_diagonal(alpha, beta, params) && ((alpha - 1) * params.q() + (beta - 1) * params.p()) % 2 == 0;
}

bool is_type2_index(std::int64_t alpha, std::int64_t beta, const SurfaceParams& params) {
  return below_diagonal(alpha, beta, params) && std::llabs(alpha * params.q() + beta * params.p()) % 2 == 1;
}

ComponentIndex type1_index(const StratumIndex& s, const SurfaceParams& params) {
  require_in_square(s, params);
  const ComponentIndex odd{2 * s.sigma + 1, 2 * s.tau + 1, false};
  const ComponentIndex even{params.p() - 2 * s.sigma - 1, params.q() - 2 * s.tau - 1, false};
  const bool odd_ok = is_type1_index(odd.alpha, odd.beta, params);
  const bool even_ok = is_type1_index(even.alpha, even.beta, params);
  if (odd_ok == even_ok && !(odd_ok && odd == even))
    throw std::logic_error("type-1 bijection is ambiguous at cell " + cell_str(s));
  return odd_ok ? odd : even;
}

ComponentIndex type2_index(const StratumIndex& s, const SurfaceParams& params) {
  require_in_square(s, params);
  ComponentIndex first{2 * s.sigma + 1, params.q() - 2 * s.tau - 1, false};
  ComponentIndex second{params.p() - 2 * s.sigma - 1, 2 * s.tau + 1, false};
  const bool first_ok = is_type2_index(first.alpha, first.beta, params);
  const bool second_ok = is_type2_index(second.alpha, second.beta, params);
  if (first_ok && second_ok && !(first == second))
    throw std::logic_error("type-2 bijection is ambiguous at cell " + cell_str(s));
  if (!first_ok && !second_ok) {
    // Both candidates lie on alpha/p + beta/q = 1; only the corner cell of an
    // odd-by-odd square does this.
    if (2 * s.sigma != params.p() - 1 || 2 * s.tau != params.q() - 1)
      throw std::logic_error("type-2 bijection has no preimage at cell " + cell_str(s));
    return {0, 0, true};
  }
  ComponentIndex out = first_ok ? first : second;
  out.degenerate = out.alpha * out.beta == 0;
  return out;
}

StratumIndex type1_cell(std::int64_t alpha, std::int64_t beta, const SurfaceParams& params) {
  if (!is_type1_index(alpha, beta, params))
    throw std::invalid_argument("(" + std::to_string(alpha) + "," + std::to_string(beta) + ") is not a type-1 index");
  if (alpha % 2 != 0) return {half_exact(alpha - 1), half_exact(beta - 1)};
  return {half_exact(params.p() - alpha - 1), half_exact(params.q() - beta - 1)};
}

StratumIndex type2_cell(std::int64_t alpha, std::int64_t beta, const SurfaceParams& params) {
  if (!is_type2_index(alpha, beta, params))
    throw std::invalid_argument("(" + std::to_string(alpha) + "," + std::to_string(beta) + ") is not a type-2 index");
  if (alpha % 2 != 0) return {half_exact(alpha - 1), half_exact(params.q() - beta - 1)};
  return {half_exact(params.p() - alpha - 1), half_exact(beta - 1)};
}

std::int64_t t_value(std::int64_t index, std::int64_t modulus) {
  return (2 * index + 1) * (2 * modulus - 2 * index - 1);
}

std::int64_t s_value(std::int64_t residue, std::int64_t modulus) { return 2 * modulus * residue - residue * residue; }

StratumData stratum_data(const StratumIndex& s, const SurfaceParams& params) {
  const std::int64_t p = params.p(), q = params.q();
  StratumData out;
  out.index = s;
  out.type1 = type1_index(s, params);
  out.type2 = type2_index(s, params);
  out.d = p * q - out.type1.alpha * q - out.type1.beta * p;
  if (out.d < 1 || out.d % 2 == 0) throw std::logic_error("degree d is not odd positive at cell " + cell_str(s));
  const FiberResidues res = fiber_residues(out.d, params);
  out.s_p = res.s_p;
  out.s_q = res.s_q;
  out.T_p = t_value(s.sigma, p);
  out.T_q = t_value(s.tau, q);
  out.S_p = s_value(out.s_p, p);
  out.S_q = s_value(out.s_q, q);
  const std::int64_t slack = params.canonical_multiple() - 2 * s.sigma * q - 2 * s.tau * p;
  out.first_branch = slack > 0;
  out.R = slack > 0 ? slack : 0;
  out.phi1 = phi1_of_d(out.d, params);
  out.phi2 = out.first_branch ? (2 * s.sigma + 1) * (2 * s.tau + 1) * p * q
                              : (p - 2 * s.sigma - 1) * (q - 2 * s.tau - 1) * p * q;
  out.Phi = to_int64(12 * out.phi1 + make_rational(6 * out.phi2));
  return out;
}

DCrossCheck d_cross_check(const StratumIndex& s, const SurfaceParams& params) {
  const std::int64_t p = params.p(), q = params.q();
  const ComponentIndex t1 = type1_index(s, params);
  DCrossCheck c;
  c.bijection = p * q - t1.alpha * q - t1.beta * p;
  c.first_branch = 2 * s.sigma * q + 2 * s.tau * p < params.canonical_multiple();
  c.piecewise_printed = c.first_branch ? p * q - (2 * s.sigma + 1) * q - (2 * s.tau + 1) * p
                                       : -p * q + (2 * s.sigma + 1) * q - (2 * s.tau + 1) * p;
  c.absolute = std::llabs(params.canonical_multiple() - 2 * s.sigma * q - 2 * s.tau * p);
  return c;
}

PhiExpansion phi_expanded(const StratumIndex& s, const SurfaceParams& params) {
  const StratumData sd = stratum_data(s, params);
  const std::int64_t p = params.p(), q = params.q();
  const std::int64_t common = 3 * (q * q * sd.T_p - sd.S_p) + 6 * p * q * sd.R - 3 * p * p * q * q;
  PhiExpansion e;
  e.printed = common - 3 * (p * p * sd.T_q + sd.S_q);
  e.corrected = common + 3 * (p * p * sd.T_q - sd.S_q);
  e.reference = sd.Phi;
  return e;
}

NDecomposition decompose(std::int64_t n, const SurfaceParams& params) {
  if (n <= 0) throw std::invalid_argument("n must be positive, got " + std::to_string(n));
  const std::int64_t p = params.p(), q = params.q();
  // A q = n (mod p) and B p = n (mod q); the inverses exist since gcd(p,q) = 1.
  auto inverse_mod = [](std::int64_t a, std::int64_t m) -> std::int64_t {
    if (m == 1) return 0;
    std::int64_t r0 = m, r1 = euclid_mod(a, m), t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t k = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - k * r1};
      std::tie(t0, t1) = std::pair{t1, t0 - k * t1};
    }
    return euclid_mod(t0, m);
  };
  const std::int64_t A = p == 1 ? 0 : euclid_mod(euclid_mod(n, p) * inverse_mod(q, p), p);
  const std::int64_t B = q == 1 ? 0 : euclid_mod(euclid_mod(n, q) * inverse_mod(p, q), q);
  const std::int64_t rest = n - A * q - B * p;
  if (rest % (p * q) != 0) throw std::logic_error("CRT decomposition failed for n=" + std::to_string(n));
  return {n, rest / (p * q), A, B};
}

namespace {

// Twice H, so the value stays integral.
std::int64_t twice_h(std::int64_t index, std::int64_t residue, std::int64_t modulus) {
  const bool upper = index >= modulus - residue;
  const bool lower = index >= residue;
  if (upper && lower)
    throw std::logic_error("H cases overlap at index " + std::to_string(index) + ", residue " +
                           std::to_string(residue) + ", modulus " + std::to_string(modulus));
  if (upper) return 1;
  if (lower) return -1;
  return 0;
}

}  // namespace

Rational h_correction(std::int64_t index, std::int64_t residue, std::int64_t modulus) {
  return make_rational(twice_h(index, residue, modulus), 2);
}

std::int64_t c_factor(std::int64_t index, std::int64_t modulus) { return 2 * index == modulus - 1 ? 1 : 2; }

std::int64_t multiplicity(const StratumIndex& s, const NDecomposition& dec, const SurfaceParams& params) {
  const std::int64_t twice_bracket =
      2 * (dec.l + 1) + twice_h(s.sigma, dec.A, params.p()) + twice_h(s.tau, dec.B, params.q());
  const std::int64_t twice_m = twice_bracket * c_factor(s.sigma, params.p()) * c_factor(s.tau, params.q());
  if (twice_m % 2 != 0)
    throw std::logic_error("non-integral multiplicity at cell " + cell_str(s) + ", n=" + std::to_string(dec.n));
  return twice_m / 2;
}

std::int64_t multiplicity(const StratumIndex& s, std::int64_t n, const SurfaceParams& params) {
  require_in_square(s, params);
  return multiplicity(s, decompose(n, params), params);
}

StrataTable::StrataTable(const SurfaceParams& params) : params_(params) {
  for (const StratumIndex& s : stratum_square(params)) cells_.push_back(stratum_data(s, params));
}

}  // namespace spinpoly
