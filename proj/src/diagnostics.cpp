#include "spinpoly/diagnostics.hpp"

#include <functional>
#include <map>

#include "spinpoly/strata.hpp"

namespace spinpoly {

std::string to_string(SumReading r) { return r == SumReading::FixedSigma ? "fixed-sigma" : "column-sum"; }

namespace {

using CellMap = std::map<StratumIndex, const StratumData*>;

// Case term shared by the three identities:
//   -B p W + 3p sum_{t<B} term(t)        if 2B <= q
//   (q-B) p W + 3p sum_{t<q-B} term(t)   otherwise
std::int64_t case_term(std::int64_t residue, std::int64_t modulus, std::int64_t other, std::int64_t weight,
                       const std::function<std::int64_t(std::int64_t)>& term) {
  std::int64_t upto = 0, head = 0;
  if (2 * residue <= modulus) {
    upto = residue;
    head = -residue * other * weight;
  } else {
    upto = modulus - residue;
    head = (modulus - residue) * other * weight;
  }
  std::int64_t sum = 0;
  for (std::int64_t t = 0; t < upto; ++t) sum += term(t);
  return head + 3 * other * sum;
}

}  // namespace

std::vector<IdentityDiagnostic> sum_identity_diagnostics(const SurfaceParams& params, std::int64_t n,
                                                         SumReading reading) {
  const std::int64_t p = params.p(), q = params.q();
  const StrataTable table(params);
  const NDecomposition dec = decompose(n, params);
  const std::int64_t smax = (p - 1) / 2, tmax = (q - 1) / 2;

  CellMap cells;
  for (const StratumData& sd : table.cells()) cells[sd.index] = &sd;
  auto at = [&](std::int64_t s, std::int64_t t) -> const StratumData& { return *cells.at({s, t}); };

  std::int64_t sum_m_sq = 0, sum_m_t = 0, sum_m_r = 0;
  for (const StratumData& sd : table.cells()) {
    const std::int64_t m = multiplicity(sd.index, dec, params);
    sum_m_sq += m * sd.S_q;
    sum_m_t += m * (p * p * sd.T_q - sd.S_q);
    sum_m_r += m * sd.R;
  }

  // Column readings of the tau-indexed (resp. sigma-indexed) summands.
  auto sq_term = [&](std::int64_t t) {
    if (reading == SumReading::FixedSigma) return at(0, t).S_q;
    std::int64_t s_sum = 0;
    for (std::int64_t s = 0; s <= smax; ++s) s_sum += at(s, t).S_q;
    return s_sum;
  };
  auto tq_term = [&](std::int64_t t) {
    if (reading == SumReading::FixedSigma) return p * p * at(0, t).T_q - at(0, t).S_q;
    std::int64_t s_sum = 0;
    for (std::int64_t s = 0; s <= smax; ++s) s_sum += p * p * at(s, t).T_q - at(s, t).S_q;
    return s_sum;
  };
  auto tp_term = [&](std::int64_t s) {
    if (reading == SumReading::FixedSigma) return q * q * at(s, 0).T_p - at(s, 0).S_p;
    std::int64_t t_sum = 0;
    for (std::int64_t t = 0; t <= tmax; ++t) t_sum += q * q * at(s, t).T_p - at(s, t).S_p;
    return t_sum;
  };

  const std::int64_t wq = 2 * q * q + 1, wp = 2 * p * p + 1;
  const std::int64_t x_q = case_term(dec.B, q, p, wq * (p * p - 1), tq_term);
  const std::int64_t x_p = case_term(dec.A, p, q, wp * (q * q - 1), tp_term);

  std::vector<IdentityDiagnostic> out;
  auto push = [&](const char* name, std::int64_t lhs, std::int64_t rhs) {
    out.push_back({name, p, q, n, reading, make_rational(lhs), make_rational(rhs)});
  };
  push("sum-S", 3 * sum_m_sq, n * wq + case_term(dec.B, q, p, wq, sq_term));
  push("sum-T", 3 * sum_m_t, n * wq * (p * p - 1) + x_q);
  push("sum-R", 6 * p * q * sum_m_r, n * (p * p - 1) * (q * q - 1) - x_p - x_q);
  return out;
}

bool s_q_depends_only_on_tau(const SurfaceParams& params) {
  std::map<std::int64_t, std::int64_t> by_tau;
  for (const StratumIndex& s : stratum_square(params)) {
    const std::int64_t v = stratum_data(s, params).S_q;
    auto [it, inserted] = by_tau.emplace(s.tau, v);
    if (!inserted && it->second != v) return false;
  }
  return true;
}

bool s_p_depends_only_on_sigma(const SurfaceParams& params) {
  std::map<std::int64_t, std::int64_t> by_sigma;
  for (const StratumIndex& s : stratum_square(params)) {
    const std::int64_t v = stratum_data(s, params).S_p;
    auto [it, inserted] = by_sigma.emplace(s.sigma, v);
    if (!inserted && it->second != v) return false;
  }
  return true;
}

}  // namespace spinpoly
