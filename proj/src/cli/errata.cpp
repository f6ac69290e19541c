#include "spinpoly/errata.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "spinpoly/hilb2.hpp"
#include "spinpoly/invariants.hpp"
#include "spinpoly/strata.hpp"
#include "spinpoly/vertical.hpp"
#include "spinpoly/walls.hpp"

namespace spinpoly {

namespace {

std::string tuple_str(std::initializer_list<std::int64_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

// Coprime pairs in the order (p, q) with p odd, ascending.
std::vector<SurfaceParams> normalized_pairs(std::int64_t max_pq) {
  std::vector<SurfaceParams> out;
  for (std::int64_t p = 1; p <= max_pq; p += 2)
    for (std::int64_t q = 1; q <= max_pq; ++q)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

std::optional<ErrataWitness> phi_sign_witness(const std::vector<SurfaceParams>& pairs) {
  for (const auto& params : pairs)
    for (const auto& s : stratum_square(params)) {
      const PhiExpansion e = phi_expanded(s, params);
      if (e.printed != e.corrected)
        return ErrataWitness{"(p,q,sigma,tau)=" + tuple_str({params.p(), params.q(), s.sigma, s.tau}),
                             std::to_string(e.printed), std::to_string(e.corrected)};
    }
  return std::nullopt;
}

ErrataWitness d_witness_at(const SurfaceParams& params, const StratumIndex& s) {
  const DCrossCheck c = d_cross_check(s, params);
  return {"(p,q,sigma,tau)=" + tuple_str({params.p(), params.q(), s.sigma, s.tau}),
          std::to_string(c.piecewise_printed), std::to_string(c.bijection)};
}

std::optional<ErrataWitness> d_else_witness(const std::vector<SurfaceParams>& pairs) {
  for (const auto& params : pairs)
    for (const auto& s : stratum_square(params)) {
      const DCrossCheck c = d_cross_check(s, params);
      if (c.piecewise_printed != c.bijection) return d_witness_at(params, s);
    }
  return std::nullopt;
}

std::optional<ErrataWitness> delta_witness(const std::vector<SurfaceParams>& pairs) {
  for (const auto& params : pairs)
    for (std::int64_t d = 1; d <= 4 * params.pq(); d += 2) {
      const Phi1DeltaReport r = phi1_corollary48(d, params);
      if (!r.floor_minus_matches)
        return ErrataWitness{"(p,q,d)=" + tuple_str({params.p(), params.q(), d}), to_string(r.with_floor_minus),
                             to_string(r.reference)};
    }
  return std::nullopt;
}

// The printed second summand repeats F_p: C - F + (alpha + beta) F_p.
std::optional<ErrataWitness> ext2_witness(const std::vector<SurfaceParams>& pairs) {
  for (const auto& params : pairs) {
    const VerticalDivisor C(0, 0, 0, params);
    for (std::int64_t a = 1; a < params.p(); ++a)
      for (std::int64_t b = 1; b < params.q(); ++b) {
        if (!is_type2_index(a, b, params)) continue;
        const std::int64_t working = ext2_length_type2(C, a, b);
        const std::int64_t printed = h0_normalized(C) + h0_normalized(C.shifted(-1, a + b, 0));
        if (printed != working)
          return ErrataWitness{"(p,q,alpha,beta), C=0: " + tuple_str({params.p(), params.q(), a, b}),
                               std::to_string(printed), std::to_string(working)};
      }
  }
  return std::nullopt;
}

ErrataWitness dirac_witness() {
  const SurfaceParams params(1, 1);
  const auto cls = distinguished_classes(params);
  const LatticeClass M = LatticeClass::basis(1) - LatticeClass::basis(2);
  const Rational m2 = self_intersection(M);
  const Rational printed = 4 * m2 - 8;
  const Rational working = dirac_index(make_rational(2) * M, -cls.K_S);
  return {"M=e1-e2, C=-K_S", to_string(printed), to_string(working)};
}

std::optional<ErrataWitness> a_norm_witness(const std::vector<SurfaceParams>& pairs) {
  for (const auto& params : pairs)
    for (std::int64_t n = 1; n <= 2 * params.pq(); ++n) {
      const InvariantPolynomial c = coefficients(n, params);
      if (c.sum_m != 3 * n)
        return ErrataWitness{"(p,q,n)=" + tuple_str({params.p(), params.q(), n}), std::to_string(c.sum_m),
                             std::to_string(3 * n)};
    }
  return std::nullopt;
}

}  // namespace

std::vector<ErrataLedgerEntry> build_errata_ledger(std::int64_t max_pq) {
  const auto pairs = normalized_pairs(max_pq);
  std::vector<ErrataLedgerEntry> ledger;
  auto add = [&](ErrataLedgerEntry e, std::optional<ErrataWitness> w, std::vector<ErrataWitness> extra = {}) {
    if (!w) return;  // the printed form agrees everywhere searched
    e.witnesses.push_back(*w);
    for (auto& x : extra)
      if (x.parameters != w->parameters) e.witnesses.push_back(std::move(x));
    ledger.push_back(std::move(e));
  };

  add({"phi-sign", "expansion of Phi through T, S, R in the section assembling the invariant",
       "3(q^2 T_p - S_p) - 3(p^2 T_q + S_q) + 6pqR - 3p^2q^2",
       "3(q^2 T_p - S_p) + 3(p^2 T_q - S_q) + 6pqR - 3p^2q^2", {}},
      phi_sign_witness(pairs));

  const SurfaceParams p32(3, 2);
  add({"d-else-branch", "piecewise formula for d on the stratum square, second branch",
       "-pq + (2 sigma + 1) q - (2 tau + 1) p", "|pq - p - q - 2 sigma q - 2 tau p| = pq - alpha q - beta p", {}},
      d_else_witness(pairs), {d_witness_at(p32, {1, 0})});

  add({"delta-convention", "delta_p, delta_q in the alternative expression for phi1",
       "delta_p = floor(d/2q) - 1, delta_q = floor(d/2p) - 1", "delta_p = floor(d/2q), delta_q = floor(d/2p)", {}},
      delta_witness(pairs));

  add({"ext2-type2-summand", "Ext^2 length count for the type-2 family",
       "h0(C) + h0(C_F + alpha F_p + beta F_p), read as C - F + (alpha + beta) F_p",
       "h0(C) + h0(C - F + alpha F_p + beta F_q)", {}},
      ext2_witness(pairs));

  add({"dirac-intermediate", "index computation for walls orthogonal to K in the wall-chamber discussion",
       "intermediate value 4M^2 - 8", "((C + 2M)^2 + 8)/8 with C = -K_S", {}},
      dirac_witness());

  add({"a-normalization", "raw stratum sum for a(n) versus the closed form", "a(n) = sum m(sigma,tau,n)",
       "a(n) = 3 sum m(sigma,tau,n) = 3n", {}},
      a_norm_witness(pairs));
  return ledger;
}

const ErrataLedgerEntry* find_entry(const std::vector<ErrataLedgerEntry>& ledger, const std::string& id) {
  for (const auto& e : ledger)
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace spinpoly
