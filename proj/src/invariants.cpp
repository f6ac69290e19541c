#include "spinpoly/invariants.hpp"

#include <stdexcept>

#include "spinpoly/hilb2.hpp"

namespace spinpoly {

InvariantPolynomial coefficients(std::int64_t n, const StrataTable& table) {
  const SurfaceParams& params = table.params();
  const NDecomposition dec = decompose(n, params);
  InvariantPolynomial out{params, n, 0, 0, 0, std::nullopt};
  for (const StratumData& sd : table.cells()) {
    const std::int64_t m = multiplicity(sd.index, dec, params);
    out.sum_m += m;
    out.b += m * sd.Phi;
  }
  out.a = 3 * out.sum_m;
  if (params.p() == 1 && params.q() == 1) out.c_known = 21 * n;
  return out;
}

InvariantPolynomial coefficients(std::int64_t n, const SurfaceParams& params) {
  return coefficients(n, StrataTable(params));
}

std::int64_t closed_form_b_slope(const SurfaceParams& params) {
  const std::int64_t p2 = params.p() * params.p(), q2 = params.q() * params.q();
  return 2 * p2 * q2 - 2 * p2 - 2 * q2 - 1;
}

ClosedFormReport closed_form_check(std::int64_t n, const StrataTable& table) {
  return {coefficients(n, table), 3 * n, closed_form_b_slope(table.params()) * n};
}

ClosedFormReport closed_form_check(std::int64_t n, const SurfaceParams& params) {
  return closed_form_check(n, StrataTable(params));
}

SymmetricForms symmetric_forms(const std::array<LatticeClass, 4>& x, const LatticeClass& k) {
  auto xx = [&](int i, int j) { return pair(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]); };
  std::array<Rational, 4> kx;
  for (std::size_t i = 0; i < 4; ++i) kx[i] = pair(k, x[i]);

  SymmetricForms f;
  f.q2 = (xx(0, 1) * xx(2, 3) + xx(0, 2) * xx(1, 3) + xx(0, 3) * xx(1, 2)) / 3;
  Rational s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Rational rest = 1;
      for (int l = 0; l < 4; ++l)
        if (l != i && l != j) rest *= kx[static_cast<std::size_t>(l)];
      s += xx(i, j) * rest;
    }
  f.qk2 = s / 6;
  f.k4 = kx[0] * kx[1] * kx[2] * kx[3];
  return f;
}

QEvaluation evaluate_q(std::int64_t n, const std::array<LatticeClass, 4>& x, const SurfaceParams& params) {
  const DistinguishedClasses dc = distinguished_classes(params);
  QEvaluation e{symmetric_forms(x, dc.k), coefficients(n, params), Rational(0), false};
  e.value = make_rational(e.coeffs.a) * e.forms.q2 + make_rational(e.coeffs.b) * e.forms.qk2;
  if (e.forms.k4 != 0) {
    if (e.coeffs.c_known)
      e.value += make_rational(*e.coeffs.c_known) * e.forms.k4;
    else
      e.c_term_unknown = true;
  }
  return e;
}

MuRouteReport mu_route_check(std::int64_t n, const LatticeClass& A, const SurfaceParams& params) {
  const DistinguishedClasses dc = distinguished_classes(params);
  const Rational af = pair(A, dc.F), ak = pair(A, dc.k);
  if (af == 0) throw std::invalid_argument("mu_route_check needs A.F != 0");

  const StrataTable table(params);
  const NDecomposition dec = decompose(n, params);
  MuRouteReport r{Rational(0), Rational(0)};
  for (const StratumData& sd : table.cells()) {
    const Rational m = make_rational(multiplicity(sd.index, dec, params));
    r.stratum_route += m * mu_cubed_type1(A, sd.d, params);
    if (sd.type2.degenerate) continue;
    const ComponentIndex& t2 = sd.type2;
    if (t2.alpha * params.q() < t2.beta * params.p()) {
      r.stratum_route += m * mu_cubed_type2(A, t2.alpha, t2.beta, params);
    } else {
      // Mirror image of the normalized family (roles of p and q exchanged).
      r.stratum_route += m * 3 * make_rational(phi2_symmetric(t2.alpha, t2.beta, params)) * af * ak * ak;
    }
  }
  const InvariantPolynomial c = coefficients(n, table);
  r.coefficient_route = make_rational(c.a) * self_intersection(A) * af + make_rational(c.b) * af * ak * ak / 2;
  return r;
}

}  // namespace spinpoly
