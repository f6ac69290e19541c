#include "spinpoly/hilb2.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace spinpoly {

namespace {

// Product of four factors, each either a surface class or T.
Rational monomial(const std::array<const LatticeClass*, 4>& surf, int t_count, const LatticeClass& K,
                  std::int64_t c2) {
  switch (t_count) {
    case 0:
      return pair(*surf[0], *surf[1]) * pair(*surf[2], *surf[3]) +
             pair(*surf[0], *surf[2]) * pair(*surf[1], *surf[3]) +
             pair(*surf[0], *surf[3]) * pair(*surf[1], *surf[2]);
    case 1:
      return 0;
    case 2:
      return -8 * pair(*surf[0], *surf[1]);
    case 3:
      return 8 * pair(*surf[0], K);
    default:
      return -8 * (self_intersection(K) + make_rational(c2));
  }
}

}  // namespace

Rational quartic(const Hilb2Divisor& a, const Hilb2Divisor& b, const Hilb2Divisor& c, const Hilb2Divisor& d,
                 const LatticeClass& K, std::int64_t c2) {
  const std::array<const Hilb2Divisor*, 4> args{&a, &b, &c, &d};
  Rational total = 0;
  // Bit i of mask selects the T-component of argument i.
  for (int mask = 0; mask < 16; ++mask) {
    Rational coeff = 1;
    std::array<const LatticeClass*, 4> surf{};
    int n_surf = 0, t_count = 0;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1 << i)) {
        coeff *= args[static_cast<std::size_t>(i)]->t;
        ++t_count;
      } else {
        surf[static_cast<std::size_t>(n_surf++)] = &args[static_cast<std::size_t>(i)]->surface;
      }
    }
    if (coeff == 0) continue;
    total += coeff * monomial(surf, t_count, K, c2);
  }
  return total;
}

Rational g_cubed_f_symbolic(const LatticeClass& A, const Rational& x, const Rational& y, const LatticeClass& K,
                            std::int64_t c2, const LatticeClass& F) {
  if (self_intersection(F) != 0 || pair(F, K) != 0)
    throw std::invalid_argument("g_cubed_f_symbolic needs F^2 = 0 and F.K = 0");
  const Hilb2Divisor G{A + x * F, y};
  return quartic(G, G, G, Hilb2Divisor::from_surface(F), K, c2);
}

Rational g_cubed_f_closed_form(const LatticeClass& A, const Rational& x, const Rational& y, const LatticeClass& F) {
  const Rational af = pair(A, F);
  return 3 * self_intersection(A) * af + 6 * x * af * af - 24 * y * y * af;
}

FiberResidues fiber_residues(std::int64_t d, const SurfaceParams& params) {
  return {euclid_mod(d, 2 * params.p()), euclid_mod(d, 2 * params.q())};
}

namespace {
void require_odd_positive(std::int64_t d) {
  if (d < 1 || d % 2 == 0) throw std::invalid_argument("d must be odd and positive, got " + std::to_string(d));
}
}  // namespace

Rational phi1_of_d(std::int64_t d, const SurfaceParams& params) {
  require_odd_positive(d);
  const std::int64_t p = params.p(), q = params.q();
  const auto [sp, sq] = fiber_residues(d, params);
  const std::int64_t numerator = (2 * d * p * q - d * d) - (2 * q * sq - sq * sq) - (2 * p * sp - sp * sp);
  return make_rational(numerator, 4);
}

namespace {
Rational phi1_delta_form(std::int64_t d, std::int64_t delta_p, std::int64_t delta_q, const SurfaceParams& params) {
  const std::int64_t p = params.p(), q = params.q();
  const std::int64_t integral =
      delta_p * q * (delta_p * q + q - d) + delta_q * p * (delta_q * p + p - d);
  return make_rational(integral) + make_rational(d * d, 4) + make_rational(d * params.canonical_multiple(), 2);
}
}  // namespace

Phi1DeltaReport phi1_corollary48(std::int64_t d, const SurfaceParams& params) {
  require_odd_positive(d);
  Phi1DeltaReport r;
  r.d = d;
  r.reference = phi1_of_d(d, params);
  const std::int64_t dp = floor_div(d, 2 * params.q()), dq = floor_div(d, 2 * params.p());
  r.with_floor = phi1_delta_form(d, dp, dq, params);
  r.with_floor_minus = phi1_delta_form(d, dp - 1, dq - 1, params);
  r.floor_matches = r.with_floor == r.reference;
  r.floor_minus_matches = r.with_floor_minus == r.reference;
  return r;
}

std::int64_t phi2(std::int64_t alpha, std::int64_t beta, const SurfaceParams& params) {
  const std::int64_t p = params.p(), q = params.q();
  if (alpha < 0 || beta < 0 || alpha * q + beta * p >= p * q)
    throw std::invalid_argument("phi2 index (" + std::to_string(alpha) + "," + std::to_string(beta) +
                                ") outside alpha,beta >= 0, alpha q + beta p < pq");
  if (alpha * beta == 0) return 0;
  if (alpha * q > beta * p)
    throw std::invalid_argument("phi2 index (" + std::to_string(alpha) + "," + std::to_string(beta) +
                                ") violates alpha q < beta p");
  return alpha * (q - beta) * p * q;
}

std::int64_t phi2_symmetric(std::int64_t alpha, std::int64_t beta, const SurfaceParams& params) {
  const std::int64_t p = params.p(), q = params.q();
  if (alpha * q <= beta * p) return phi2(alpha, beta, params);
  if (alpha < 0 || beta < 0 || alpha * q + beta * p >= p * q)
    throw std::invalid_argument("phi2 index (" + std::to_string(alpha) + "," + std::to_string(beta) +
                                ") outside alpha,beta >= 0, alpha q + beta p < pq");
  if (alpha * beta == 0) return 0;
  return beta * (p - alpha) * p * q;
}

Rational mu_cubed_type1(const LatticeClass& A, std::int64_t d, const SurfaceParams& params) {
  const DistinguishedClasses dc = distinguished_classes(params);
  const Rational af = pair(A, dc.F), ak = pair(A, dc.k);
  return 3 * af * self_intersection(A) + 6 * phi1_of_d(d, params) * af * ak * ak;
}

Rational mu_cubed_type2(const LatticeClass& A, std::int64_t alpha, std::int64_t beta, const SurfaceParams& params) {
  const DistinguishedClasses dc = distinguished_classes(params);
  const Rational af = pair(A, dc.F), ak = pair(A, dc.k);
  return 3 * make_rational(phi2(alpha, beta, params)) * af * ak * ak;
}

}  // namespace spinpoly
