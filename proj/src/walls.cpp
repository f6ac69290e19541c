#include "spinpoly/walls.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace spinpoly {

PeriodPoint::PeriodPoint(LatticeClass omega) : omega_(std::move(omega)) {
  if (self_intersection(omega_) <= 0)
    throw std::invalid_argument("period " + omega_.to_string() + " is not in the positive cone");
}

bool PeriodPoint::is_fibre_oriented() const { return pair(omega_, fiber_generator()) > 0; }

Rational dirac_index(const LatticeClass& L, const LatticeClass& C) {
  return (self_intersection(C + L) - kSignature) / 8;
}

bool wall_effective(const LatticeClass& M, const LatticeClass& c1, const LatticeClass& K_S) {
  if (!M.is_integral()) throw std::invalid_argument("reduction " + M.to_string() + " is not integral");
  const Rational zeta_sq = self_intersection(c1 - Rational(2) * M);
  if (zeta_sq < kWallSquareMin || zeta_sq > kWallSquareMax)
    throw std::invalid_argument("(c1 - 2M)^2 = " + zeta_sq.get_str() + " is outside the wall range [-8,-1]");
  const LatticeClass C = -K_S;
  return dirac_index(Rational(2) * M, C) > 0 || dirac_index(Rational(2) * (c1 - M), C) > 0;
}

EndpointOnWall::EndpointOnWall(const LatticeClass& zeta, int endpoint)
    : std::invalid_argument("endpoint w" + std::to_string(endpoint) + " lies on the wall of zeta=" + zeta.to_string()),
      zeta_(zeta),
      endpoint_(endpoint) {}

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) throw std::invalid_argument("isqrt of a negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::vector<std::int64_t> scaled_to_integers(const LatticeClass& x) {
  mpz_class l = 1;
  for (int i = 0; i < kRank; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x[i].get_den_mpz_t());
  std::vector<std::int64_t> out(kRank);
  for (int i = 0; i < kRank; ++i) out[static_cast<std::size_t>(i)] = to_int64(x[i] * l);
  return out;
}

SegmentBox segment_box(const PeriodPoint& w0, const PeriodPoint& w1) {
  // For zeta orthogonal to a positive w: |zeta_s|^2 <= 8 w_0^2 / w^2. Along
  // the segment w(t)_0^2 <= max of the endpoint values, and since w0.w1 > 0,
  // w(t)^2 >= (1-t)^2 a + t^2 c >= ac/(a+c) with a = w0^2, c = w1^2.
  const Rational a = self_intersection(w0.omega()), c = self_intersection(w1.omega());
  const Rational x0 = w0.omega()[0] * w0.omega()[0], x1 = w1.omega()[0] * w1.omega()[0];
  const Rational top = x0 > x1 ? x0 : x1;
  const Rational lower = a * c / (a + c);
  SegmentBox box;
  box.spatial_norm_bound = Rational(-kWallSquareMin) * top / lower;
  const mpz_class fl = box.spatial_norm_bound.get_num() / box.spatial_norm_bound.get_den();
  box.coordinate_bound = isqrt(fl.get_si());
  return box;
}

bool is_crossing_wall(const LatticeClass& zeta, const LatticeClass& w0, const LatticeClass& w1,
                      const LatticeClass& c1) {
  if (!zeta.is_integral()) return false;
  const LatticeClass diff = c1 - zeta;
  for (int i = 0; i < kRank; ++i)
    if (diff[i].get_den() != 1 || diff[i].get_num() % 2 != 0) return false;
  const Rational sq = self_intersection(zeta);
  if (sq < kWallSquareMin || sq > kWallSquareMax) return false;
  return sgn(pair(zeta, w0)) * sgn(pair(zeta, w1)) < 0;
}

namespace {

std::int64_t pair_int(const std::array<std::int64_t, kRank>& z, const std::vector<std::int64_t>& w) {
  std::int64_t s = z[0] * w[0];
  for (std::size_t i = 1; i < z.size(); ++i) s -= z[i] * w[i];
  return s;
}

bool wall_less(const Wall& a, const Wall& b) {
  for (int i = 0; i < kRank; ++i)
    if (a.zeta[i] != b.zeta[i]) return a.zeta[i] < b.zeta[i];
  return false;
}

}  // namespace

std::vector<Wall> walls_on_segment(const PeriodPoint& w0, const PeriodPoint& w1, const LatticeClass& c1) {
  if (!c1.is_integral()) throw std::invalid_argument("c1 " + c1.to_string() + " is not integral");
  if (pair(w0.omega(), w1.omega()) <= 0)
    throw std::invalid_argument("endpoints " + w0.omega().to_string() + " and " + w1.omega().to_string() +
                                " lie in opposite components of the positive cone");

  const std::vector<std::int64_t> W0 = scaled_to_integers(w0.omega()), W1 = scaled_to_integers(w1.omega());
  const auto c1i = c1.to_ints();
  std::array<int, kRank> parity{};
  for (int i = 0; i < kRank; ++i) parity[static_cast<std::size_t>(i)] = static_cast<int>(euclid_mod(c1i[static_cast<std::size_t>(i)], 2));

  const SegmentBox box = segment_box(w0, w1);
  const mpz_class norm_floor = box.spatial_norm_bound.get_num() / box.spatial_norm_bound.get_den();
  const std::int64_t budget = norm_floor.get_si();
  const std::int64_t B = box.coordinate_bound;

  std::vector<Wall> out;
  std::array<std::int64_t, kRank> z{};

  auto visit_leaf = [&](std::int64_t spatial) {
    // zeta_0^2 in [spatial - 8, spatial - 1]
    const std::int64_t hi = spatial - 1;
    if (hi < 0) return;
    const std::int64_t lo = spatial + kWallSquareMin;
    for (std::int64_t a = 0; a * a <= hi; ++a) {
      if (a * a < lo || euclid_mod(a, 2) != parity[0]) continue;
      for (std::int64_t z0 : {a, -a}) {
        if (a == 0 && z0 < 0) continue;
        z[0] = z0;
        const std::int64_t s0 = pair_int(z, W0), s1 = pair_int(z, W1);
        if (s0 == 0) throw EndpointOnWall(LatticeClass::from_ints(z), 0);
        if (s1 == 0) throw EndpointOnWall(LatticeClass::from_ints(z), 1);
        // Each wall shows up as +zeta and -zeta; keep the one facing w0.
        if (s0 < 0 || s1 > 0) continue;
        Wall w;
        w.zeta = LatticeClass::from_ints(z);
        w.square = z0 * z0 - spatial;
        const LatticeClass M = Rational(1, 2) * (c1 - w.zeta);
        if (M.is_integral()) w.reduction = M;
        out.push_back(std::move(w));
      }
    }
  };

  std::function<void(int, std::int64_t)> descend = [&](int i, std::int64_t used) {
    if (i == kRank) {
      visit_leaf(used);
      return;
    }
    const std::int64_t reach = std::min(B, isqrt(budget - used));
    for (std::int64_t v = -reach; v <= reach; ++v) {
      if (euclid_mod(v, 2) != parity[static_cast<std::size_t>(i)]) continue;
      z[static_cast<std::size_t>(i)] = v;
      descend(i + 1, used + v * v);
    }
  };
  descend(1, 0);

  std::sort(out.begin(), out.end(), wall_less);
  return out;
}

bool chamber_invariance_predicate(std::int64_t p1, bool w2_nonzero) { return p1 > -7 || (p1 == -8 && w2_nonzero); }

}  // namespace spinpoly
