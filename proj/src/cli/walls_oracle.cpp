#include "spinpoly/walls_oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "spinpoly/walls.hpp"

namespace spinpoly::oracle {

namespace {

using i128 = __int128;

std::vector<std::int64_t> integer_multiple(const LatticeClass& x) {
  mpz_class l = 1;
  for (int i = 0; i < kRank; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x[i].get_den_mpz_t());
  std::vector<std::int64_t> out(kRank);
  for (int i = 0; i < kRank; ++i) {
    const Rational v = x[i] * l;
    out[static_cast<std::size_t>(i)] = v.get_num().get_si();
  }
  return out;
}

// Sign of P - X over all X with |X| <= sqrt(budget * norm): +1 or -1 when
// fixed, 0 when undetermined.
int fixed_sign(i128 P, i128 budget, i128 norm) {
  if (P * P <= budget * norm) return 0;
  return P > 0 ? 1 : -1;
}

}  // namespace

BruteForceResult brute_force_walls(const LatticeClass& w0, const LatticeClass& w1, const LatticeClass& c1,
                                   std::int64_t coordinate_bound) {
  const std::vector<std::int64_t> W0 = integer_multiple(w0), W1 = integer_multiple(w1);
  const auto c1i = c1.to_ints();
  BruteForceResult res;

  std::array<std::int64_t, kRank> z{};
  // Suffix sums of squared spatial weights for the Cauchy-Schwarz bound.
  std::array<i128, kRank + 1> tail0{}, tail1{};
  std::array<std::int64_t, kRank + 1> odd_tail{};
  for (int i = kRank - 1; i >= 1; --i) {
    tail0[static_cast<std::size_t>(i)] = tail0[static_cast<std::size_t>(i + 1)] + static_cast<i128>(W0[static_cast<std::size_t>(i)]) * W0[static_cast<std::size_t>(i)];
    tail1[static_cast<std::size_t>(i)] = tail1[static_cast<std::size_t>(i + 1)] + static_cast<i128>(W1[static_cast<std::size_t>(i)]) * W1[static_cast<std::size_t>(i)];
    odd_tail[static_cast<std::size_t>(i)] = odd_tail[static_cast<std::size_t>(i + 1)] + ((c1i[static_cast<std::size_t>(i)] % 2 != 0) ? 1 : 0);
  }

  auto leaf = [&]() {
    std::int64_t sq = z[0] * z[0];
    for (int i = 1; i < kRank; ++i) sq -= z[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
    if (sq < -8 || sq > -1) return;
    for (int i = 0; i < kRank; ++i)
      if ((c1i[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(i)]) % 2 != 0) return;
    i128 s0 = static_cast<i128>(z[0]) * W0[0], s1 = static_cast<i128>(z[0]) * W1[0];
    for (int i = 1; i < kRank; ++i) {
      s0 -= static_cast<i128>(z[static_cast<std::size_t>(i)]) * W0[static_cast<std::size_t>(i)];
      s1 -= static_cast<i128>(z[static_cast<std::size_t>(i)]) * W1[static_cast<std::size_t>(i)];
    }
    if (s0 == 0 || s1 == 0) {
      res.endpoint_hits.push_back(LatticeClass::from_ints(z));
      return;
    }
    if (s0 > 0 && s1 < 0) res.walls.push_back(LatticeClass::from_ints(z));
  };

  // i: next spatial index; used: sum of assigned spatial squares;
  // P0, P1: pairing of the assigned part with W0, W1.
  std::function<void(int, std::int64_t, i128, i128)> descend = [&](int i, std::int64_t used, i128 P0, i128 P1) {
    ++res.nodes_visited;
    // zeta^2 >= -8 leaves this much room for the unassigned spatial squares.
    const std::int64_t budget = z[0] * z[0] + 8 - used;
    if (budget < odd_tail[static_cast<std::size_t>(i)]) return;
    if (i == kRank) {
      leaf();
      return;
    }
    const int sg0 = fixed_sign(P0, budget, tail0[static_cast<std::size_t>(i)]);
    const int sg1 = fixed_sign(P1, budget, tail1[static_cast<std::size_t>(i)]);
    if (sg0 != 0 && sg0 == sg1) return;
    const std::int64_t reach = std::min(coordinate_bound, isqrt(budget));
    for (std::int64_t v = -reach; v <= reach; ++v) {
      z[static_cast<std::size_t>(i)] = v;
      descend(i + 1, used + v * v, P0 - static_cast<i128>(v) * W0[static_cast<std::size_t>(i)],
              P1 - static_cast<i128>(v) * W1[static_cast<std::size_t>(i)]);
    }
    z[static_cast<std::size_t>(i)] = 0;
  };

  for (std::int64_t z0 = -coordinate_bound; z0 <= coordinate_bound; ++z0) {
    z[0] = z0;
    descend(1, 0, static_cast<i128>(z0) * W0[0], static_cast<i128>(z0) * W1[0]);
  }

  auto less = [](const LatticeClass& a, const LatticeClass& b) {
    for (int i = 0; i < kRank; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  };
  std::sort(res.walls.begin(), res.walls.end(), less);
  std::sort(res.endpoint_hits.begin(), res.endpoint_hits.end(), less);
  return res;
}

std::vector<SegmentFixture> random_segment_fixtures(std::size_t count, std::mt19937_64& rng, const LatticeClass& c1,
                                                   std::int64_t oracle_bound) {
  std::uniform_int_distribution<int> den_dist(1, 4);
  auto rational_in = [&](int lo, int hi) {
    const int den = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(lo * den, hi * den);
    return make_rational(num_dist(rng), den);
  };
  auto random_period = [&]() {
    while (true) {
      LatticeClass::Coords c;
      c[0] = rational_in(2, 3);
      for (int i = 1; i < kRank; ++i) c[static_cast<std::size_t>(i)] = rational_in(-1, 1);
      LatticeClass w(c);
      // Walls accumulate toward the light cone; stay a unit away from it.
      if (self_intersection(w) >= 1) return w;
    }
  };
  std::vector<SegmentFixture> out;
  while (out.size() < count) {
    SegmentFixture fx{random_period(), random_period()};
    if (segment_box(PeriodPoint(fx.w0), PeriodPoint(fx.w1)).coordinate_bound > oracle_bound) continue;
    try {
      walls_on_segment(PeriodPoint(fx.w0), PeriodPoint(fx.w1), c1);
    } catch (const EndpointOnWall&) {
      continue;
    }
    out.push_back(std::move(fx));
  }
  return out;
}

}  // namespace spinpoly::oracle
