#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "spinpoly/hilb2.hpp"
#include "spinpoly/hilb2_expr.hpp"

using namespace spinpoly;

namespace {

// (A + yT)^4 from the rules, expanded binomially.
Rational diagonal(const Hilb2Divisor& a, const LatticeClass& K, std::int64_t c2) {
  const Rational aa = self_intersection(a.surface), y = a.t;
  return 3 * aa * aa + 6 * y * y * (-8 * aa) + 4 * y * y * y * 8 * pair(a.surface, K) +
         y * y * y * y * (-8 * (self_intersection(K) + c2));
}

// Polarization of the diagonal: an independent route to the quartic form.
Rational polarized(const std::array<Hilb2Divisor, 4>& x, const LatticeClass& K, std::int64_t c2) {
  Rational total = 0;
  for (int mask = 1; mask < 16; ++mask) {
    Hilb2Divisor sum{LatticeClass(), Rational(0)};
    int bits = 0;
    for (int i = 0; i < 4; ++i)
      if (mask & (1 << i)) {
        sum += x[static_cast<std::size_t>(i)];
        ++bits;
      }
    total += ((4 - bits) % 2 ? -1 : 1) * diagonal(sum, K, c2);
  }
  return total / 24;
}

LatticeClass random_class(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::array<std::int64_t, kRank> v{};
  for (auto& x : v) x = d(rng);
  return LatticeClass::from_ints(v);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(-9, 9), d(1, 5);
  return make_rational(n(rng), d(rng));
}

}  // namespace

TEST_CASE("quartic rule instances") {
  const SurfaceParams s(3, 2);
  const auto dc = distinguished_classes(s);
  const auto f = Hilb2Divisor::from_surface(dc.f);
  const auto T = Hilb2Divisor::exceptional();
  CHECK(quartic(f, f, f, f, dc.K_S, 12) == 0);
  // A.A = 3 with A = e0 + e1 + ... : take 2e0 - e1.
  const auto A = Hilb2Divisor::from_surface(make_rational(2) * LatticeClass::basis(0) - LatticeClass::basis(1));
  CHECK(quartic(A, A, T, T, dc.K_S, 12) == -24);
  CHECK(quartic(T, T, T, T, dc.K_S, 12) == -96);
  CHECK(quartic(A, A, A, T, dc.K_S, 12) == 0);
  CHECK(quartic(A, T, T, T, dc.K_S, 12) == 8 * pair(A.surface, dc.K_S));
}

TEST_CASE("quartic agrees with polarization of its diagonal") {
  std::mt19937_64 rng(21);
  for (auto [p, q] : {std::pair{1, 1}, {3, 2}, {5, 4}}) {
    const auto K = distinguished_classes(SurfaceParams(p, q)).K_S;
    for (int i = 0; i < 100; ++i) {
      std::array<Hilb2Divisor, 4> x;
      for (auto& d : x) d = {random_class(rng), random_rational(rng)};
      CHECK(quartic(x[0], x[1], x[2], x[3], K, 12) == polarized(x, K, 12));
    }
  }
}

TEST_CASE("quartic is symmetric under all argument orders") {
  std::mt19937_64 rng(22);
  const auto K = distinguished_classes(SurfaceParams(3, 4)).K_S;
  for (int i = 0; i < 20; ++i) {
    std::array<Hilb2Divisor, 4> x;
    for (auto& d : x) d = {random_class(rng), random_rational(rng)};
    const Rational ref = quartic(x[0], x[1], x[2], x[3], K, 12);
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      CHECK(quartic(x[static_cast<std::size_t>(perm[0])], x[static_cast<std::size_t>(perm[1])],
                    x[static_cast<std::size_t>(perm[2])], x[static_cast<std::size_t>(perm[3])], K, 12) == ref);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("cube of A + xF + yT against F") {
  const SurfaceParams s(3, 2);
  const auto dc = distinguished_classes(s);
  const LatticeClass e0 = LatticeClass::basis(0);
  CHECK(g_cubed_f_symbolic(e0, 0, 1, dc.K_S, 12, dc.F) == -378);
  CHECK(g_cubed_f_symbolic(e0, 0, 0, dc.K_S, 12, dc.F) == 3 * 1 * 18);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const LatticeClass A = random_class(rng);
    const Rational x = random_rational(rng), y = random_rational(rng);
    CHECK(g_cubed_f_symbolic(A, x, y, dc.K_S, 12, dc.F) == g_cubed_f_closed_form(A, x, y, dc.F));
  }
  CHECK_THROWS_AS(g_cubed_f_symbolic(e0, 0, 0, dc.K_S, 12, e0), std::invalid_argument);
}

TEST_CASE("phi1 values") {
  CHECK(phi1_of_d(1, SurfaceParams(1, 1)) == make_rational(-1, 4));
  CHECK(phi1_of_d(1, SurfaceParams(3, 2)) == make_rational(3, 4));
  CHECK(phi1_of_d(3, SurfaceParams(3, 2)) == make_rational(15, 4));
  CHECK_THROWS_AS(phi1_of_d(2, SurfaceParams(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(phi1_of_d(-1, SurfaceParams(3, 2)), std::invalid_argument);
}

TEST_CASE("twelve phi1 is integral") {
  for (std::int64_t p = 1; p <= 11; ++p)
    for (std::int64_t q = 1; q <= 11; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const SurfaceParams s(p, q);
      for (std::int64_t d = 1; d <= 4 * s.pq(); d += 2) CHECK(is_integer(12 * phi1_of_d(d, s)));
    }
}

TEST_CASE("alternative phi1 expression and its two delta conventions") {
  const auto r = phi1_corollary48(1, SurfaceParams(1, 1));
  CHECK(r.with_floor == make_rational(-1, 4));
  CHECK(r.floor_matches);
  CHECK(r.with_floor_minus == make_rational(7, 4));
  CHECK_FALSE(r.floor_minus_matches);
  for (auto [p, q] : {std::pair{3, 2}, {5, 4}, {7, 2}}) {
    const SurfaceParams s(p, q);
    for (std::int64_t d = 1; d <= 4 * s.pq(); d += 2) {
      const auto c = phi1_corollary48(d, s);
      CHECK(c.floor_matches);
      const auto res = fiber_residues(d, s);
      const Rational gap = c.with_floor_minus - c.reference;
      CHECK(abs(gap) == make_rational(s.q() * res.s_q + s.p() * res.s_p));
    }
  }
}

TEST_CASE("phi2 values and normalization") {
  CHECK(phi2(1, 1, SurfaceParams(3, 2)) == 6);
  CHECK(phi2(1, 2, SurfaceParams(3, 4)) == 1 * (4 - 2) * 12);
  CHECK(phi2(0, 1, SurfaceParams(3, 2)) == 0);
  CHECK(phi2(0, 3, SurfaceParams(3, 4)) == 0);
  // On S(3,4), (1,1) and (2,1) have alpha q > beta p: only the mirrored
  // orientation beta (p - alpha) pq applies. The unmirrored value at (1,1)
  // would be 36; the stratum table carries 24 there.
  CHECK_THROWS_AS(phi2(1, 1, SurfaceParams(3, 4)), std::invalid_argument);
  CHECK_THROWS_AS(phi2(2, 1, SurfaceParams(3, 4)), std::invalid_argument);
  CHECK(phi2_symmetric(1, 1, SurfaceParams(3, 4)) == 1 * (3 - 1) * 12);
  CHECK(phi2_symmetric(2, 1, SurfaceParams(3, 4)) == 1 * (3 - 2) * 12);
  CHECK(phi2_symmetric(1, 2, SurfaceParams(3, 4)) == phi2(1, 2, SurfaceParams(3, 4)));
}

TEST_CASE("mu cubed on both families") {
  const SurfaceParams s(3, 2);
  const auto dc = distinguished_classes(s);
  const LatticeClass e0 = LatticeClass::basis(0);
  CHECK(mu_cubed_type1(e0, 1, s) == 783);
  CHECK(mu_cubed_type1(dc.k, 1, s) == 0);
  CHECK(mu_cubed_type1(LatticeClass::basis(1) - LatticeClass::basis(2), 3, s) == 0);
  CHECK(mu_cubed_type2(e0, 1, 1, s) == 2916);
  CHECK(mu_cubed_type2(e0, 0, 1, s) == 0);
  CHECK(mu_cubed_type2(dc.k, 1, 1, s) == 0);
}

TEST_CASE("expression front end") {
  Hilb2Context ctx{SurfaceParams(1, 1)};
  CHECK(ctx.evaluate("T.T.T.T") == -96);
  ctx.define("A=e0");
  ctx.define("B=3e0");
  CHECK(ctx.evaluate("A.B.T.T") == -24);
  ctx.define("C=[1,2,3,4,5,6,7,8,9,1/2]");
  CHECK(ctx.evaluate("A.B.C.T") == 0);
  CHECK(ctx.evaluate("(A + B).B.T.T") == -8 * 12);
  CHECK(ctx.evaluate("1/2T.T.T.T") == -48);
  CHECK(ctx.evaluate("-T.T.T.T") == 96);
  CHECK(ctx.evaluate("e0.e0.e0.e0") == 3);
  CHECK(ctx.evaluate("K.T.T.T") == 8 * self_intersection(distinguished_classes(SurfaceParams(1, 1)).K_S));
  ctx.define("G=2*e1 - 1/3 T");
  CHECK(ctx.parse_divisor("G") == Hilb2Divisor{make_rational(2) * LatticeClass::basis(1), make_rational(-1, 3)});
}

TEST_CASE("expression errors carry positions") {
  Hilb2Context ctx{SurfaceParams(3, 2)};
  auto position_of = [&](const std::string& text) -> std::size_t {
    try {
      ctx.evaluate(text);
    } catch (const Hilb2ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("A.T.T.T") == 0);
  CHECK(position_of("T.T.T.Q") == 6);
  CHECK(position_of("T.T.T") == 0);
  CHECK(position_of("T.T.T.T.T") == 0);
  CHECK(position_of("T.T.T.T)") == 7);
  CHECK(position_of("T.T.[1,2].T") == 8);
  CHECK(position_of("T.T.1/0T.T") == 4);
  CHECK(position_of("T.T.(e0.T") == 7);
  CHECK_THROWS_AS(ctx.define("T=e0"), Hilb2ParseError);
  CHECK_THROWS_AS(ctx.define("noequals"), Hilb2ParseError);
  CHECK_THROWS_AS(ctx.define("2x=e0"), Hilb2ParseError);
}
