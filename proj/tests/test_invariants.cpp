#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "spinpoly/invariants.hpp"

using namespace spinpoly;

namespace {

LatticeClass random_vector(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::array<std::int64_t, kRank> v{};
  for (auto& x : v) x = d(rng);
  return LatticeClass::from_ints(v);
}

SurfaceParams random_surface(std::mt19937_64& rng, int max) {
  std::uniform_int_distribution<int> d(1, max);
  for (;;) {
    const int p = d(rng), q = d(rng);
    if (std::gcd(p, q) == 1) return SurfaceParams(p, q);
  }
}

// Averages over all 24 orderings instead of the pairing sums.
SymmetricForms permutation_forms(const std::array<LatticeClass, 4>& x, const LatticeClass& k) {
  std::array<int, 4> perm{0, 1, 2, 3};
  Rational q2 = 0, qk2 = 0;
  do {
    const auto& a = x[perm[0]];
    const auto& b = x[perm[1]];
    const auto& c = x[perm[2]];
    const auto& d = x[perm[3]];
    q2 += pair(a, b) * pair(c, d);
    qk2 += pair(a, b) * pair(k, c) * pair(k, d);
  } while (std::next_permutation(perm.begin(), perm.end()));
  Rational k4 = 1;
  for (const auto& v : x) k4 *= pair(k, v);
  return {q2 / 24, qk2 / 24, k4};
}

}  // namespace

TEST_CASE("coefficient examples") {
  const auto c11 = coefficients(5, SurfaceParams(1, 1));
  CHECK(c11.sum_m == 5);
  CHECK(c11.a == 15);
  CHECK(c11.b == -15);
  REQUIRE(c11.c_known.has_value());
  CHECK(*c11.c_known == 105);

  const auto c32 = coefficients(1, SurfaceParams(3, 2));
  CHECK(c32.a == 3);
  CHECK(c32.b == 45);
  CHECK_FALSE(c32.c_known.has_value());
  CHECK(coefficients(2, SurfaceParams(3, 2)).b == 90);
  CHECK(coefficients(3, SurfaceParams(3, 2)).b == 135);
  CHECK(coefficients(1, SurfaceParams(3, 4)).a == 3);
  CHECK(coefficients(1, SurfaceParams(3, 4)).b == 237);
  CHECK(coefficients(1, SurfaceParams(5, 2)).b == 141);
  CHECK(closed_form_b_slope(SurfaceParams(1, 1)) == -3);
}

TEST_CASE("closed forms hold and coefficients are additive in n") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const SurfaceParams s = random_surface(rng, 15);
    std::uniform_int_distribution<int> dn(1, 300);
    const int n1 = dn(rng), n2 = dn(rng);
    const auto r = closed_form_check(n1, s);
    CHECK(r.ok());
    CHECK(r.computed.sum_m == n1);
    const auto a = coefficients(n1, s), b = coefficients(n2, s), ab = coefficients(n1 + n2, s);
    CHECK(ab.a == a.a + b.a);
    CHECK(ab.b == a.b + b.b);
    // Swapping p and q describes the same surface.
    CHECK(coefficients(n1, SurfaceParams(s.q(), s.p())).b == a.b);
  }
}

TEST_CASE("evaluate_q examples") {
  const SurfaceParams s(3, 2);
  const auto d = distinguished_classes(s);
  const auto e0 = LatticeClass::basis(0);
  const auto v = evaluate_q(1, {e0, e0, e0, d.F}, s);
  CHECK(v.forms.q2 == 18);
  CHECK(v.forms.qk2 == 81);
  CHECK(v.forms.k4 == 0);
  CHECK(v.value == 3699);
  CHECK_FALSE(v.c_term_unknown);

  const auto zero = evaluate_q(4, {d.k, d.k, d.k, d.k}, s);
  CHECK(zero.value == 0);

  CHECK(evaluate_q(1, {e0, e0, e0, e0}, s).c_term_unknown);
  const auto full = evaluate_q(2, {e0, e0, e0, e0}, SurfaceParams(1, 1));
  CHECK_FALSE(full.c_term_unknown);
  // a = 6, b = -6, c = 42 on (1 + 9 + 81).
  CHECK(full.value == 6 - 6 * 9 + 42 * 81);
}

TEST_CASE("symmetric forms: permutation oracle, symmetry and multilinearity") {
  std::mt19937_64 rng(11);
  const LatticeClass k = fiber_generator();
  for (int i = 0; i < 300; ++i) {
    std::array<LatticeClass, 4> x{random_vector(rng, 4), random_vector(rng, 4), random_vector(rng, 4),
                                  random_vector(rng, 4)};
    const auto f = symmetric_forms(x, k);
    const auto g = permutation_forms(x, k);
    CHECK(f.q2 == g.q2);
    CHECK(f.qk2 == g.qk2);
    CHECK(f.k4 == g.k4);

    auto y = x;
    std::shuffle(y.begin(), y.end(), rng);
    const auto h = symmetric_forms(y, k);
    CHECK(h.q2 == f.q2);
    CHECK(h.qk2 == f.qk2);

    const LatticeClass z = random_vector(rng, 4);
    const Rational t(std::uniform_int_distribution<int>(-5, 5)(rng));
    auto sum = x;
    sum[0] = x[0] + t * z;
    auto only_z = x;
    only_z[0] = z;
    const auto lhs = symmetric_forms(sum, k);
    const auto rz = symmetric_forms(only_z, k);
    CHECK(lhs.q2 == f.q2 + t * rz.q2);
    CHECK(lhs.qk2 == f.qk2 + t * rz.qk2);
    CHECK(lhs.k4 == f.k4 + t * rz.k4);
  }
}

TEST_CASE("diagonal normalization") {
  std::mt19937_64 rng(3);
  const LatticeClass k = fiber_generator();
  for (int i = 0; i < 100; ++i) {
    const LatticeClass A = random_vector(rng, 5);
    const auto f = symmetric_forms({A, A, A, A}, k);
    const Rational aa = self_intersection(A), ak = pair(A, k);
    CHECK(f.q2 == aa * aa);
    CHECK(f.qk2 == aa * ak * ak);
    CHECK(f.k4 == ak * ak * ak * ak);
  }
}

TEST_CASE("mu^3 route agrees with the assembled coefficients") {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 60) {
    const SurfaceParams s = random_surface(rng, 9);
    const LatticeClass A = random_vector(rng, 3);
    if (pair(A, fiber_generator()) == 0) {
      CHECK_THROWS_AS(mu_route_check(1, A, s), std::invalid_argument);
      continue;
    }
    const int n = std::uniform_int_distribution<int>(1, 40)(rng);
    const auto r = mu_route_check(n, A, s);
    CHECK(r.agree());
    ++checked;
  }
}
