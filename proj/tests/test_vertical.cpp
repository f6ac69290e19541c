#include <doctest.h>

#include <numeric>

#include "spinpoly/vertical.hpp"

using namespace spinpoly;

namespace {

// Sections of O(lF) on an elliptic fibration over P^1 with chi(O) = 1:
// h0 = l + 1 for l >= 0, and Riemann-Roch with Serre duality fixes the rest.
CohomologyDims reference_dims(std::int64_t l) {
  if (l >= 0) return {l + 1, l, 0};
  return {0, -1 - l, -l};
}

}  // namespace

TEST_CASE("normalization folds excess multiples into F") {
  const SurfaceParams s(3, 2);
  CHECK(normalize(VerticalDivisor(0, 3, 0, s)) == VerticalDivisor(1, 0, 0, s));
  CHECK(normalize(VerticalDivisor(0, 0, 0, s)) == VerticalDivisor(0, 0, 0, s));
  CHECK(normalize(VerticalDivisor(0, 4, 3, s)) == VerticalDivisor(2, 1, 1, s));
  CHECK(normalize(VerticalDivisor(0, -1, 0, s)) == VerticalDivisor(-1, 2, 0, s));
}

TEST_CASE("normalization preserves the degree against k") {
  for (auto [p, q] : {std::pair{1, 1}, {3, 2}, {5, 4}, {7, 3}})
    for (std::int64_t l = -3; l <= 3; ++l)
      for (std::int64_t m = -8; m <= 8; ++m)
        for (std::int64_t n = -8; n <= 8; ++n) {
          const SurfaceParams s(p, q);
          const VerticalDivisor d(l, m, n, s), nd = normalize(d);
          CHECK(nd.is_normal());
          CHECK(nd.degree_k() == d.degree_k());
          CHECK(nd.lattice_class() == d.lattice_class());
        }
}

TEST_CASE("cohomology dimensions of vertical divisors") {
  const SurfaceParams s(3, 2);
  CHECK(cohomology(VerticalDivisor(0, 0, 0, s)) == CohomologyDims{1, 0, 0});
  CHECK(cohomology(VerticalDivisor(-1, 0, 0, s)) == CohomologyDims{0, 0, 1});
  CHECK(cohomology(VerticalDivisor(2, 0, 0, s)) == CohomologyDims{3, 2, 0});
  CHECK_THROWS_AS(cohomology(VerticalDivisor(0, 3, 0, s)), std::invalid_argument);
  for (std::int64_t l = -20; l <= 20; ++l)
    for (std::int64_t m = 0; m < 3; ++m)
      for (std::int64_t n = 0; n < 2; ++n) CHECK(cohomology(VerticalDivisor(l, m, n, s)) == reference_dims(l));
}

TEST_CASE("Euler characteristic is one and h0 is monotone") {
  for (std::int64_t p = 1; p <= 9; ++p)
    for (std::int64_t q = 1; q <= 9; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const SurfaceParams s(p, q);
      for (std::int64_t m = 0; m < s.p(); ++m)
        for (std::int64_t n = 0; n < s.q(); ++n) {
          std::int64_t prev = -1;
          for (std::int64_t l = -100; l <= 100; ++l) {
            const CohomologyDims h = cohomology(VerticalDivisor(l, m, n, s));
            CHECK(h.euler_characteristic() == 1);
            CHECK(h.h0 >= prev);
            prev = h.h0;
          }
        }
    }
}

TEST_CASE("Serre duality pairs D with K_S - D") {
  // K_S = F - F_p - F_q = (-1)F + (p-1)F_p + (q-1)F_q in normal form.
  for (auto [p, q] : {std::pair{3, 2}, {5, 3}, {7, 4}}) {
    const SurfaceParams s(p, q);
    const VerticalDivisor K(-1, s.p() - 1, s.q() - 1, s);
    for (std::int64_t l = -10; l <= 10; ++l)
      for (std::int64_t m = 0; m < s.p(); ++m)
        for (std::int64_t n = 0; n < s.q(); ++n) {
          const VerticalDivisor D(l, m, n, s);
          const VerticalDivisor dual = normalize(K.shifted(-l, -m, -n));
          CHECK(cohomology(D).h2 == cohomology(dual).h0);
        }
  }
}

TEST_CASE("Ext^2 lengths for the type-1 family") {
  const SurfaceParams s(3, 2);
  CHECK(ext2_length_type1(VerticalDivisor(0, 0, 0, s), 0, 0) == 4);
  CHECK(ext2_length_type1(VerticalDivisor(0, 1, 1, s), 1, 1) == 4);
  CHECK(ext2_length_type1(VerticalDivisor(-1, 0, 0, s), 0, 0) == 0);
  // l = 1 everywhere after folding: 2 sections each.
  CHECK(ext2_length_type1(VerticalDivisor(1, 0, 0, s), 0, 0) == 8);
}

TEST_CASE("Ext^2 lengths for the type-2 family") {
  const SurfaceParams s(3, 2);
  CHECK(ext2_length_type2(VerticalDivisor(0, 0, 0, s), 0, 0) == 1);
  CHECK(ext2_length_type2(VerticalDivisor(1, 0, 0, s), 1, 1) == 3);
  CHECK(ext2_length_type2(VerticalDivisor(-1, 0, 0, s), 1, 1) == 0);
  // Second summand uses beta F_q: C - F + 2F_p + F_q stays at l = -1 on S(3,4).
  const SurfaceParams t(3, 4);
  CHECK(ext2_length_type2(VerticalDivisor(0, 0, 0, t), 2, 1) == 1);
}
