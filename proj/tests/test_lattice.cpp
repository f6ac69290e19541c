#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "spinpoly/lattice.hpp"

using namespace spinpoly;

namespace {

LatticeClass random_vector(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::array<std::int64_t, kRank> v{};
  for (auto& x : v) x = d(rng);
  return LatticeClass::from_ints(v);
}

// Leibniz expansion, independent of the elimination used by the library.
__int128 permutation_determinant(const IntMatrix& m) {
  std::vector<int> perm(static_cast<std::size_t>(m.rows));
  std::iota(perm.begin(), perm.end(), 0);
  __int128 total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    __int128 term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < m.rows && term != 0; ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

IntMatrix minor_of_negated(const IntMatrix& m, int k) {
  IntMatrix out(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out(i, j) = -m(i, j);
  return out;
}

}  // namespace

TEST_CASE("surface parameters are normalized to odd p") {
  const SurfaceParams a(2, 3);
  CHECK(a.p() == 3);
  CHECK(a.q() == 2);
  CHECK(a.swapped());
  const SurfaceParams b(3, 4);
  CHECK(b.p() == 3);
  CHECK_FALSE(b.swapped());
  CHECK(SurfaceParams(1, 1).canonical_multiple() == -1);
  CHECK_THROWS_AS(SurfaceParams(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceParams(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceParams(-3, 2), std::invalid_argument);
}

TEST_CASE("canonical multiple is odd for every coprime pair") {
  for (std::int64_t p = 1; p <= 25; ++p)
    for (std::int64_t q = 1; q <= 25; ++q)
      if (std::gcd(p, q) == 1) CHECK(SurfaceParams(p, q).canonical_multiple() % 2 != 0);
}

TEST_CASE("pairing basics") {
  const LatticeClass e0 = LatticeClass::basis(0), f = fiber_generator();
  CHECK(pair(e0, e0) == 1);
  CHECK(pair(LatticeClass::basis(4), LatticeClass::basis(4)) == -1);
  CHECK(self_intersection(f) == 0);
  CHECK(pair(e0, f) == 3);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const LatticeClass x = random_vector(rng, 5), y = random_vector(rng, 5), z = random_vector(rng, 5);
    CHECK(pair(x, y) == pair(y, x));
    CHECK(pair(x + make_rational(3) * y, z) == pair(x, z) + 3 * pair(y, z));
  }
}

TEST_CASE("distinguished classes") {
  for (auto [p, q] : {std::pair{1, 1}, {3, 2}, {3, 4}, {5, 2}, {7, 9}}) {
    const SurfaceParams s(p, q);
    const auto d = distinguished_classes(s);
    CHECK(d.K_S == d.F - d.F_p - d.F_q);
    CHECK(self_intersection(d.K_S) == 0);
    CHECK(pair(d.K_S, d.k) == 0);
    CHECK(pair(d.F, d.F_p) == 0);
    CHECK(pair(d.F_p, d.F_q) == 0);
    for (int n = 1; n <= 6; ++n) CHECK(self_intersection(d.c1(n)) == 0);
    CHECK(d.c1(2) == d.K_S + make_rational(4) * d.k);
  }
}

TEST_CASE("minus the canonical class is characteristic") {
  std::mt19937_64 rng(11);
  for (auto [p, q] : {std::pair{1, 1}, {3, 2}, {5, 4}, {9, 7}}) {
    const auto d = distinguished_classes(SurfaceParams(p, q));
    for (int i = 0; i < 200; ++i) {
      const LatticeClass x = random_vector(rng, 9);
      CHECK(is_integer((pair(-d.K_S, x) - self_intersection(x)) / 2));
    }
  }
}

TEST_CASE("the fibre generator is primitive") {
  const auto f = fiber_generator().to_ints();
  std::int64_t g = 0;
  for (auto x : f) g = std::gcd(g, x);
  CHECK(g == 1);
}

TEST_CASE("transvection examples") {
  const SurfaceParams s(3, 2);
  const LatticeClass e1 = LatticeClass::basis(1), e2 = LatticeClass::basis(2), e3 = LatticeClass::basis(3);
  const LatticeClass x = e1 - e2, y = e2 - e3;
  const LatticeClass t = transvection(y, x, s);
  CHECK(t == LatticeClass::from_ints({18, -5, -7, -6, -6, -6, -6, -6, -6, -6}));
  CHECK(self_intersection(t) == -2);
  // x.y = 0 leaves x alone.
  const LatticeClass y0 = LatticeClass::basis(4) - LatticeClass::basis(5);
  CHECK(transvection(y0, x, s) == x);
  CHECK_THROWS_AS(transvection(y, LatticeClass::basis(0), s), std::domain_error);
  CHECK_THROWS_AS(transvection(LatticeClass::basis(0), x, s), std::domain_error);
}

TEST_CASE("transvections are isometries of k-perp and invert by negation") {
  std::mt19937_64 rng(3);
  const IntMatrix B = k_perp_basis();
  auto sample = [&] {
    std::uniform_int_distribution<int> d(-3, 3);
    std::array<std::int64_t, kRank> v{};
    for (int c = 0; c < B.cols; ++c) {
      const int t = d(rng);
      for (int r = 0; r < kRank; ++r) v[static_cast<std::size_t>(r)] += t * B(r, c);
    }
    return LatticeClass::from_ints(v);
  };
  for (auto [p, q] : {std::pair{1, 1}, {3, 2}, {5, 3}}) {
    const SurfaceParams s(p, q);
    for (int i = 0; i < 100; ++i) {
      const LatticeClass y = sample(), a = sample(), b = sample();
      CHECK(pair(transvection(y, a, s), transvection(y, b, s)) == pair(a, b));
      CHECK(transvection(y, transvection(-y, a, s), s) == a);
    }
  }
}

TEST_CASE("row reduction is unimodular") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> row(6);
    for (auto& x : row) x = d(rng);
    const auto red = reduce_row(row);
    std::int64_t g = 0;
    for (auto x : row) g = std::gcd(g, x);
    CHECK(red.gcd == g);
    for (int c = 0; c < 6; ++c) {
      std::int64_t s = 0;
      for (int r = 0; r < 6; ++r) s += row[static_cast<std::size_t>(r)] * red.transform(r, c);
      CHECK(s == (c == 0 ? g : 0));
    }
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < 6; ++k) s += red.transform(i, k) * red.inverse(k, j);
        CHECK(s == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("k-perp basis spans the orthogonal complement") {
  const IntMatrix B = k_perp_basis();
  REQUIRE(B.rows == kRank);
  REQUIRE(B.cols == kRank - 1);
  const auto f = fiber_generator();
  for (int c = 0; c < B.cols; ++c) {
    std::array<std::int64_t, kRank> v{};
    for (int r = 0; r < kRank; ++r) v[static_cast<std::size_t>(r)] = B(r, c);
    CHECK(pair(LatticeClass::from_ints(v), f) == 0);
  }
  // Together with a vector of pairing 1 against f, the columns form a basis of Z^10.
  IntMatrix full(kRank, kRank);
  for (int r = 0; r < kRank; ++r)
    for (int c = 0; c < B.cols; ++c) full(r, c) = B(r, c);
  full(1, kRank - 1) = 1;  // e1 . f = 1
  const std::int64_t det = determinant(full);
  CHECK((det == 1 || det == -1));
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix m(n, n);
      for (auto& x : m.data) x = d(rng);
      CHECK(static_cast<__int128>(determinant(m)) == permutation_determinant(m));
    }
}

TEST_CASE("k-perp modulo its radical is a negative definite even unimodular lattice of rank 8") {
  const IntMatrix g = k_perp_quotient_gram(SurfaceParams(3, 2));
  REQUIRE(g.rows == 8);
  REQUIRE(g.cols == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(g(i, i) % 2 == 0);
    for (int j = 0; j < 8; ++j) CHECK(g(i, j) == g(j, i));
  }
  const __int128 det = permutation_determinant(g);
  CHECK((det == 1 || det == -1));
  for (int k = 1; k <= 8; ++k) CHECK(permutation_determinant(minor_of_negated(g, k)) > 0);
  CHECK(has_even_diagonal(g));
  CHECK(is_negative_definite(g));
}

TEST_CASE("a reference root basis gives the same invariants") {
  // e1-e2, ..., e7-e8 and e0-e1-e2-e3 are simple roots of an E8 inside k-perp.
  std::vector<LatticeClass> roots;
  for (int i = 1; i <= 7; ++i) roots.push_back(LatticeClass::basis(i) - LatticeClass::basis(i + 1));
  roots.push_back(LatticeClass::basis(0) - LatticeClass::basis(1) - LatticeClass::basis(2) - LatticeClass::basis(3));
  IntMatrix g(8, 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(pair(roots[static_cast<std::size_t>(i)], fiber_generator()) == 0);
    for (int j = 0; j < 8; ++j) g(i, j) = to_int64(pair(roots[static_cast<std::size_t>(i)], roots[static_cast<std::size_t>(j)]));
  }
  CHECK(permutation_determinant(g) == 1);
  CHECK(determinant(g) == determinant(k_perp_quotient_gram(SurfaceParams(1, 1))));
  CHECK(is_negative_definite(g));
}

TEST_CASE("quotient gram does not depend on the surface") {
  const IntMatrix ref = k_perp_quotient_gram(SurfaceParams(1, 1));
  for (auto [p, q] : {std::pair{3, 2}, {5, 7}, {15, 14}}) CHECK(k_perp_quotient_gram(SurfaceParams(p, q)) == ref);
}

TEST_CASE("lattice class parsing and printing") {
  const LatticeClass x = parse_lattice_class("(1,-2,1/2,0,0,0,0,0,0,3)");
  CHECK(x[2] == make_rational(1, 2));
  CHECK(x.to_string() == "(1,-2,1/2,0,0,0,0,0,0,3)");
  CHECK_FALSE(x.is_integral());
  CHECK_THROWS_AS(x.to_ints(), std::domain_error);
  CHECK_THROWS_AS(parse_lattice_class("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lattice_class("1,2,3,4,5,6,7,8,9,10,11"), std::invalid_argument);
}
