#pragma once

// Brute-force reference for walls_on_segment. It searches every integral zeta
// with all coordinates in [-bound, bound] and prunes a branch only when the
// wall conditions fail for every completion of the partial vector (norm
// budget and Cauchy-Schwarz sign bounds per node). It does not use the
// segment-wide norm bound that walls_on_segment relies on.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "spinpoly/lattice.hpp"

namespace spinpoly::oracle {

struct BruteForceResult {
  std::vector<LatticeClass> walls;           // oriented with zeta.w0 > 0, sorted
  std::vector<LatticeClass> endpoint_hits;   // wall-set elements orthogonal to w0 or w1
  std::uint64_t nodes_visited = 0;
};

BruteForceResult brute_force_walls(const LatticeClass& w0, const LatticeClass& w1, const LatticeClass& c1,
                                   std::int64_t coordinate_bound = 50);

struct SegmentFixture {
  LatticeClass w0;
  LatticeClass w1;
};

/// Random segments in the forward positive cone with rational coordinates of
/// absolute value <= 3, omega^2 >= 1 at both ends, neither endpoint on a wall
/// for c1, and a segment box no wider than oracle_bound.
std::vector<SegmentFixture> random_segment_fixtures(std::size_t count, std::mt19937_64& rng, const LatticeClass& c1,
                                                   std::int64_t oracle_bound = 50);

}  // namespace spinpoly::oracle
