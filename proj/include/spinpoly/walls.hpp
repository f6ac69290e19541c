#pragma once

// Walls in the positive cone of H^2(S;R) for the Spin polynomial with first
// Chern class c1: integral zeta with zeta = c1 (mod 2) and -8 <= zeta^2 <= -1.
// A segment of periods crosses zeta^perp exactly when zeta.w0 and zeta.w1
// have opposite signs. The reduction M = (c1 - zeta)/2 decides whether the
// wall can change the invariant, via the index of the coupled Dirac operator.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spinpoly/lattice.hpp"

namespace spinpoly {

inline constexpr std::int64_t kWallSquareMin = -8;
inline constexpr std::int64_t kWallSquareMax = -1;

struct Wall {
  LatticeClass zeta;  // integral, oriented so that zeta.w0 > 0
  std::int64_t square = 0;
  /// (c1 - zeta)/2 when integral.
  std::optional<LatticeClass> reduction;
};

/// A point of the positive cone (omega^2 > 0); orientation is not imposed.
class PeriodPoint {
 public:
  /// Throws std::invalid_argument unless omega^2 > 0.
  explicit PeriodPoint(LatticeClass omega);
  const LatticeClass& omega() const { return omega_; }
  /// omega.f > 0, the component containing the fibre class in its closure.
  bool is_fibre_oriented() const;

 private:
  LatticeClass omega_;
};

/// ((C + L)^2 - Sign)/8.
Rational dirac_index(const LatticeClass& L, const LatticeClass& C);

/// ind D_{2M} > 0 or ind D_{2(c1-M)} > 0, both taken with C = -K_S.
/// Throws std::invalid_argument when M is not integral or (c1 - 2M)^2 is
/// outside [-8, -1].
bool wall_effective(const LatticeClass& M, const LatticeClass& c1, const LatticeClass& K_S);

/// Raised when an endpoint of a segment lies on a wall.
class EndpointOnWall : public std::invalid_argument {
 public:
  EndpointOnWall(const LatticeClass& zeta, int endpoint);
  const LatticeClass& zeta() const { return zeta_; }
  int endpoint() const { return endpoint_; }

 private:
  LatticeClass zeta_;
  int endpoint_;
};

/// Every wall crossed by the segment [w0, w1], each once, oriented toward w0
/// and sorted by coordinates. c1 must be integral. Throws EndpointOnWall, or
/// std::invalid_argument when the endpoints lie in opposite cone components.
std::vector<Wall> walls_on_segment(const PeriodPoint& w0, const PeriodPoint& w1, const LatticeClass& c1);

/// Bounds used by walls_on_segment: any crossing zeta satisfies
/// zeta_1^2 + ... + zeta_9^2 <= spatial_norm_bound.
struct SegmentBox {
  Rational spatial_norm_bound;
  std::int64_t coordinate_bound = 0;  // floor(sqrt(spatial_norm_bound))
};
SegmentBox segment_box(const PeriodPoint& w0, const PeriodPoint& w1);

/// Exact membership test for the wall set crossed by the segment.
bool is_crossing_wall(const LatticeClass& zeta, const LatticeClass& w0, const LatticeClass& w1,
                      const LatticeClass& c1);

/// Chamber structure governs the invariant when p1 > -7, or p1 = -8 with w2 != 0.
bool chamber_invariance_predicate(std::int64_t p1, bool w2_nonzero);

/// x multiplied by the lcm of its coordinate denominators (a positive factor).
std::vector<std::int64_t> scaled_to_integers(const LatticeClass& x);

/// Largest r with r*r <= v, for v >= 0.
std::int64_t isqrt(std::int64_t v);

}  // namespace spinpoly
