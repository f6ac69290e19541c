#pragma once

#include <cstdint>

#include "spinpoly/lattice.hpp"

namespace spinpoly {

/// Vertical divisor l F + m F_p + n F_q on S(p,q). Because p F_p ~ F ~ q F_q,
/// the representation is unique once 0 <= m < p and 0 <= n < q.
class VerticalDivisor {
 public:
  VerticalDivisor(std::int64_t l, std::int64_t m, std::int64_t n, const SurfaceParams& params);

  std::int64_t l() const { return l_; }
  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  const SurfaceParams& params() const { return params_; }

  /// Degree against k: l pq + m q + n p.
  std::int64_t degree_k() const;
  bool is_normal() const;

  /// Adds (dl, dm, dn) coefficient-wise without normalizing.
  VerticalDivisor shifted(std::int64_t dl, std::int64_t dm, std::int64_t dn) const;

  /// Class in the lattice model: (degree_k) * f.
  LatticeClass lattice_class() const;

  bool operator==(const VerticalDivisor&) const = default;

 private:
  std::int64_t l_, m_, n_;
  SurfaceParams params_;
};

VerticalDivisor normalize(const VerticalDivisor& d);

struct CohomologyDims {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;

  std::int64_t euler_characteristic() const { return h0 - h1 + h2; }
  bool operator==(const CohomologyDims&) const = default;
};

/// h^i of O_S(lF + mF_p + nF_q); only l matters once the divisor is normal.
/// Throws std::invalid_argument on a divisor that is not in normal form.
CohomologyDims cohomology(const VerticalDivisor& d);

/// h^0 of the normalized divisor.
std::int64_t h0_normalized(const VerticalDivisor& d);

/// Ext^2 length at a generic type-1 point: sum of h^0 over
/// {C, C - alpha F_p, C - beta F_q, C - alpha F_p - beta F_q}.
std::int64_t ext2_length_type1(const VerticalDivisor& C, std::int64_t alpha, std::int64_t beta);

/// Ext^2 length at a generic type-2 point: h^0(C) + h^0(C - F + alpha F_p + beta F_q).
std::int64_t ext2_length_type2(const VerticalDivisor& C, std::int64_t alpha, std::int64_t beta);

}  // namespace spinpoly
