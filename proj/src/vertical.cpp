#include "spinpoly/vertical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spinpoly {

VerticalDivisor::VerticalDivisor(std::int64_t l, std::int64_t m, std::int64_t n, const SurfaceParams& params)
    : l_(l), m_(m), n_(n), params_(params) {}

std::int64_t VerticalDivisor::degree_k() const { return l_ * params_.pq() + m_ * params_.q() + n_ * params_.p(); }

bool VerticalDivisor::is_normal() const { return 0 <= m_ && m_ < params_.p() && 0 <= n_ && n_ < params_.q(); }

VerticalDivisor VerticalDivisor::shifted(std::int64_t dl, std::int64_t dm, std::int64_t dn) const {
  return VerticalDivisor(l_ + dl, m_ + dm, n_ + dn, params_);
}

LatticeClass VerticalDivisor::lattice_class() const { return make_rational(degree_k()) * fiber_generator(); }

VerticalDivisor normalize(const VerticalDivisor& d) {
  const std::int64_t p = d.params().p(), q = d.params().q();
  const std::int64_t m = euclid_mod(d.m(), p), n = euclid_mod(d.n(), q);
  const std::int64_t l = d.l() + (d.m() - m) / p + (d.n() - n) / q;
  return VerticalDivisor(l, m, n, d.params());
}

CohomologyDims cohomology(const VerticalDivisor& d) {
  if (!d.is_normal())
    throw std::invalid_argument("cohomology needs a normalized vertical divisor, got (" + std::to_string(d.l()) +
                                "," + std::to_string(d.m()) + "," + std::to_string(d.n()) + ")");
  const std::int64_t l = d.l();
  return {std::max<std::int64_t>(l + 1, 0), std::max<std::int64_t>({l, -1 - l, 0}), std::max<std::int64_t>(-l, 0)};
}

std::int64_t h0_normalized(const VerticalDivisor& d) { return cohomology(normalize(d)).h0; }

namespace {
void require_nonnegative(std::int64_t alpha, std::int64_t beta) {
  if (alpha < 0 || beta < 0)
    throw std::invalid_argument("alpha and beta must be nonnegative, got (" + std::to_string(alpha) + "," +
                                std::to_string(beta) + ")");
}
}  // namespace

std::int64_t ext2_length_type1(const VerticalDivisor& C, std::int64_t alpha, std::int64_t beta) {
  require_nonnegative(alpha, beta);
  return h0_normalized(C) + h0_normalized(C.shifted(0, -alpha, 0)) + h0_normalized(C.shifted(0, 0, -beta)) +
         h0_normalized(C.shifted(0, -alpha, -beta));
}

std::int64_t ext2_length_type2(const VerticalDivisor& C, std::int64_t alpha, std::int64_t beta) {
  require_nonnegative(alpha, beta);
  return h0_normalized(C) + h0_normalized(C.shifted(-1, alpha, beta));
}

}  // namespace spinpoly
