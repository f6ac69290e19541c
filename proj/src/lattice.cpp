#include "spinpoly/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinpoly {

SurfaceParams::SurfaceParams(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("multiplicities must be positive, got (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("multiplicities (" + std::to_string(p) + "," + std::to_string(q) +
                                ") are not coprime");
  if (p_ % 2 == 0) {
    std::swap(p_, q_);
    swapped_ = true;
  }
}

LatticeClass::LatticeClass() {
  for (auto& c : coords_) c = 0;
}

LatticeClass::LatticeClass(Coords coords) : coords_(std::move(coords)) {}

LatticeClass LatticeClass::basis(int i) {
  if (i < 0 || i >= kRank) throw std::out_of_range("basis index " + std::to_string(i));
  LatticeClass e;
  e.coords_[static_cast<std::size_t>(i)] = 1;
  return e;
}

LatticeClass LatticeClass::from_ints(const std::array<std::int64_t, kRank>& v) {
  LatticeClass x;
  for (int i = 0; i < kRank; ++i) x.coords_[static_cast<std::size_t>(i)] = make_rational(v[static_cast<std::size_t>(i)]);
  return x;
}

bool LatticeClass::is_integral() const {
  for (const auto& c : coords_)
    if (!is_integer(c)) return false;
  return true;
}

bool LatticeClass::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

std::array<std::int64_t, kRank> LatticeClass::to_ints() const {
  std::array<std::int64_t, kRank> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = to_int64(coords_[i]);
  return out;
}

LatticeClass& LatticeClass::operator+=(const LatticeClass& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LatticeClass& LatticeClass::operator-=(const LatticeClass& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

LatticeClass& LatticeClass::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::string LatticeClass::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i].get_str();
  os << ')';
  return os.str();
}

Rational pair(const LatticeClass& x, const LatticeClass& y) {
  Rational s = x[0] * y[0];
  for (int i = 1; i < kRank; ++i) s -= x[i] * y[i];
  return s;
}

Rational self_intersection(const LatticeClass& x) { return pair(x, x); }

LatticeClass parse_lattice_class(const std::string& text) {
  std::string s = text;
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) s.erase(s.begin());
  if (!s.empty() && (s.back() == ')' || s.back() == ']')) s.pop_back();
  LatticeClass::Coords coords;
  std::size_t count = 0, start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (count >= coords.size())
      throw std::invalid_argument("expected " + std::to_string(kRank) + " coordinates in '" + text + "'");
    coords[count++] = parse_rational(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (count != coords.size())
    throw std::invalid_argument("expected " + std::to_string(kRank) + " coordinates in '" + text + "', got " +
                                std::to_string(count));
  return LatticeClass(coords);
}

LatticeClass fiber_generator() {
  return LatticeClass::from_ints({3, -1, -1, -1, -1, -1, -1, -1, -1, -1});
}

LatticeClass DistinguishedClasses::c1(std::int64_t n) const { return K_S + make_rational(2 * n) * k; }

DistinguishedClasses distinguished_classes(const SurfaceParams& params) {
  const LatticeClass f = fiber_generator();
  DistinguishedClasses d;
  d.f = f;
  d.k = f;
  d.F = make_rational(params.pq()) * f;
  d.F_p = make_rational(params.q()) * f;
  d.F_q = make_rational(params.p()) * f;
  d.K_S = make_rational(params.canonical_multiple()) * f;
  return d;
}

LatticeClass transvection(const LatticeClass& y, const LatticeClass& x, const SurfaceParams& params) {
  const LatticeClass f = fiber_generator();
  if (pair(x, f) != 0) throw std::domain_error("transvection argument x=" + x.to_string() + " is not in k-perp");
  if (pair(y, f) != 0) throw std::domain_error("transvection direction y=" + y.to_string() + " is not in k-perp");
  const LatticeClass F = make_rational(params.pq()) * f;
  return x + pair(x, y) * F;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

UnimodularReduction reduce_row(const std::vector<std::int64_t>& row) {
  const int n = static_cast<int>(row.size());
  std::vector<std::int64_t> v = row;
  UnimodularReduction red{0, IntMatrix::identity(n), IntMatrix::identity(n)};
  IntMatrix& V = red.transform;
  IntMatrix& Vinv = red.inverse;

  // column_j -= t * column_i on v and V; the inverse gets row_i += t * row_j.
  auto eliminate = [&](int i, int j, std::int64_t t) {
    v[static_cast<std::size_t>(j)] -= t * v[static_cast<std::size_t>(i)];
    for (int r = 0; r < n; ++r) V(r, j) -= t * V(r, i);
    for (int c = 0; c < n; ++c) Vinv(i, c) += t * Vinv(j, c);
  };

  while (true) {
    int pivot = -1;
    for (int i = 0; i < n; ++i) {
      const auto vi = v[static_cast<std::size_t>(i)];
      if (vi != 0 && (pivot < 0 || std::llabs(vi) < std::llabs(v[static_cast<std::size_t>(pivot)]))) pivot = i;
    }
    if (pivot < 0) return red;  // zero row
    bool reduced = true;
    for (int j = 0; j < n; ++j) {
      if (j == pivot || v[static_cast<std::size_t>(j)] == 0) continue;
      eliminate(pivot, j, v[static_cast<std::size_t>(j)] / v[static_cast<std::size_t>(pivot)]);
      if (v[static_cast<std::size_t>(j)] != 0) reduced = false;
    }
    if (!reduced) continue;
    if (pivot != 0) {
      std::swap(v[0], v[static_cast<std::size_t>(pivot)]);
      for (int r = 0; r < n; ++r) std::swap(V(r, 0), V(r, pivot));
      for (int c = 0; c < n; ++c) std::swap(Vinv(0, c), Vinv(pivot, c));
    }
    if (v[0] < 0) {
      v[0] = -v[0];
      for (int r = 0; r < n; ++r) V(r, 0) = -V(r, 0);
      for (int c = 0; c < n; ++c) Vinv(0, c) = -Vinv(0, c);
    }
    red.gcd = v[0];
    return red;
  }
}

namespace {

std::vector<std::int64_t> fiber_ints() {
  const auto f = fiber_generator().to_ints();
  return {f.begin(), f.end()};
}

// Gram diag(+1,-1,...,-1) applied to an integer vector.
std::vector<std::int64_t> gram_times(const std::vector<std::int64_t>& x) {
  std::vector<std::int64_t> out = x;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

std::int64_t pair_ints(const IntMatrix& B, int i, int j) {
  std::int64_t s = B(0, i) * B(0, j);
  for (int r = 1; r < B.rows; ++r) s -= B(r, i) * B(r, j);
  return s;
}

}  // namespace

IntMatrix k_perp_basis() {
  const UnimodularReduction red = reduce_row(gram_times(fiber_ints()));
  if (red.gcd != 1) throw std::logic_error("fibre generator is not primitive");
  IntMatrix B(kRank, kRank - 1);
  for (int r = 0; r < kRank; ++r)
    for (int c = 1; c < kRank; ++c) B(r, c - 1) = red.transform(r, c);
  return B;
}

IntMatrix k_perp_quotient_gram(const SurfaceParams& /*params*/) {
  const int n = kRank;
  const UnimodularReduction red = reduce_row(gram_times(fiber_ints()));
  const std::vector<std::int64_t> f = fiber_ints();

  // Coordinates of f in the basis given by the columns of red.transform; the
  // first coordinate vanishes because f is isotropic.
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n - 1), 0);
  for (int i = 1; i < n; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s += red.inverse(i, j) * f[static_cast<std::size_t>(j)];
    coeffs[static_cast<std::size_t>(i - 1)] = s;
  }
  const IntMatrix B = k_perp_basis();

  // Change basis so that the first kernel vector is f itself: B' = B * W^{-T}.
  const UnimodularReduction cred = reduce_row(coeffs);
  if (cred.gcd != 1) throw std::logic_error("fibre generator is not primitive in k-perp");
  IntMatrix Bp(n, n - 1);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n - 1; ++c) {
      std::int64_t s = 0;
      for (int j = 0; j < n - 1; ++j) s += B(r, j) * cred.inverse(c, j);
      Bp(r, c) = s;
    }
  for (int r = 0; r < n; ++r)
    if (Bp(r, 0) != f[static_cast<std::size_t>(r)]) throw std::logic_error("radical basis vector mismatch");

  IntMatrix G(n - 2, n - 2);
  for (int i = 1; i < n - 1; ++i)
    for (int j = 1; j < n - 1; ++j) G(i - 1, j - 1) = pair_ints(Bp, i, j);
  return G;
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  std::vector<__int128> a(m.data.begin(), m.data.end());
  auto at = [&](int i, int j) -> __int128& { return a[static_cast<std::size_t>(i * n + j)]; };
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return static_cast<std::int64_t>(sign * at(n - 1, n - 1));
}

bool has_even_diagonal(const IntMatrix& m) {
  for (int i = 0; i < std::min(m.rows, m.cols); ++i)
    if (m(i, i) % 2 != 0) return false;
  return true;
}

bool is_negative_definite(const IntMatrix& m) {
  if (m.rows != m.cols) return false;
  for (int k = 1; k <= m.rows; ++k) {
    IntMatrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = -m(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

}  // namespace spinpoly
