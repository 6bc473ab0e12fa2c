// SPDX-License-Identifier: Apache-2.0

// Test-side oracles and hand-rolled generators.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "puspec/colorimetry.hpp"
#include "puspec/pu_basis.hpp"

namespace puspec::testkit {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  std::uint64_t seed() { return engine_(); }

  std::vector<double> unit_vector(std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = uniform();
    return v;
  }

  /// Random basis shape, warped or not.
  BasisSpec basis_spec(int k_lo = 4, int k_hi = 11) {
    BasisSpec spec;
    spec.count = integer(k_lo, k_hi);
    if (uniform() < 0.5) spec.warp = {uniform(0.0, 0.85), uniform(0.2, 0.8)};
    spec.boundary_offset_nm = uniform() < 0.5 ? 0.0 : 100.0;
    return spec;
  }

  /// Chromaticity strictly inside the basis gamut: a random convex blend of
  /// basis chromaticities pulled toward their centroid.
  Chromaticity inside(const PUBasis& basis) {
    const auto& b = basis.chromaticities();
    std::vector<double> l(b.size());
    double total = 0.0;
    for (auto& v : l) total += (v = -std::log(uniform(1e-12, 1.0)));
    Chromaticity c{0.0, 0.0}, mean{0.0, 0.0};
    for (std::size_t k = 0; k < b.size(); ++k) {
      c.x += l[k] / total * b[k].x;
      c.y += l[k] / total * b[k].y;
      mean.x += b[k].x / static_cast<double>(b.size());
      mean.y += b[k].y / static_cast<double>(b.size());
    }
    const double t = uniform(0.3, 0.9);
    return {t * c.x + (1 - t) * mean.x, t * c.y + (1 - t) * mean.y};
  }

 private:
  std::mt19937_64 engine_;
};

/// Recursive Cox-de Boor evaluation of B-spline k of degree p.
inline double cox_de_boor(const std::vector<double>& t, int k, int p, double x) {
  if (p == 0) {
    const bool last = t[k + 1] == t.back() && x == t.back() && t[k] < t[k + 1];
    return (t[k] <= x && x < t[k + 1]) || last ? 1.0 : 0.0;
  }
  double v = 0.0;
  if (t[k + p] > t[k]) v += (x - t[k]) / (t[k + p] - t[k]) * cox_de_boor(t, k, p - 1, x);
  if (t[k + p + 1] > t[k + 1])
    v += (t[k + p + 1] - x) / (t[k + p + 1] - t[k + 1]) * cox_de_boor(t, k + 1, p - 1, x);
  return v;
}

/// Weights of (1, x, y)-homogeneous coordinates: the triangle coordinates that
/// complete the free ones, via Cramer's rule.
inline std::array<double, 3> complete_triangle(const std::vector<Chromaticity>& b,
                                               const std::array<int, 3>& tri,
                                               const std::vector<int>& free,
                                               const std::vector<double>& a_F,
                                               const Chromaticity& c) {
  double r[3] = {1.0, c.x, c.y};
  for (std::size_t j = 0; j < free.size(); ++j) {
    const auto& p = b[static_cast<std::size_t>(free[j])];
    r[0] -= a_F[j];
    r[1] -= a_F[j] * p.x;
    r[2] -= a_F[j] * p.y;
  }
  double m[3][3];
  for (int j = 0; j < 3; ++j) {
    const auto& p = b[static_cast<std::size_t>(tri[static_cast<std::size_t>(j)])];
    m[0][j] = 1.0;
    m[1][j] = p.x;
    m[2][j] = p.y;
  }
  auto det = [](double a[3][3]) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  const double d = det(m);
  std::array<double, 3> out{};
  for (int j = 0; j < 3; ++j) {
    double mj[3][3];
    for (int r0 = 0; r0 < 3; ++r0)
      for (int c0 = 0; c0 < 3; ++c0) mj[r0][c0] = c0 == j ? r[r0] : m[r0][c0];
    out[static_cast<std::size_t>(j)] = det(mj) / d;
  }
  return out;
}

inline double dist(const Chromaticity& a, const Chromaticity& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace puspec::testkit
