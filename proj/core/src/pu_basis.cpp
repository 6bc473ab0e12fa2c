// SPDX-License-Identifier: Apache-2.0

#include "puspec/pu_basis.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "puspec/error.hpp"

namespace puspec {

double warp(const WarpParams& params, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double c = 2.0 / (1.0 + params.strength) - 1.0;
  const double p = params.position;
  if (x <= p) return std::pow(x, c) / std::pow(p, c - 1.0);
  return 1.0 - std::pow(1.0 - x, c) / std::pow(1.0 - p, c - 1.0);
}

std::vector<double> build_knots(int count, const WarpParams& params, double boundary_offset,
                                double lo, double hi) {
  if (count < 3)
    fail(ErrorCode::invalid_argument,
         "basis count must be at least 3, got " + std::to_string(count));
  if (!(params.strength >= 0.0 && params.strength < 1.0))
    fail(ErrorCode::invalid_argument, "warp strength must lie in [0, 1)");
  if (!(params.position > 0.0 && params.position < 1.0))
    fail(ErrorCode::invalid_argument, "warp position must lie in (0, 1)");
  if (!(boundary_offset >= 0.0) || !std::isfinite(boundary_offset))
    fail(ErrorCode::invalid_argument, "boundary offset must be non-negative");
  if (!(hi > lo)) fail(ErrorCode::invalid_argument, "empty knot domain");

  const int breaks = count - 1;
  std::vector<double> kappa(static_cast<std::size_t>(breaks));
  for (int k = 0; k < breaks; ++k) {
    const double u = static_cast<double>(k) / static_cast<double>(breaks - 1);
    kappa[static_cast<std::size_t>(k)] = lo + warp(params, u) * (hi - lo);
  }
  kappa.front() = lo;
  kappa.back() = hi;
  for (std::size_t k = 1; k < kappa.size(); ++k) {
    if (!(kappa[k] > kappa[k - 1]))
      fail(ErrorCode::invalid_argument, "warp parameters produce coincident breakpoints");
  }

  std::vector<double> knots;
  knots.reserve(static_cast<std::size_t>(count) + 3);
  knots.push_back(lo - boundary_offset);
  knots.push_back(lo - boundary_offset);
  knots.insert(knots.end(), kappa.begin(), kappa.end());
  knots.push_back(hi + boundary_offset);
  knots.push_back(hi + boundary_offset);
  return knots;
}

QuadraticBSpline::QuadraticBSpline(std::vector<double> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 4) fail(ErrorCode::invalid_argument, "need at least 4 knots");
  if (!std::is_sorted(knots_.begin(), knots_.end()))
    fail(ErrorCode::invalid_argument, "knot vector must be non-decreasing");
  if (!(knots_.back() > knots_.front())) fail(ErrorCode::invalid_argument, "degenerate knot vector");
}

void QuadraticBSpline::evaluate_all(double x, std::span<double> out) const {
  const std::size_t n = static_cast<std::size_t>(count());
  std::fill(out.begin(), out.end(), 0.0);
  const std::size_t m = knots_.size();
  if (x < knots_.front() || x > knots_.back()) return;

  // Degree 0: the half-open interval containing x; x at the right end belongs
  // to the last non-empty interval.
  std::array<double, 32> stack{};
  std::vector<double> heap;
  double* N = stack.data();
  if (m > stack.size()) {
    heap.assign(m, 0.0);
    N = heap.data();
  }
  std::size_t span = m;
  if (x == knots_.back()) {
    for (std::size_t j = m - 1; j-- > 0;)
      if (knots_[j] < knots_[j + 1]) {
        span = j;
        break;
      }
  } else {
    span = static_cast<std::size_t>(std::upper_bound(knots_.begin(), knots_.end(), x) -
                                    knots_.begin()) -
           1;
  }
  for (std::size_t j = 0; j + 1 < m; ++j) N[j] = (j == span) ? 1.0 : 0.0;

  auto ratio = [](double num, double den) { return den > 0.0 ? num / den : 0.0; };
  for (std::size_t p = 1; p <= 2; ++p) {
    for (std::size_t j = 0; j + p + 1 < m; ++j) {
      const double left = ratio(x - knots_[j], knots_[j + p] - knots_[j]) * N[j];
      const double right =
          ratio(knots_[j + p + 1] - x, knots_[j + p + 1] - knots_[j + 1]) * N[j + 1];
      N[j] = left + right;
    }
  }
  for (std::size_t k = 0; k < n && k < out.size(); ++k) out[k] = N[k];
}

double QuadraticBSpline::evaluate(int k, double x) const {
  if (k < 0 || k >= count())
    fail(ErrorCode::index_out_of_range, "basis index " + std::to_string(k) + " out of range");
  std::vector<double> all(static_cast<std::size_t>(count()));
  evaluate_all(x, all);
  return all[static_cast<std::size_t>(k)];
}

PUBasis::PUBasis(const BasisSpec& spec)
    : spec_(spec), spline_(build_knots(spec.count, spec.warp, spec.boundary_offset_nm)) {
  const auto K = static_cast<std::size_t>(spec_.count);
  const WavelengthGrid grid = WavelengthGrid::visible();
  std::vector<double> row(K);

  grid_values_.assign(K * grid.count, 0.0);
  for (std::size_t i = 0; i < grid.count; ++i) {
    spline_.evaluate_all(grid[i], row);
    for (std::size_t k = 0; k < K; ++k) grid_values_[k * grid.count + i] = row[k];
  }

  support_start_ = knots().front();
  support_count_ = static_cast<std::size_t>(std::floor(knots().back() - support_start_)) + 1;
  support_values_.assign(K * support_count_, 0.0);
  for (std::size_t i = 0; i < support_count_; ++i) {
    spline_.evaluate_all(support_start_ + static_cast<double>(i), row);
    std::copy(row.begin(), row.end(), support_values_.begin() + static_cast<std::ptrdiff_t>(i * K));
  }

  *this = compute_basis_colors(std::move(*this), illuminant_e());
}

void PUBasis::check_index(int k) const {
  if (k < 0 || k >= size())
    fail(ErrorCode::index_out_of_range,
         "basis index " + std::to_string(k) + " out of range [0, " + std::to_string(size()) + ")");
}

void PUBasis::check_weights(std::span<const double> w) const {
  if (w.size() != static_cast<std::size_t>(size()))
    fail(ErrorCode::length_mismatch, "weight vector has " + std::to_string(w.size()) +
                                         " entries, basis has " + std::to_string(size()));
}

double PUBasis::eval(int k, double lambda) const {
  check_index(k);
  return spline_.evaluate(k, lambda);
}

double PUBasis::reconstruct(std::span<const double> w, double lambda) const {
  check_weights(w);
  std::vector<double> row(w.size());
  spline_.evaluate_all(lambda, row);
  double f = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) f += w[k] * row[k];
  return f;
}

SpectralCurve PUBasis::reconstruct(std::span<const double> w) const {
  check_weights(w);
  const WavelengthGrid grid = WavelengthGrid::visible();
  std::vector<double> values(grid.count, 0.0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0.0) continue;
    const double* b = grid_values_.data() + k * grid.count;
    for (std::size_t i = 0; i < grid.count; ++i) values[i] += w[k] * b[i];
  }
  return SpectralCurve(grid, std::move(values));
}

double PUBasis::max_value(std::span<const double> w) const {
  check_weights(w);
  const std::size_t K = w.size();
  double best = 0.0;
  for (std::size_t i = 0; i < support_count_; ++i) {
    const double* row = support_values_.data() + i * K;
    double f = 0.0;
    for (std::size_t k = 0; k < K; ++k) f += w[k] * row[k];
    best = std::max(best, f);
  }
  return best;
}

std::span<const double> PUBasis::grid_values(int k) const {
  check_index(k);
  const std::size_t n = WavelengthGrid::visible().count;
  return {grid_values_.data() + static_cast<std::size_t>(k) * n, n};
}

ColorXYZ PUBasis::color_of(std::span<const double> w) const {
  check_weights(w);
  ColorXYZ c;
  for (std::size_t k = 0; k < w.size(); ++k) c += w[k] * colors_[k];
  return c;
}

PUBasis compute_basis_colors(PUBasis basis, const Illuminant& illuminant) {
  const auto K = static_cast<std::size_t>(basis.size());
  basis.colors_.resize(K);
  basis.magnitudes_.resize(K);
  basis.chromaticities_.resize(K);
  basis.luminances_.resize(K);
  for (std::size_t k = 0; k < K; ++k) {
    const ColorXYZ c = integrate_samples(basis.grid_values(static_cast<int>(k)), illuminant);
    basis.colors_[k] = c;
    basis.magnitudes_[k] = c.sum();
    if (!(c.sum() > 0.0))
      fail(ErrorCode::invalid_argument, "basis " + std::to_string(k) + " has zero color");
    basis.chromaticities_[k] = xyz_to_chromaticity(c);
    basis.luminances_[k] = c.Y;
  }
  basis.illuminant_tag_ = illuminant.name;
  return basis;
}

GamutPolygon basis_gamut(const PUBasis& basis) { return basis.chromaticities(); }

}  // namespace puspec
