// SPDX-License-Identifier: Apache-2.0

#include "puspec/basis_design.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "puspec/error.hpp"
#include "puspec/geometry.hpp"
#include "puspec/parallel.hpp"

namespace puspec {

double fwhm(const PUBasis& basis, int k, double step_nm) {
  if (k < 0 || k >= basis.size())
    fail(ErrorCode::index_out_of_range, "basis index " + std::to_string(k) + " out of range");
  if (!(step_nm > 0.0)) fail(ErrorCode::invalid_argument, "FWHM step must be positive");
  const auto& t = basis.knots();
  const double lo = t[static_cast<std::size_t>(k)];
  const double hi = t[static_cast<std::size_t>(k) + 3];
  std::vector<double> x;
  for (std::size_t i = 0; lo + step_nm * static_cast<double>(i) < hi; ++i)
    x.push_back(lo + step_nm * static_cast<double>(i));
  x.push_back(hi);  // end bases peak at the support boundary
  const std::size_t n = x.size();

  std::vector<double> v(n);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = basis.eval(k, x[i]);
    peak = std::max(peak, v[i]);
  }
  const double half = 0.5 * peak;
  std::size_t first = 0, last = n - 1;
  while (first < n && v[first] < half) ++first;
  while (last > first && v[last] < half) --last;

  double left = x[first];
  if (first > 0)
    left = x[first - 1] + (half - v[first - 1]) / (v[first] - v[first - 1]) * (x[first] - x[first - 1]);
  double right = x[last];
  if (last + 1 < n)
    right = x[last] + (v[last] - half) / (v[last] - v[last + 1]) * (x[last + 1] - x[last]);
  return right - left;
}

double smoothness(const PUBasis& basis, double step_nm) {
  double s = std::numeric_limits<double>::infinity();
  for (int k = 0; k < basis.size(); ++k) s = std::min(s, fwhm(basis, k, step_nm));
  return s;
}

double excess_area(const GamutPolygon& basis_gamut, const GamutPolygon& rgb,
                   const GamutPolygon& locus) {
  if (basis_gamut.size() < 3 || rgb.size() < 3 || locus.size() < 3)
    fail(ErrorCode::invalid_argument, "excess area needs polygons with at least 3 vertices");
  const double basis_area = geometry::area(basis_gamut);
  const double rgb_area = geometry::area(rgb);
  const double normalizer = geometry::area(locus) - rgb_area;
  if (!(basis_area > 0.0) || !(normalizer > 0.0))
    fail(ErrorCode::invalid_argument, "excess area: degenerate polygons");
  const double common = geometry::area(geometry::clip_convex(basis_gamut, rgb));
  return ((basis_area - common) - (rgb_area - common)) / normalizer;
}

DesignMetrics evaluate_design(const PUBasis& basis, RgbSpace space) {
  static const GamutPolygon locus = spectral_locus(1);
  return {excess_area(basis_gamut(basis), rgb_gamut(space), locus), smoothness(basis)};
}

SmoothnessConstraint smoothness_constraint_from_name(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key == "at-least" || key == "at_least" || key == ">=") return SmoothnessConstraint::at_least;
  if (key == "below" || key == "<") return SmoothnessConstraint::below;
  fail(ErrorCode::invalid_argument, "unknown constraint direction '" + std::string(name) + "'");
}

std::string_view to_string(SmoothnessConstraint c) {
  return c == SmoothnessConstraint::at_least ? "at-least" : "below";
}

WarpParams warp_grid_point(int i, int j, int grid) {
  const double n = static_cast<double>(grid);
  return {static_cast<double>(i) / n, static_cast<double>(j + 1) / (n + 1.0)};
}

WarpSearchResult optimize_warp(const WarpSearchOptions& options) {
  if (options.count < 4) fail(ErrorCode::invalid_argument, "warp search needs K >= 4");
  if (options.grid < 1) fail(ErrorCode::invalid_argument, "grid resolution must be positive");
  const int n = options.grid;
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

  WarpSearchResult result;
  result.cells.resize(cells);
  parallel_chunks(cells, resolve_threads(options.threads, cells), [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      const int i = static_cast<int>(c / static_cast<std::size_t>(n));
      const int j = static_cast<int>(c % static_cast<std::size_t>(n));
      WarpCell& cell = result.cells[c];
      cell.params = warp_grid_point(i, j, n);
      const PUBasis basis({options.count, cell.params, options.boundary_offset_nm});
      cell.metrics = evaluate_design(basis, options.space);
      cell.admissible = options.direction == SmoothnessConstraint::at_least
                            ? cell.metrics.smoothness_nm >= options.threshold_nm
                            : cell.metrics.smoothness_nm < options.threshold_nm;
    }
  });

  const WarpCell* best = nullptr;
  for (const WarpCell& cell : result.cells)
    if (cell.admissible && (best == nullptr || cell.metrics.excess_area > best->metrics.excess_area))
      best = &cell;
  if (best == nullptr)
    fail(ErrorCode::constraint_infeasible, "no grid point satisfies the smoothness constraint");
  result.best = best->params;
  result.best_metrics = best->metrics;
  return result;
}

}  // namespace puspec
