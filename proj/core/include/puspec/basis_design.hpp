// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <vector>

#include "puspec/colorimetry.hpp"
#include "puspec/pu_basis.hpp"

namespace puspec {

struct DesignMetrics {
  double excess_area = 0.0;    // signed, normalized by locus-minus-RGB area
  double smoothness_nm = 0.0;  // min FWHM over bases
};

/// Full width at half maximum of basis `k`, measured on a `step_nm` grid over
/// its support (outermost half-maximum crossings, linearly interpolated).
double fwhm(const PUBasis& basis, int k, double step_nm = 0.1);

double smoothness(const PUBasis& basis, double step_nm = 0.1);

/// [area(basis \ rgb) - area(rgb \ basis)] / [area(locus) - area(rgb)],
/// with the intersection obtained by clipping against the convex RGB gamut.
double excess_area(const GamutPolygon& basis_gamut, const GamutPolygon& rgb,
                   const GamutPolygon& locus);

DesignMetrics evaluate_design(const PUBasis& basis, RgbSpace space);

enum class SmoothnessConstraint {
  at_least,  // min FWHM >= threshold
  below,     // min FWHM < threshold
};

SmoothnessConstraint smoothness_constraint_from_name(std::string_view name);
std::string_view to_string(SmoothnessConstraint c);

struct WarpSearchOptions {
  int count = 7;
  RgbSpace space = RgbSpace::srgb;
  double threshold_nm = 20.0;
  int grid = 64;
  SmoothnessConstraint direction = SmoothnessConstraint::at_least;
  double boundary_offset_nm = 100.0;
  unsigned threads = 0;
};

struct WarpCell {
  WarpParams params;
  DesignMetrics metrics;
  bool admissible = false;
};

struct WarpSearchResult {
  WarpParams best;
  DesignMetrics best_metrics;
  std::vector<WarpCell> cells;  // row-major: strength index outer, position inner
};

/// Grid coordinates: strength s_i = i / n for i < n (s = 1 collapses every
/// interior knot onto p), position p_j = (j + 1) / (n + 1).
WarpParams warp_grid_point(int i, int j, int grid);

/// Brute-force search maximizing excess area under the smoothness constraint.
WarpSearchResult optimize_warp(const WarpSearchOptions& options);

}  // namespace puspec
