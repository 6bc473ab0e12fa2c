// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "puspec/colorimetry.hpp"

namespace puspec {

/// Two-parameter knot warp: `strength` s in [0, 1), `position` p in (0, 1).
struct WarpParams {
  double strength = 0.0;
  double position = 0.5;

  friend bool operator==(const WarpParams&, const WarpParams&) = default;
};

/// Monotone bijection of [0, 1] fixing 0, p and 1; identity for s = 0.
double warp(const WarpParams& params, double x);

/// Full degree-2 knot vector (length K + 3) over [lo, hi]: K - 1 warped
/// breakpoints with tripled ends, the outer two knots of each end pushed
/// `boundary_offset` outside the domain.
std::vector<double> build_knots(int count, const WarpParams& params, double boundary_offset = 100.0,
                                double lo = kLambdaMin, double hi = kLambdaMax);

/// Quadratic B-spline basis over an arbitrary non-decreasing knot vector.
class QuadraticBSpline {
 public:
  QuadraticBSpline() = default;
  explicit QuadraticBSpline(std::vector<double> knots);

  int count() const { return static_cast<int>(knots_.size()) - 3; }
  const std::vector<double>& knots() const { return knots_; }

  /// All basis values at `x`; `out` must hold count() entries.
  void evaluate_all(double x, std::span<double> out) const;
  double evaluate(int k, double x) const;

 private:
  std::vector<double> knots_;
};

struct BasisSpec {
  int count = 7;
  WarpParams warp{};
  double boundary_offset_nm = 100.0;

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

/// Spectral partition of unity with precomputed per-basis colors.
///
/// Basis values are cached on the visible 1 nm grid (for integration) and on
/// a 1 nm grid spanning the whole support (for maximum search). Immutable once
/// built; safe to share between threads.
class PUBasis {
 public:
  explicit PUBasis(const BasisSpec& spec);

  const BasisSpec& spec() const { return spec_; }
  int size() const { return spec_.count; }
  static constexpr int degree() { return 2; }
  const std::vector<double>& knots() const { return spline_.knots(); }

  double eval(int k, double lambda) const;
  double reconstruct(std::span<const double> w, double lambda) const;
  SpectralCurve reconstruct(std::span<const double> w) const;

  /// max over the support of sum_k w_k B_k, scanned every 1 nm.
  double max_value(std::span<const double> w) const;

  std::span<const double> grid_values(int k) const;

  const std::vector<ColorXYZ>& colors() const { return colors_; }
  const std::vector<double>& magnitudes() const { return magnitudes_; }
  const std::vector<Chromaticity>& chromaticities() const { return chromaticities_; }
  const std::vector<double>& luminances() const { return luminances_; }
  const std::string& illuminant_tag() const { return illuminant_tag_; }

  /// sum_k w_k B_k using the precomputed colors.
  ColorXYZ color_of(std::span<const double> w) const;

  friend PUBasis compute_basis_colors(PUBasis basis, const Illuminant& illuminant);

 private:
  void check_index(int k) const;
  void check_weights(std::span<const double> w) const;

  BasisSpec spec_;
  QuadraticBSpline spline_;
  std::vector<double> grid_values_;     // K x visible grid
  double support_start_ = 0.0;
  std::size_t support_count_ = 0;
  std::vector<double> support_values_;  // support grid x K (row per wavelength)

  std::vector<ColorXYZ> colors_;
  std::vector<double> magnitudes_;
  std::vector<Chromaticity> chromaticities_;
  std::vector<double> luminances_;
  std::string illuminant_tag_;
};

/// Recomputes the basis colors with every basis function premultiplied by
/// `illuminant` (equal energy gives the plain colors).
PUBasis compute_basis_colors(PUBasis basis, const Illuminant& illuminant);

/// Basis chromaticities in index order.
GamutPolygon basis_gamut(const PUBasis& basis);

}  // namespace puspec
