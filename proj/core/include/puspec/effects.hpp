// SPDX-License-Identifier: Apache-2.0

// Depth-dependent color (Beer-Lambert powers of a transmittance) and
// illuminant-dependent color (metamers) built on top of class sampling.

#pragma once

#include <cstdint>
#include <vector>

#include "puspec/class_sampler.hpp"
#include "puspec/colorimetry.hpp"
#include "puspec/pu_basis.hpp"

namespace puspec {

inline constexpr double kDefaultReferenceDepth = 10.0;

/// Root of -ln t = t; above it single-scattering absorption would be negative.
inline constexpr double kOmegaConstant = 0.5671432904097838;

/// Pointwise T1^d.
SpectralCurve transmittance_at_depth(const SpectralCurve& T1, double depth);

struct DepthTrajectory {
  std::vector<double> depths;
  std::vector<Chromaticity> points;
  std::vector<double> luminances;
  std::vector<bool> terminal;  // color vanished; point left at E
};

/// 64 geometrically spaced depths over [0.25, 32] with d = 1 inserted.
std::vector<double> default_depth_grid();

DepthTrajectory depth_trajectory(const SpectralCurve& T1, std::span<const double> depths,
                                 const Illuminant& illuminant = illuminant_e());

struct MediumCoefficients {
  SpectralCurve sigma_s;
  SpectralCurve sigma_a;
  std::vector<bool> clamped;
};

/// sigma_s = T1, sigma_a = max(0, -ln T1 - T1).
MediumCoefficients medium_coefficients(const SpectralCurve& T1);

/// Angle of `c` around the equiluminant point, in (-pi, pi].
double hue_angle(const Chromaticity& c);

struct RepresentativeEntry {
  IndexTriple triangle{};
  std::vector<double> w;
  double achieved_luminance = 0.0;
  bool luminance_met = false;
  Chromaticity at_reference;
  double hue = 0.0;
};

struct RepresentativeSet {
  ColorTarget target;
  double d_ref = kDefaultReferenceDepth;
  std::vector<RepresentativeEntry> entries;  // clockwise: decreasing hue
};

/// One triangle-restricted solution per enclosing triangle, ordered clockwise
/// around E by chromaticity at depth `d_ref`.
RepresentativeSet representative_set(const PUBasis& basis, const ColorTarget& target,
                                     double d_ref = kDefaultReferenceDepth);

/// Convex blend of the two entries angularly bracketing `hue`.
std::vector<double> pick_by_hue(const RepresentativeSet& set, double hue);

/// Chromaticity of R0^order.
Chromaticity schlick_order(const SpectralCurve& R0, int order,
                           const Illuminant& illuminant = illuminant_e());

struct MetamerPaletteEntry {
  std::vector<double> w;
  ColorXYZ color_under_i1;
  ColorXYZ color_under_i2;
};

struct PaletteOptions {
  std::size_t count = 32;
  std::uint64_t seed = 0;
  std::size_t max_draws = 0;  // 0: 8192 * count
  SamplingOptions sampling{TrianglePolicy::random_per_sample};
};

/// Class members of `target_under_i1` with the basis premultiplied by I1.
/// Only samples meeting the luminance are kept; colors come from dense
/// integration of the reconstructed spectra.
std::vector<MetamerPaletteEntry> metameric_palette(const PUBasis& basis, const Illuminant& i1,
                                                   const Illuminant& i2,
                                                   const ColorTarget& target_under_i1,
                                                   const PaletteOptions& options = {});

}  // namespace puspec
