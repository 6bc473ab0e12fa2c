// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace puspec {

/// Visible interval used for every spectrum in the toolkit.
inline constexpr double kLambdaMin = 385.0;
inline constexpr double kLambdaMax = 700.0;

/// Uniform wavelength sampling, in nm.
struct WavelengthGrid {
  double start = kLambdaMin;
  double step = 1.0;
  std::size_t count = 316;

  double operator[](std::size_t i) const { return start + step * static_cast<double>(i); }
  double back() const { return (*this)[count - 1]; }

  /// 1 nm grid over [385, 700] nm; the grid all colorimetry runs on.
  static WavelengthGrid visible() { return {}; }

  friend bool operator==(const WavelengthGrid&, const WavelengthGrid&) = default;
};

struct SpectralCurve {
  WavelengthGrid grid;
  std::vector<double> values;

  SpectralCurve() = default;
  SpectralCurve(WavelengthGrid g, std::vector<double> v);

  static SpectralCurve constant(double value, WavelengthGrid g = WavelengthGrid::visible());

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }

  /// True when every sample lies in [0, 1] (reflectance / transmittance).
  bool is_bounded() const;
};

struct ColorXYZ {
  double X = 0.0;
  double Y = 0.0;
  double Z = 0.0;

  double sum() const { return X + Y + Z; }

  ColorXYZ& operator+=(const ColorXYZ& o) {
    X += o.X;
    Y += o.Y;
    Z += o.Z;
    return *this;
  }
  friend ColorXYZ operator+(ColorXYZ a, const ColorXYZ& b) { return a += b; }
  friend ColorXYZ operator*(double s, const ColorXYZ& c) { return {s * c.X, s * c.Y, s * c.Z}; }
};

struct Chromaticity {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Chromaticity&, const Chromaticity&) = default;
};

/// Equal-energy point.
inline constexpr Chromaticity kEquiluminant{1.0 / 3.0, 1.0 / 3.0};

/// Ordered polygon vertices; closure from back() to front() is implicit.
using GamutPolygon = std::vector<Chromaticity>;

struct Illuminant {
  std::string name;
  SpectralCurve spd;
  double white_norm = 0.0;  // integral of spd * ybar over the visible grid
};

/// CIE 1931 2 degree observer on the visible 1 nm grid, linearly
/// interpolated from the 5 nm table.
struct Observer {
  WavelengthGrid grid;
  std::vector<double> xbar;
  std::vector<double> ybar;
  std::vector<double> zbar;
  std::vector<double> quadrature;  // trapezoid weights (nm)
};

const Observer& cie1931();

const Illuminant& illuminant_e();
const Illuminant& illuminant_d65();
const Illuminant& illuminant_f2();

/// Case-insensitive lookup: "E", "D65", "F2" (also "FL2").
const Illuminant& illuminant_by_name(std::string_view name);

/// Tristimulus values normalized so that a perfect reflector has Y = 1 under
/// the given illuminant (equal energy when omitted).
ColorXYZ integrate_to_xyz(const SpectralCurve& spectrum);
ColorXYZ integrate_to_xyz(const SpectralCurve& spectrum, const Illuminant& illuminant);

/// Same, for raw samples already on the visible grid.
ColorXYZ integrate_samples(std::span<const double> values, const Illuminant& illuminant);

Chromaticity xyz_to_chromaticity(const ColorXYZ& xyz);

/// Monochromatic chromaticities over [385, 700] nm every `step_nm`.
GamutPolygon spectral_locus(int step_nm = 1);

enum class RgbSpace { srgb, adobe_wide_gamut };

RgbSpace rgb_space_from_name(std::string_view name);
std::string_view to_string(RgbSpace space);

GamutPolygon rgb_gamut(RgbSpace space);

/// Standard sRGB transfer function, input clamped to [0, 1].
double encode_srgb(double linear);
std::array<double, 3> encode_srgb(const std::array<double, 3>& linear);

/// Linear sRGB from XYZ. The matrix is derived from the sRGB primaries and
/// the D65 white point of the embedded tables, so that a perfect reflector
/// under D65 maps to exactly (1, 1, 1).
std::array<double, 3> xyz_to_linear_srgb(const ColorXYZ& xyz);

}  // namespace puspec
