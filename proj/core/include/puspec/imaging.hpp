// SPDX-License-Identifier: Apache-2.0

// Flat-lit Lambertian renders of spectral albedo under two illuminants.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "puspec/colorimetry.hpp"
#include "puspec/effects.hpp"
#include "puspec/pu_basis.hpp"

namespace puspec {

/// Single-channel image with values in [0, 1], row-major.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  GrayImage() = default;
  GrayImage(int w, int h, double fill = 0.0);
  double& at(int x, int y) { return values[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
};

/// 8-bit sRGB-encoded image, row-major RGB triples.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  RgbImage() = default;
  RgbImage(int w, int h);
  std::array<std::uint8_t, 3> at(int x, int y) const;
  void set(int x, int y, const std::array<std::uint8_t, 3>& rgb);
};

struct ImagePair {
  RgbImage under_i1;
  RgbImage under_i2;
};

/// Display color of albedo sum_k w_k B_k lit by `illuminant`: normalized XYZ,
/// linear sRGB, clamped, encoded. Components in [0, 1].
std::array<double, 3> lambertian_color(std::span<const double> w, const PUBasis& basis,
                                       const Illuminant& illuminant);

std::array<double, 3> display_color(const ColorXYZ& xyz);
std::array<std::uint8_t, 3> quantize(const std::array<double, 3>& encoded);

/// Mask values >= 0.5 select `w_b`, the rest `w_a`.
ImagePair hidden_pattern(const GrayImage& mask, std::span<const double> w_a,
                         std::span<const double> w_b, const PUBasis& basis, const Illuminant& i1,
                         const Illuminant& i2);

/// `count` entries greedily spread in I2 luminance, returned in increasing
/// I2 luminance (palette members share their I1 color).
std::vector<MetamerPaletteEntry> select_by_luminance(std::span<const MetamerPaletteEntry> palette,
                                                     std::size_t count = 8);

/// Per-pixel blend of the palette with weights from a uniform quadratic
/// partition of unity on [0, 1] evaluated at the gray level.
ImagePair hidden_image(const GrayImage& gray, std::span<const MetamerPaletteEntry> palette,
                       const PUBasis& basis, const Illuminant& i1, const Illuminant& i2);

/// Blend weights of the palette for gray level `g`.
std::vector<double> gray_blend_weights(double g, std::size_t palette_size);

GrayImage read_gray_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const RgbImage& image);
void write_png(const std::filesystem::path& path, const GrayImage& image);

/// Mean of channel values over pixels where mask >= 0.5 minus where < 0.5.
std::array<double, 3> region_mean_difference(const RgbImage& image, const GrayImage& mask);

/// Pearson correlation between Rec. 709 luma of `image` and `gray`; 0 when
/// either is constant.
double luma_correlation(const RgbImage& image, const GrayImage& gray);

}  // namespace puspec
