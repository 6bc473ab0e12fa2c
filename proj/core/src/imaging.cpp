// SPDX-License-Identifier: Apache-2.0

#include "puspec/imaging.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "puspec/error.hpp"

namespace puspec {

GrayImage::GrayImage(int w, int h, double fill) : width(w), height(h) {
  if (w < 0 || h < 0) fail(ErrorCode::invalid_argument, "image dimensions must be non-negative");
  values.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill);
}

RgbImage::RgbImage(int w, int h) : width(w), height(h) {
  if (w < 0 || h < 0) fail(ErrorCode::invalid_argument, "image dimensions must be non-negative");
  pixels.assign(3 * static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
}

std::array<std::uint8_t, 3> RgbImage::at(int x, int y) const {
  const std::size_t i = 3 * (static_cast<std::size_t>(y) * width + x);
  return {pixels[i], pixels[i + 1], pixels[i + 2]};
}

void RgbImage::set(int x, int y, const std::array<std::uint8_t, 3>& rgb) {
  const std::size_t i = 3 * (static_cast<std::size_t>(y) * width + x);
  std::copy(rgb.begin(), rgb.end(), pixels.begin() + static_cast<std::ptrdiff_t>(i));
}

std::array<double, 3> display_color(const ColorXYZ& xyz) {
  std::array<double, 3> rgb = xyz_to_linear_srgb(xyz);
  for (double& v : rgb) v = std::clamp(v, 0.0, 1.0);
  return encode_srgb(rgb);
}

std::array<std::uint8_t, 3> quantize(const std::array<double, 3>& encoded) {
  std::array<std::uint8_t, 3> out{};
  for (std::size_t c = 0; c < 3; ++c)
    out[c] = static_cast<std::uint8_t>(std::lround(std::clamp(encoded[c], 0.0, 1.0) * 255.0));
  return out;
}

std::array<double, 3> lambertian_color(std::span<const double> w, const PUBasis& basis,
                                       const Illuminant& illuminant) {
  return display_color(integrate_to_xyz(basis.reconstruct(w), illuminant));
}

ImagePair hidden_pattern(const GrayImage& mask, std::span<const double> w_a,
                         std::span<const double> w_b, const PUBasis& basis, const Illuminant& i1,
                         const Illuminant& i2) {
  if (w_a.size() != w_b.size())
    fail(ErrorCode::length_mismatch, "pattern spectra have different weight counts");
  const auto a1 = quantize(lambertian_color(w_a, basis, i1));
  const auto b1 = quantize(lambertian_color(w_b, basis, i1));
  const auto a2 = quantize(lambertian_color(w_a, basis, i2));
  const auto b2 = quantize(lambertian_color(w_b, basis, i2));
  ImagePair out{RgbImage(mask.width, mask.height), RgbImage(mask.width, mask.height)};
  for (int y = 0; y < mask.height; ++y)
    for (int x = 0; x < mask.width; ++x) {
      const bool b = mask.at(x, y) >= 0.5;
      out.under_i1.set(x, y, b ? b1 : a1);
      out.under_i2.set(x, y, b ? b2 : a2);
    }
  return out;
}

std::vector<MetamerPaletteEntry> select_by_luminance(std::span<const MetamerPaletteEntry> palette,
                                                     std::size_t count) {
  if (count < 2) fail(ErrorCode::invalid_argument, "luminance selection needs at least 2 entries");
  if (palette.size() < count)
    fail(ErrorCode::invalid_argument, "palette has " + std::to_string(palette.size()) +
                                          " entries, " + std::to_string(count) + " requested");
  std::vector<std::size_t> order(palette.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto lum = [&](std::size_t i) { return palette[i].color_under_i2.Y; };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lum(a) < lum(b); });

  std::vector<std::size_t> chosen{order.front(), order.back()};
  std::vector<bool> used(palette.size());
  used[order.front()] = used[order.back()] = true;
  while (chosen.size() < count) {
    std::size_t best = palette.size();
    double best_gap = -1.0;
    for (std::size_t i : order) {
      if (used[i]) continue;
      double gap = std::numeric_limits<double>::infinity();
      for (std::size_t j : chosen) gap = std::min(gap, std::abs(lum(i) - lum(j)));
      if (gap > best_gap) best_gap = gap, best = i;
    }
    used[best] = true;
    chosen.push_back(best);
  }
  std::sort(chosen.begin(), chosen.end(), [&](std::size_t a, std::size_t b) { return lum(a) < lum(b); });

  std::vector<MetamerPaletteEntry> out;
  for (std::size_t i : chosen) out.push_back(palette[i]);
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!(out[i].color_under_i2.Y > out[i - 1].color_under_i2.Y))
      fail(ErrorCode::invalid_argument, "palette luminances under the second illuminant are not distinct");
  return out;
}

std::vector<double> gray_blend_weights(double g, std::size_t palette_size) {
  static thread_local std::size_t cached_size = 0;
  static thread_local QuadraticBSpline spline;
  if (palette_size < 3) fail(ErrorCode::invalid_argument, "gray blending needs at least 3 entries");
  if (cached_size != palette_size) {
    spline = QuadraticBSpline(build_knots(static_cast<int>(palette_size), {}, 0.0, 0.0, 1.0));
    cached_size = palette_size;
  }
  std::vector<double> beta(palette_size);
  spline.evaluate_all(std::clamp(g, 0.0, 1.0), beta);
  return beta;
}

ImagePair hidden_image(const GrayImage& gray, std::span<const MetamerPaletteEntry> palette,
                       const PUBasis& basis, const Illuminant& i1, const Illuminant& i2) {
  const std::size_t n = palette.size();
  if (n < 3) fail(ErrorCode::invalid_argument, "hidden image needs at least 3 palette entries");
  for (std::size_t i = 1; i < n; ++i)
    if (!(palette[i].color_under_i2.Y > palette[i - 1].color_under_i2.Y))
      fail(ErrorCode::invalid_argument, "palette must be ordered by strictly increasing luminance");

  std::vector<ColorXYZ> c1(n), c2(n);
  for (std::size_t j = 0; j < n; ++j) {
    const SpectralCurve s = basis.reconstruct(palette[j].w);
    c1[j] = integrate_to_xyz(s, i1);
    c2[j] = integrate_to_xyz(s, i2);
  }
  ImagePair out{RgbImage(gray.width, gray.height), RgbImage(gray.width, gray.height)};
  for (int y = 0; y < gray.height; ++y)
    for (int x = 0; x < gray.width; ++x) {
      const std::vector<double> beta = gray_blend_weights(gray.at(x, y), n);
      ColorXYZ x1, x2;
      for (std::size_t j = 0; j < n; ++j) {
        x1 += beta[j] * c1[j];
        x2 += beta[j] * c2[j];
      }
      out.under_i1.set(x, y, quantize(display_color(x1)));
      out.under_i2.set(x, y, quantize(display_color(x2)));
    }
  return out;
}

GrayImage read_gray_png(const std::filesystem::path& path) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str()))
    fail(ErrorCode::io, "cannot read PNG '" + path.string() + "': " + image.message);
  image.format = PNG_FORMAT_GRAY;
  std::vector<png_byte> buffer(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
    png_image_free(&image);
    fail(ErrorCode::io, "cannot decode PNG '" + path.string() + "': " + image.message);
  }
  GrayImage out(static_cast<int>(image.width), static_cast<int>(image.height));
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = buffer[i] / 255.0;
  return out;
}

namespace {

void write_buffer(const std::filesystem::path& path, int width, int height, std::uint32_t format,
                  const void* data) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(width);
  image.height = static_cast<png_uint_32>(height);
  image.format = format;
  if (!png_image_write_to_file(&image, path.c_str(), 0, data, 0, nullptr))
    fail(ErrorCode::io, "cannot write PNG '" + path.string() + "': " + image.message);
}

}  // namespace

void write_png(const std::filesystem::path& path, const RgbImage& image) {
  write_buffer(path, image.width, image.height, PNG_FORMAT_RGB, image.pixels.data());
}

void write_png(const std::filesystem::path& path, const GrayImage& image) {
  std::vector<std::uint8_t> bytes(image.values.size());
  for (std::size_t i = 0; i < bytes.size(); ++i)
    bytes[i] = static_cast<std::uint8_t>(std::lround(std::clamp(image.values[i], 0.0, 1.0) * 255.0));
  write_buffer(path, image.width, image.height, PNG_FORMAT_GRAY, bytes.data());
}

std::array<double, 3> region_mean_difference(const RgbImage& image, const GrayImage& mask) {
  if (image.width != mask.width || image.height != mask.height)
    fail(ErrorCode::invalid_argument, "mask and image sizes differ");
  std::array<double, 3> on{}, off{};
  std::size_t n_on = 0, n_off = 0;
  for (int y = 0; y < image.height; ++y)
    for (int x = 0; x < image.width; ++x) {
      const auto p = image.at(x, y);
      auto& acc = mask.at(x, y) >= 0.5 ? on : off;
      (mask.at(x, y) >= 0.5 ? n_on : n_off)++;
      for (std::size_t c = 0; c < 3; ++c) acc[c] += p[c];
    }
  std::array<double, 3> d{};
  if (n_on == 0 || n_off == 0) return d;
  for (std::size_t c = 0; c < 3; ++c) d[c] = on[c] / n_on - off[c] / n_off;
  return d;
}

double luma_correlation(const RgbImage& image, const GrayImage& gray) {
  if (image.width != gray.width || image.height != gray.height)
    fail(ErrorCode::invalid_argument, "image sizes differ");
  const std::size_t n = gray.values.size();
  if (n == 0) return 0.0;
  std::vector<double> luma(n);
  for (std::size_t i = 0; i < n; ++i)
    luma[i] = 0.2126 * image.pixels[3 * i] + 0.7152 * image.pixels[3 * i + 1] + 0.0722 * image.pixels[3 * i + 2];
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < n; ++i) ma += luma[i], mb += gray.values[i];
  ma /= n, mb /= n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = luma[i] - ma, b = gray.values[i] - mb;
    sab += a * b, saa += a * a, sbb += b * b;
  }
  if (saa <= 0.0 || sbb <= 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace puspec
