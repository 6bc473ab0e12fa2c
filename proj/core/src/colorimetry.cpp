// SPDX-License-Identifier: Apache-2.0

#include "puspec/colorimetry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>

#include "puspec/cie_tables.hpp"
#include "puspec/error.hpp"

namespace puspec {

namespace {

// Linear interpolation of a 5 nm table at an arbitrary wavelength.
template <typename Fn>
double sample_table(double lambda, Fn&& at) {
  const double u = (lambda - cie::kTableStart) / cie::kTableStep;
  if (u <= 0.0) return at(0);
  const auto last = cie::kTableSize - 1;
  if (u >= static_cast<double>(last)) return at(last);
  const auto i = static_cast<std::size_t>(u);
  const double t = u - static_cast<double>(i);
  if (t == 0.0) return at(i);
  return (1.0 - t) * at(i) + t * at(i + 1);
}

Observer make_observer() {
  Observer obs;
  obs.grid = WavelengthGrid::visible();
  const std::size_t n = obs.grid.count;
  obs.xbar.resize(n);
  obs.ybar.resize(n);
  obs.zbar.resize(n);
  obs.quadrature.assign(n, obs.grid.step);
  obs.quadrature.front() *= 0.5;
  obs.quadrature.back() *= 0.5;
  for (std::size_t i = 0; i < n; ++i) {
    const double l = obs.grid[i];
    obs.xbar[i] = sample_table(l, [](std::size_t j) { return cie::kCmf1931[j][0]; });
    obs.ybar[i] = sample_table(l, [](std::size_t j) { return cie::kCmf1931[j][1]; });
    obs.zbar[i] = sample_table(l, [](std::size_t j) { return cie::kCmf1931[j][2]; });
  }
  return obs;
}

Illuminant make_illuminant(std::string name, const std::array<double, cie::kTableSize>* table) {
  const Observer& obs = cie1931();
  std::vector<double> spd(obs.grid.count, 1.0);
  if (table != nullptr) {
    for (std::size_t i = 0; i < spd.size(); ++i)
      spd[i] = sample_table(obs.grid[i], [table](std::size_t j) { return (*table)[j]; });
  }
  double norm = 0.0;
  for (std::size_t i = 0; i < spd.size(); ++i) norm += obs.quadrature[i] * spd[i] * obs.ybar[i];
  return Illuminant{std::move(name), SpectralCurve(obs.grid, std::move(spd)), norm};
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

}  // namespace

SpectralCurve::SpectralCurve(WavelengthGrid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (grid.count != values.size())
    fail(ErrorCode::length_mismatch, "spectral curve: grid has " + std::to_string(grid.count) +
                                         " points but " + std::to_string(values.size()) +
                                         " values were given");
  if (!(grid.step > 0.0)) fail(ErrorCode::grid_mismatch, "spectral curve: step must be positive");
}

SpectralCurve SpectralCurve::constant(double value, WavelengthGrid g) {
  return SpectralCurve(g, std::vector<double>(g.count, value));
}

bool SpectralCurve::is_bounded() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return v >= 0.0 && v <= 1.0; });
}

const Observer& cie1931() {
  static const Observer obs = make_observer();
  return obs;
}

const Illuminant& illuminant_e() {
  static const Illuminant ill = make_illuminant("E", nullptr);
  return ill;
}

const Illuminant& illuminant_d65() {
  static const Illuminant ill = make_illuminant("D65", &cie::kD65);
  return ill;
}

const Illuminant& illuminant_f2() {
  static const Illuminant ill = make_illuminant("F2", &cie::kF2);
  return ill;
}

const Illuminant& illuminant_by_name(std::string_view name) {
  const std::string key = upper(name);
  if (key == "E") return illuminant_e();
  if (key == "D65") return illuminant_d65();
  if (key == "F2" || key == "FL2") return illuminant_f2();
  fail(ErrorCode::invalid_argument, "unknown illuminant '" + std::string(name) + "'");
}

ColorXYZ integrate_samples(std::span<const double> values, const Illuminant& illuminant) {
  const Observer& obs = cie1931();
  if (values.size() != obs.grid.count)
    fail(ErrorCode::grid_mismatch, "integrate: expected " + std::to_string(obs.grid.count) +
                                       " samples on the visible grid, got " +
                                       std::to_string(values.size()));
  const auto& spd = illuminant.spd.values;
  double X = 0.0, Y = 0.0, Z = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double e = obs.quadrature[i] * values[i] * spd[i];
    X += e * obs.xbar[i];
    Y += e * obs.ybar[i];
    Z += e * obs.zbar[i];
  }
  const double inv = 1.0 / illuminant.white_norm;
  return {X * inv, Y * inv, Z * inv};
}

ColorXYZ integrate_to_xyz(const SpectralCurve& spectrum) {
  return integrate_to_xyz(spectrum, illuminant_e());
}

ColorXYZ integrate_to_xyz(const SpectralCurve& spectrum, const Illuminant& illuminant) {
  if (!(spectrum.grid == cie1931().grid))
    fail(ErrorCode::grid_mismatch, "integrate: spectrum is not sampled on the 1 nm [385, 700] grid");
  return integrate_samples(spectrum.values, illuminant);
}

Chromaticity xyz_to_chromaticity(const ColorXYZ& xyz) {
  const double s = xyz.sum();
  if (!(std::abs(s) > 0.0) || !std::isfinite(s))
    fail(ErrorCode::undefined_chromaticity, "chromaticity undefined for X + Y + Z = 0");
  return {xyz.X / s, xyz.Y / s};
}

GamutPolygon spectral_locus(int step_nm) {
  const Observer& obs = cie1931();
  const int span = static_cast<int>(obs.grid.count) - 1;
  if (step_nm <= 0 || span % step_nm != 0)
    fail(ErrorCode::invalid_argument,
         "spectral locus: step " + std::to_string(step_nm) + " nm does not divide the grid");
  GamutPolygon locus;
  locus.reserve(static_cast<std::size_t>(span / step_nm + 1));
  for (int i = 0; i <= span; i += step_nm) {
    const auto k = static_cast<std::size_t>(i);
    locus.push_back(xyz_to_chromaticity({obs.xbar[k], obs.ybar[k], obs.zbar[k]}));
  }
  return locus;
}

RgbSpace rgb_space_from_name(std::string_view name) {
  const std::string key = upper(name);
  if (key == "SRGB") return RgbSpace::srgb;
  if (key == "ADOBEWIDEGAMUT" || key == "WIDE" || key == "ADOBE-WIDE-GAMUT" || key == "WIDEGAMUT")
    return RgbSpace::adobe_wide_gamut;
  fail(ErrorCode::invalid_argument, "unknown RGB space '" + std::string(name) + "'");
}

std::string_view to_string(RgbSpace space) {
  return space == RgbSpace::srgb ? "sRGB" : "AdobeWideGamut";
}

GamutPolygon rgb_gamut(RgbSpace space) {
  switch (space) {
    case RgbSpace::srgb:
      return {{0.64, 0.33}, {0.30, 0.60}, {0.15, 0.06}};
    case RgbSpace::adobe_wide_gamut:
      return {{0.7347, 0.2653}, {0.1152, 0.8264}, {0.1566, 0.0177}};
  }
  fail(ErrorCode::invalid_argument, "unknown RGB space");
}

double encode_srgb(double linear) {
  const double v = std::clamp(linear, 0.0, 1.0);
  if (v <= 0.0031308) return 12.92 * v;
  return 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
}

std::array<double, 3> encode_srgb(const std::array<double, 3>& linear) {
  return {encode_srgb(linear[0]), encode_srgb(linear[1]), encode_srgb(linear[2])};
}

std::array<double, 3> xyz_to_linear_srgb(const ColorXYZ& xyz) {
  static const Eigen::Matrix3d to_rgb = [] {
    const GamutPolygon prim = rgb_gamut(RgbSpace::srgb);
    Eigen::Matrix3d P;
    for (int j = 0; j < 3; ++j) {
      const auto& c = prim[static_cast<std::size_t>(j)];
      P.col(j) << c.x / c.y, 1.0, (1.0 - c.x - c.y) / c.y;
    }
    const ColorXYZ w = integrate_to_xyz(SpectralCurve::constant(1.0), illuminant_d65());
    const Eigen::Vector3d white(w.X / w.Y, 1.0, w.Z / w.Y);
    const Eigen::Vector3d scale = P.partialPivLu().solve(white);
    const Eigen::Matrix3d to_xyz = P * scale.asDiagonal();
    return Eigen::Matrix3d(to_xyz.inverse());
  }();
  const Eigen::Vector3d rgb = to_rgb * Eigen::Vector3d(xyz.X, xyz.Y, xyz.Z);
  return {rgb[0], rgb[1], rgb[2]};
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::grid_mismatch: return "grid_mismatch";
    case ErrorCode::undefined_chromaticity: return "undefined_chromaticity";
    case ErrorCode::out_of_gamut: return "out_of_gamut";
    case ErrorCode::boundary_singular: return "boundary_singular";
    case ErrorCode::degenerate_triangle: return "degenerate_triangle";
    case ErrorCode::infeasible: return "infeasible";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::length_mismatch: return "length_mismatch";
    case ErrorCode::constraint_infeasible: return "constraint_infeasible";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace puspec
