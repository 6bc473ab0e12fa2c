// SPDX-License-Identifier: Apache-2.0

#include "puspec/serialization.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "puspec/error.hpp"

namespace puspec {

namespace {

constexpr const char* kBasisFormat = "puspec-basis";
constexpr const char* kPaletteFormat = "puspec-palette";
constexpr int kFormatVersion = 1;

std::vector<double> doubles(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    fail(ErrorCode::invalid_argument, std::string("missing array '") + key + "'");
  return j.at(key).get<std::vector<double>>();
}

ColorXYZ xyz_from_json(const Json& j) {
  const auto v = j.get<std::vector<double>>();
  if (v.size() != 3) fail(ErrorCode::invalid_argument, "XYZ record needs 3 values");
  return {v[0], v[1], v[2]};
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) fail(ErrorCode::io, "write to '" + path.string() + "' failed");
}

Json basis_spec_to_json(const BasisSpec& spec) {
  return {{"K", spec.count},
          {"s", spec.warp.strength},
          {"p", spec.warp.position},
          {"offset_nm", spec.boundary_offset_nm}};
}

BasisSpec basis_spec_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::invalid_argument, "basis spec must be an object");
  BasisSpec spec;
  try {
    spec.count = j.value("K", spec.count);
    spec.warp.strength = j.value("s", spec.warp.strength);
    spec.warp.position = j.value("p", spec.warp.position);
    spec.boundary_offset_nm = j.value("offset_nm", spec.boundary_offset_nm);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::invalid_argument, std::string("bad basis spec: ") + e.what());
  }
  return spec;
}

Json chromaticity_to_json(const Chromaticity& c) { return Json::array({c.x, c.y}); }
Json xyz_to_json(const ColorXYZ& c) { return Json::array({c.X, c.Y, c.Z}); }

Json polygon_to_json(const GamutPolygon& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(chromaticity_to_json(c));
  return out;
}

Json basis_to_json(const PUBasis& basis) {
  Json colors = Json::array();
  for (const auto& c : basis.colors()) colors.push_back(xyz_to_json(c));
  const DesignMetrics m = evaluate_design(basis, RgbSpace::srgb);
  return {{"format", kBasisFormat},
          {"version", kFormatVersion},
          {"spec", basis_spec_to_json(basis.spec())},
          {"illuminant", basis.illuminant_tag()},
          {"knots", basis.knots()},
          {"colors", colors},
          {"chromaticities", polygon_to_json(basis.chromaticities())},
          {"excess_area_srgb", m.excess_area},
          {"smoothness_nm", m.smoothness_nm}};
}

PUBasis basis_from_json(const Json& j) {
  if (!j.is_object() || j.value("format", std::string()) != kBasisFormat)
    fail(ErrorCode::invalid_argument, "not a basis file");
  if (j.value("version", 0) != kFormatVersion)
    fail(ErrorCode::invalid_argument, "unsupported basis file version");
  PUBasis basis(basis_spec_from_json(j.at("spec")));
  const std::string tag = j.value("illuminant", std::string("E"));
  if (tag != basis.illuminant_tag()) basis = compute_basis_colors(std::move(basis), illuminant_by_name(tag));

  const auto knots = doubles(j, "knots");
  if (knots.size() != basis.knots().size())
    fail(ErrorCode::invalid_argument, "basis file knots do not match its spec");
  for (std::size_t i = 0; i < knots.size(); ++i)
    if (std::abs(knots[i] - basis.knots()[i]) > 1e-9)
      fail(ErrorCode::invalid_argument, "basis file knots do not match its spec");
  if (j.contains("colors")) {
    const auto& colors = j.at("colors");
    if (colors.size() != basis.colors().size())
      fail(ErrorCode::invalid_argument, "basis file colors do not match its spec");
    for (std::size_t k = 0; k < colors.size(); ++k) {
      const ColorXYZ c = xyz_from_json(colors[k]);
      const ColorXYZ& r = basis.colors()[k];
      if (std::abs(c.X - r.X) + std::abs(c.Y - r.Y) + std::abs(c.Z - r.Z) > 1e-9)
        fail(ErrorCode::invalid_argument, "basis file colors do not match this build");
    }
  }
  return basis;
}

Json sample_to_json(const ClassSample& s) {
  Json triangle = Json::array();
  for (int i : s.triangle)
    if (i >= 0) triangle.push_back(i);
  return {{"seed", s.seed},
          {"index", s.index},
          {"triangle", triangle},
          {"a_F", s.a_F},
          {"a", s.a},
          {"w", s.w},
          {"achieved_Y", s.achieved_luminance},
          {"luminance_met", s.luminance_met},
          {"scaled", s.scaled},
          {"boundary", s.boundary}};
}

Json samples_to_json(const PUBasis& basis, const ColorTarget& target,
                     const std::vector<ClassSample>& samples) {
  Json list = Json::array();
  std::size_t met = 0;
  for (const auto& s : samples) {
    list.push_back(sample_to_json(s));
    met += s.luminance_met;
  }
  return {{"basis", basis_spec_to_json(basis.spec())},
          {"illuminant", basis.illuminant_tag()},
          {"target", {{"c", chromaticity_to_json(target.c)}, {"Y", target.luminance}}},
          {"count", samples.size()},
          {"luminance_met", met},
          {"samples", list}};
}

Json spectrum_to_json(const SpectralCurve& curve, std::size_t stride) {
  if (stride == 0) fail(ErrorCode::invalid_argument, "stride must be positive");
  Json wl = Json::array(), v = Json::array();
  for (std::size_t i = 0; i < curve.size(); i += stride) {
    wl.push_back(curve.grid[i]);
    v.push_back(curve.values[i]);
  }
  return {{"wavelength_nm", wl}, {"value", v}};
}

std::string spectrum_csv(const SpectralCurve& curve) {
  std::string out = "wavelength_nm,value\n";
  for (std::size_t i = 0; i < curve.size(); ++i)
    out += format_double(curve.grid[i]) + "," + format_double(curve.values[i]) + "\n";
  return out;
}

std::string spectra_csv(const PUBasis& basis, const std::vector<ClassSample>& samples) {
  std::vector<SpectralCurve> curves;
  for (const auto& s : samples) curves.push_back(basis.reconstruct(s.w));
  std::string out = "wavelength_nm";
  for (const auto& s : samples) out += ",sample_" + std::to_string(s.index);
  out += "\n";
  const WavelengthGrid g = WavelengthGrid::visible();
  for (std::size_t i = 0; i < g.count; ++i) {
    out += format_double(g[i]);
    for (const auto& c : curves) out += "," + format_double(c.values[i]);
    out += "\n";
  }
  return out;
}

std::string gamut_csv(const GamutPolygon& polygon) {
  std::string out = "k,x,y\n";
  for (std::size_t k = 0; k < polygon.size(); ++k)
    out += std::to_string(k) + "," + format_double(polygon[k].x) + "," + format_double(polygon[k].y) + "\n";
  return out;
}

std::string metrics_csv(const WarpSearchResult& result) {
  std::string out = "s,p,excess_area,smoothness_nm\n";
  for (const auto& c : result.cells)
    out += format_double(c.params.strength) + "," + format_double(c.params.position) + "," +
           format_double(c.metrics.excess_area) + "," + format_double(c.metrics.smoothness_nm) + "\n";
  return out;
}

std::string trajectory_csv(const DepthTrajectory& t) {
  std::string out = "d,x,y,Y\n";
  for (std::size_t i = 0; i < t.depths.size(); ++i)
    out += format_double(t.depths[i]) + "," + format_double(t.points[i].x) + "," +
           format_double(t.points[i].y) + "," + format_double(t.luminances[i]) + "\n";
  return out;
}

Json trajectory_to_json(const DepthTrajectory& t) {
  Json points = Json::array();
  for (std::size_t i = 0; i < t.depths.size(); ++i)
    points.push_back({{"d", t.depths[i]},
                      {"x", t.points[i].x},
                      {"y", t.points[i].y},
                      {"Y", t.luminances[i]},
                      {"terminal", static_cast<bool>(t.terminal[i])}});
  return points;
}

Json representatives_to_json(const RepresentativeSet& set) {
  Json entries = Json::array();
  for (const auto& e : set.entries)
    entries.push_back({{"triangle", e.triangle},
                       {"w", e.w},
                       {"achieved_Y", e.achieved_luminance},
                       {"luminance_met", e.luminance_met},
                       {"at_d_ref", chromaticity_to_json(e.at_reference)},
                       {"hue_rad", e.hue}});
  return {{"target", {{"c", chromaticity_to_json(set.target.c)}, {"Y", set.target.luminance}}},
          {"d_ref", set.d_ref},
          {"entries", entries}};
}

Json palette_to_json(const std::vector<MetamerPaletteEntry>& palette, const std::string& i1,
                     const std::string& i2, const ColorTarget& target) {
  Json entries = Json::array();
  for (const auto& e : palette) {
    const Chromaticity c1 = xyz_to_chromaticity(e.color_under_i1);
    const Chromaticity c2 = xyz_to_chromaticity(e.color_under_i2);
    entries.push_back({{"w", e.w},
                       {"xyz_i1", xyz_to_json(e.color_under_i1)},
                       {"xyz_i2", xyz_to_json(e.color_under_i2)},
                       {"xy_i1", chromaticity_to_json(c1)},
                       {"xy_i2", chromaticity_to_json(c2)}});
  }
  return {{"format", kPaletteFormat},
          {"version", kFormatVersion},
          {"i1", i1},
          {"i2", i2},
          {"target", {{"c", chromaticity_to_json(target.c)}, {"Y", target.luminance}}},
          {"entries", entries}};
}

std::vector<MetamerPaletteEntry> palette_from_json(const Json& j) {
  if (!j.is_object() || j.value("format", std::string()) != kPaletteFormat)
    fail(ErrorCode::invalid_argument, "not a palette file");
  std::vector<MetamerPaletteEntry> out;
  try {
    for (const auto& e : j.at("entries"))
      out.push_back({e.at("w").get<std::vector<double>>(), xyz_from_json(e.at("xyz_i1")),
                     xyz_from_json(e.at("xyz_i2"))});
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::invalid_argument, std::string("bad palette file: ") + e.what());
  }
  return out;
}

}  // namespace puspec
