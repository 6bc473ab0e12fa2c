// SPDX-License-Identifier: Apache-2.0

#include "puspec/effects.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "puspec/error.hpp"

namespace puspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_positive(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

void check_unit_range(const SpectralCurve& T, const char* what) {
  for (double v : T.values)
    if (!(v >= 0.0 && v <= 1.0))
      fail(ErrorCode::invalid_argument, std::string(what) + " values must lie in [0, 1]");
}

}  // namespace

SpectralCurve transmittance_at_depth(const SpectralCurve& T1, double depth) {
  if (!(depth >= 0.0)) fail(ErrorCode::invalid_argument, "optical depth must be non-negative");
  check_unit_range(T1, "transmittance");
  SpectralCurve out = T1;
  for (double& v : out.values) v = std::pow(v, depth);
  return out;
}

std::vector<double> default_depth_grid() {
  constexpr int n = 64;
  const double lo = std::log(0.25), hi = std::log(32.0);
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = std::exp(lo + (hi - lo) * i / (n - 1));
  d.front() = 0.25;
  d.back() = 32.0;
  d.push_back(1.0);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

DepthTrajectory depth_trajectory(const SpectralCurve& T1, std::span<const double> depths,
                                 const Illuminant& illuminant) {
  check_unit_range(T1, "transmittance");
  DepthTrajectory t;
  t.depths.assign(depths.begin(), depths.end());
  t.points.resize(depths.size());
  t.luminances.resize(depths.size());
  t.terminal.resize(depths.size());
  for (std::size_t i = 0; i < depths.size(); ++i) {
    const ColorXYZ xyz = integrate_to_xyz(transmittance_at_depth(T1, depths[i]), illuminant);
    t.luminances[i] = xyz.Y;
    if (xyz.sum() > 1e-300) {
      t.points[i] = xyz_to_chromaticity(xyz);
    } else {
      t.points[i] = kEquiluminant;
      t.terminal[i] = true;
    }
  }
  return t;
}

MediumCoefficients medium_coefficients(const SpectralCurve& T1) {
  check_unit_range(T1, "transmittance");
  MediumCoefficients m{T1, T1, std::vector<bool>(T1.values.size())};
  for (std::size_t i = 0; i < T1.values.size(); ++i) {
    const double t = T1.values[i];
    if (t == 0.0)
      fail(ErrorCode::invalid_argument,
           "zero transmittance at " + std::to_string(T1.grid[i]) + " nm gives infinite extinction");
    const double raw = -std::log(t) - t;
    m.clamped[i] = t > kOmegaConstant;
    m.sigma_a.values[i] = m.clamped[i] ? 0.0 : std::max(0.0, raw);
  }
  return m;
}

double hue_angle(const Chromaticity& c) {
  return std::atan2(c.y - kEquiluminant.y, c.x - kEquiluminant.x);
}

RepresentativeSet representative_set(const PUBasis& basis, const ColorTarget& target, double d_ref) {
  if (!(d_ref > 0.0)) fail(ErrorCode::invalid_argument, "reference depth must be positive");
  const Illuminant& illuminant = illuminant_by_name(basis.illuminant_tag());
  RepresentativeSet set{target, d_ref, {}};
  for (const IndexTriple& triple : enclosing_triangles(basis, target.c)) {
    const TriangleDecomposition d = decompose(basis, triple, target.c);
    const std::vector<double> zeros(static_cast<std::size_t>(d.dof_count()), 0.0);
    const std::vector<double> a = bary_from_dof(d, zeros);
    LuminanceResult r = achieve_luminance(basis, weights_from_bary(basis, a), target.luminance);

    RepresentativeEntry e;
    e.triangle = triple;
    e.w = std::move(r.w);
    e.achieved_luminance = r.achieved_luminance;
    e.luminance_met = r.luminance_met;
    const ColorXYZ xyz = integrate_to_xyz(transmittance_at_depth(basis.reconstruct(e.w), d_ref), illuminant);
    e.at_reference = xyz.sum() > 0.0 ? xyz_to_chromaticity(xyz) : kEquiluminant;
    e.hue = hue_angle(e.at_reference);
    set.entries.push_back(std::move(e));
  }
  std::stable_sort(set.entries.begin(), set.entries.end(),
                   [](const RepresentativeEntry& a, const RepresentativeEntry& b) { return a.hue > b.hue; });
  return set;
}

std::vector<double> pick_by_hue(const RepresentativeSet& set, double hue) {
  const auto& e = set.entries;
  if (e.empty()) fail(ErrorCode::invalid_argument, "representative set is empty");
  if (e.size() == 1) return e.front().w;
  for (const auto& entry : e)
    if (wrap_positive(entry.hue - hue) == 0.0) return entry.w;

  // Walk clockwise: entry i is followed by i + 1, the last wraps to the first.
  for (std::size_t i = 0; i < e.size(); ++i) {
    const RepresentativeEntry& from = e[i];
    const RepresentativeEntry& to = e[(i + 1) % e.size()];
    const double gap = wrap_positive(from.hue - to.hue);
    const double offset = wrap_positive(from.hue - hue);
    if (gap > 0.0 && offset <= gap) {
      const double alpha = 1.0 - offset / gap;
      std::vector<double> w(from.w.size());
      for (std::size_t k = 0; k < w.size(); ++k) w[k] = alpha * from.w[k] + (1.0 - alpha) * to.w[k];
      return w;
    }
  }
  return e.front().w;
}

Chromaticity schlick_order(const SpectralCurve& R0, int order, const Illuminant& illuminant) {
  if (order < 1) fail(ErrorCode::invalid_argument, "inter-reflection order must be at least 1");
  check_unit_range(R0, "reflectance");
  return xyz_to_chromaticity(integrate_to_xyz(transmittance_at_depth(R0, order), illuminant));
}

std::vector<MetamerPaletteEntry> metameric_palette(const PUBasis& basis, const Illuminant& i1,
                                                   const Illuminant& i2,
                                                   const ColorTarget& target_under_i1,
                                                   const PaletteOptions& options) {
  const PUBasis premultiplied = compute_basis_colors(basis, i1);
  const std::size_t budget = options.max_draws ? options.max_draws : 8192 * std::max<std::size_t>(options.count, 1);

  std::vector<MetamerPaletteEntry> palette;
  if (options.count == 0) return palette;
  std::size_t drawn = 0;
  std::uint64_t batch_seed = options.seed;
  while (palette.size() < options.count && drawn < budget) {
    const std::size_t batch = std::min(budget - drawn, std::size_t{4096});
    const auto samples = sample_class(premultiplied, target_under_i1, batch, batch_seed++, options.sampling);
    drawn += batch;
    for (const ClassSample& s : samples) {
      if (!s.luminance_met) continue;
      const SpectralCurve spectrum = basis.reconstruct(s.w);
      palette.push_back({s.w, integrate_to_xyz(spectrum, i1), integrate_to_xyz(spectrum, i2)});
      if (palette.size() == options.count) break;
    }
    if (samples.size() == 1 && samples.front().boundary) break;
  }
  if (palette.size() < options.count)
    fail(ErrorCode::infeasible, "only " + std::to_string(palette.size()) + " of " +
                                    std::to_string(options.count) +
                                    " palette entries reach the target luminance");
  return palette;
}

}  // namespace puspec
