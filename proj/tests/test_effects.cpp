// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "puspec/effects.hpp"
#include "puspec/error.hpp"
#include "support.hpp"

namespace {

using namespace puspec;

SpectralCurve ramp(double lo, double hi) {
  auto f = SpectralCurve::constant(0.0);
  for (std::size_t i = 0; i < f.size(); ++i) f.values[i] = lo + (hi - lo) * static_cast<double>(i) / 315.0;
  return f;
}

double wrap(double a) {
  while (a <= -M_PI) a += 2 * M_PI;
  while (a > M_PI) a -= 2 * M_PI;
  return a;
}

TEST(Depth, PowersOfTransmittance) {
  const auto T1 = ramp(0.1, 0.9);
  const auto T0 = transmittance_at_depth(T1, 0.0);
  const auto T3 = transmittance_at_depth(T1, 3.0);
  for (std::size_t i = 0; i < T1.size(); ++i) {
    EXPECT_EQ(T0[i], 1.0);
    EXPECT_NEAR(T3[i], T1[i] * T1[i] * T1[i], 1e-15);
  }
  EXPECT_EQ(transmittance_at_depth(T1, 1.0).values, T1.values);
  EXPECT_THROW(transmittance_at_depth(T1, -1.0), Error);
  EXPECT_THROW(transmittance_at_depth(ramp(0.0, 1.5), 1.0), Error);
}

TEST(Depth, DefaultGrid) {
  const auto d = default_depth_grid();
  EXPECT_TRUE(std::is_sorted(d.begin(), d.end()));
  EXPECT_EQ(std::adjacent_find(d.begin(), d.end()), d.end());
  EXPECT_NE(std::find(d.begin(), d.end(), 1.0), d.end());
  EXPECT_NEAR(d.front(), 0.25, 1e-12);
  EXPECT_NEAR(d.back(), 32.0, 1e-12);
}

TEST(Depth, FlatSpectrumStaysAtWhite) {
  const auto T1 = SpectralCurve::constant(0.5);
  const std::vector<double> depths{0.5, 1.0, 4.0};
  const auto t = depth_trajectory(T1, depths);
  for (std::size_t i = 0; i < depths.size(); ++i) {
    EXPECT_NEAR(t.points[i].x, 1.0 / 3.0, 2e-3);
    EXPECT_NEAR(t.luminances[i], std::pow(0.5, depths[i]), 1e-12);
    EXPECT_FALSE(t.terminal[i]);
  }
}

TEST(Depth, VanishingColorIsTerminal) {
  const auto t = depth_trajectory(SpectralCurve::constant(0.0), std::vector<double>{1.0});
  EXPECT_TRUE(t.terminal[0]);
  EXPECT_EQ(t.points[0], kEquiluminant);
}

TEST(Depth, UnitDepthMatchesDirectChromaticity) {
  const auto T1 = ramp(0.2, 0.95);
  const auto t = depth_trajectory(T1, std::vector<double>{1.0}, illuminant_d65());
  const Chromaticity c = xyz_to_chromaticity(integrate_to_xyz(T1, illuminant_d65()));
  EXPECT_EQ(t.points[0], c);
}

TEST(Medium, CoefficientsAndClamping) {
  auto T1 = SpectralCurve::constant(0.9);
  T1.values[0] = std::exp(-1.0);
  T1.values[1] = kOmegaConstant;
  const auto m = medium_coefficients(T1);
  EXPECT_NEAR(m.sigma_a[0], 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_NEAR(m.sigma_a[0], 0.6321, 1e-4);
  EXPECT_FALSE(m.clamped[0]);
  EXPECT_NEAR(m.sigma_a[1], 0.0, 1e-12);
  EXPECT_EQ(m.sigma_a[5], 0.0);
  EXPECT_TRUE(m.clamped[5]);
  EXPECT_EQ(m.sigma_s[5], 0.9);
  T1.values[2] = 0.0;
  EXPECT_THROW(medium_coefficients(T1), Error);
}

TEST(Hue, AxisAngles) {
  EXPECT_NEAR(hue_angle({1.0 / 3.0 + 0.1, 1.0 / 3.0}), 0.0, 1e-15);
  EXPECT_NEAR(hue_angle({1.0 / 3.0, 1.0 / 3.0 + 0.1}), M_PI / 2, 1e-15);
  EXPECT_NEAR(hue_angle({1.0 / 3.0 - 0.1, 1.0 / 3.0}), M_PI, 1e-15);
}

TEST(Representatives, OnePerTriangleInClockwiseOrder) {
  const PUBasis basis(BasisSpec{11, {0.66, 0.39}});
  const ColorTarget target{{0.38, 0.45}, 0.46};
  const auto set = representative_set(basis, target);
  EXPECT_EQ(set.entries.size(), enclosing_triangles(basis, target.c).size());
  for (std::size_t i = 1; i < set.entries.size(); ++i) EXPECT_GE(set.entries[i - 1].hue, set.entries[i].hue);
  for (const auto& e : set.entries) {
    const auto T1 = basis.reconstruct(e.w);
    EXPECT_LT(testkit::dist(xyz_to_chromaticity(integrate_to_xyz(T1)), target.c), 1e-6);
    const Chromaticity at_ref = xyz_to_chromaticity(integrate_to_xyz(transmittance_at_depth(T1, set.d_ref)));
    EXPECT_LT(testkit::dist(at_ref, e.at_reference), 1e-12);
    EXPECT_NEAR(e.hue, hue_angle(e.at_reference), 1e-15);
  }
  EXPECT_THROW(representative_set(basis, target, 0.0), Error);
}

TEST(Representatives, PickByHueReturnsExactEntries) {
  const PUBasis basis(BasisSpec{9});
  const auto set = representative_set(basis, {{0.35, 0.38}, 0.3});
  ASSERT_GT(set.entries.size(), 1u);
  for (const auto& e : set.entries) EXPECT_EQ(pick_by_hue(set, e.hue), e.w);
}

TEST(Representatives, PickByHueBlendsBracketingPair) {
  const PUBasis basis(BasisSpec{9});
  const ColorTarget target{{0.35, 0.38}, 0.3};
  const auto set = representative_set(basis, target);
  ASSERT_GT(set.entries.size(), 1u);
  testkit::Gen gen(41);
  for (int trial = 0; trial < 50; ++trial) {
    const double hue = gen.uniform(-M_PI, M_PI);
    const auto w = pick_by_hue(set, hue);
    EXPECT_LT(testkit::dist(xyz_to_chromaticity(basis.color_of(w)), target.c), 1e-9);
    EXPECT_LE(basis.max_value(w), 1.0 + 1e-9);
    bool bracketed = false;
    for (std::size_t i = 0; i < set.entries.size(); ++i) {
      const auto& a = set.entries[i];
      const auto& b = set.entries[(i + 1) % set.entries.size()];
      const double gap = wrap(a.hue - b.hue), offset = wrap(a.hue - hue);
      if (gap > 0 && offset >= 0 && offset <= gap) {
        const double alpha = 1 - offset / gap;
        for (std::size_t k = 0; k < w.size(); ++k)
          EXPECT_NEAR(w[k], alpha * a.w[k] + (1 - alpha) * b.w[k], 1e-12);
        bracketed = true;
        break;
      }
    }
    if (!bracketed) EXPECT_EQ(w, set.entries.front().w);
  }
  EXPECT_THROW(pick_by_hue(RepresentativeSet{}, 0.0), Error);
}

TEST(Schlick, FirstOrderIsBaseColor) {
  const auto R0 = ramp(0.3, 0.8);
  EXPECT_EQ(schlick_order(R0, 1), xyz_to_chromaticity(integrate_to_xyz(R0)));
  const Chromaticity c2 = schlick_order(R0, 2);
  EXPECT_GT(c2.x, schlick_order(R0, 1).x);
  EXPECT_THROW(schlick_order(R0, 0), Error);
}

TEST(Palette, MetamersUnderFirstIlluminant) {
  const PUBasis basis(BasisSpec{7});
  const Chromaticity white = xyz_to_chromaticity(integrate_to_xyz(SpectralCurve::constant(1.0), illuminant_d65()));
  PaletteOptions options;
  options.count = 8;
  options.seed = 3;
  const auto palette = metameric_palette(basis, illuminant_d65(), illuminant_f2(), {white, 0.5}, options);
  ASSERT_EQ(palette.size(), 8u);
  for (const auto& e : palette) {
    const auto f = basis.reconstruct(e.w);
    EXPECT_TRUE(f.is_bounded());
    const ColorXYZ c1 = integrate_to_xyz(f, illuminant_d65());
    const ColorXYZ c2 = integrate_to_xyz(f, illuminant_f2());
    EXPECT_NEAR(c1.Y, e.color_under_i1.Y, 1e-12);
    EXPECT_NEAR(c2.X, e.color_under_i2.X, 1e-12);
    EXPECT_LT(testkit::dist(xyz_to_chromaticity(c1), white), 1e-6);
    EXPECT_NEAR(c1.Y, 0.5, 1e-6);
  }
}

TEST(Palette, ReportsUnreachableLuminance) {
  const PUBasis basis(BasisSpec{5});
  PaletteOptions options;
  options.count = 4;
  options.max_draws = 256;
  try {
    metameric_palette(basis, illuminant_d65(), illuminant_f2(), {{0.25, 0.30}, 0.99}, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::infeasible);
  }
}

}  // namespace
