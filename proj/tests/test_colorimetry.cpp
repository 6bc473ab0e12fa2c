// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "puspec/cie_tables.hpp"
#include "puspec/colorimetry.hpp"
#include "puspec/error.hpp"
#include "puspec/geometry.hpp"

namespace {

using namespace puspec;

std::array<double, 3> table_row(double lambda) {
  const double u = (lambda - cie::kTableStart) / cie::kTableStep;
  const auto i = static_cast<std::size_t>(std::floor(u));
  const double t = u - static_cast<double>(i);
  if (t == 0.0) return cie::kCmf1931[i];
  std::array<double, 3> out{};
  for (int c = 0; c < 3; ++c) out[c] = (1 - t) * cie::kCmf1931[i][c] + t * cie::kCmf1931[i + 1][c];
  return out;
}

Chromaticity row_chromaticity(const std::array<double, 3>& r) {
  const double s = r[0] + r[1] + r[2];
  return {r[0] / s, r[1] / s};
}

TEST(Colorimetry, PerfectReflectorHasUnitLuminance) {
  for (const Illuminant* ill : {&illuminant_e(), &illuminant_d65(), &illuminant_f2()}) {
    const ColorXYZ xyz = integrate_to_xyz(SpectralCurve::constant(1.0), *ill);
    EXPECT_NEAR(xyz.Y, 1.0, 1e-14) << ill->name;
  }
}

TEST(Colorimetry, ZeroSpectrumIsBlack) {
  const ColorXYZ xyz = integrate_to_xyz(SpectralCurve::constant(0.0));
  EXPECT_EQ(xyz.X, 0.0);
  EXPECT_EQ(xyz.Y, 0.0);
  EXPECT_EQ(xyz.Z, 0.0);
}

TEST(Colorimetry, NarrowBoxMatchesTableRow) {
  for (double lambda : {450.0, 550.0, 600.0}) {
    auto spike = SpectralCurve::constant(0.0);
    spike.values[static_cast<std::size_t>(lambda - kLambdaMin)] = 1.0;
    const Chromaticity c = xyz_to_chromaticity(integrate_to_xyz(spike));
    const Chromaticity ref = row_chromaticity(table_row(lambda));
    EXPECT_NEAR(c.x, ref.x, 1e-12);
    EXPECT_NEAR(c.y, ref.y, 1e-12);
  }
}

TEST(Colorimetry, ChromaticityOfUnitTriple) {
  const Chromaticity c = xyz_to_chromaticity({1.0, 1.0, 1.0});
  EXPECT_DOUBLE_EQ(c.x, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(c.y, 1.0 / 3.0);
}

TEST(Colorimetry, ChromaticityOfBlackIsUndefined) {
  try {
    xyz_to_chromaticity({0.0, 0.0, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::undefined_chromaticity);
  }
}

TEST(Colorimetry, EqualEnergyWhitePoint) {
  const Chromaticity c = xyz_to_chromaticity(integrate_to_xyz(SpectralCurve::constant(1.0)));
  EXPECT_NEAR(c.x, 1.0 / 3.0, 1e-3);
  EXPECT_NEAR(c.y, 1.0 / 3.0, 1e-3);
}

TEST(Colorimetry, DaylightWhitePointNearStandard) {
  const Chromaticity c =
      xyz_to_chromaticity(integrate_to_xyz(SpectralCurve::constant(1.0), illuminant_d65()));
  EXPECT_NEAR(c.x, 0.3127, 2e-3);
  EXPECT_NEAR(c.y, 0.3290, 2e-3);
}

TEST(Colorimetry, GridMismatchIsRejected) {
  WavelengthGrid g{380.0, 5.0, 64};
  const SpectralCurve coarse(g, std::vector<double>(64, 1.0));
  try {
    integrate_to_xyz(coarse);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::grid_mismatch);
  }
}

TEST(Colorimetry, LocusHasOneVertexPerNanometre) {
  EXPECT_EQ(spectral_locus(1).size(), 316u);
  EXPECT_EQ(spectral_locus(5).size(), 64u);
}

TEST(Colorimetry, LocusAreaMatchesIndependentShoelace) {
  std::vector<Chromaticity> ref;
  for (int l = 385; l <= 700; ++l) ref.push_back(row_chromaticity(table_row(l)));
  double twice = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const auto& p = ref[i];
    const auto& q = ref[(i + 1) % ref.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  const auto locus = spectral_locus(1);
  EXPECT_NEAR(geometry::area(locus), std::abs(twice) / 2.0, 1e-9);
  EXPECT_NEAR(geometry::area(locus), 0.3333, 5e-4);
}

TEST(Colorimetry, SrgbPrimariesInsideLocus) {
  const auto locus = spectral_locus(1);
  for (const auto& p : rgb_gamut(RgbSpace::srgb)) EXPECT_TRUE(geometry::contains(locus, p)) << p.x << "," << p.y;
}

TEST(Colorimetry, WideGamutContainsMoreGreen) {
  const auto s = rgb_gamut(RgbSpace::srgb);
  const auto w = rgb_gamut(RgbSpace::adobe_wide_gamut);
  ASSERT_EQ(s.size(), 3u);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_GT(w[1].y, s[1].y);
  EXPECT_GT(geometry::area(w), geometry::area(s));
}

TEST(Colorimetry, RgbSpaceNames) {
  EXPECT_EQ(rgb_space_from_name("srgb"), RgbSpace::srgb);
  EXPECT_EQ(rgb_space_from_name("wide"), RgbSpace::adobe_wide_gamut);
  EXPECT_THROW(rgb_space_from_name("cmyk"), Error);
}

TEST(Colorimetry, SrgbEncodingEndpointsAndClamp) {
  EXPECT_EQ(encode_srgb(0.0), 0.0);
  EXPECT_NEAR(encode_srgb(1.0), 1.0, 1e-15);
  EXPECT_EQ(encode_srgb(-0.5), 0.0);
  EXPECT_NEAR(encode_srgb(2.0), 1.0, 1e-15);
  EXPECT_NEAR(encode_srgb(0.0031308), 12.92 * 0.0031308, 1e-6);
  double prev = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double v = encode_srgb(i / 1000.0);
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST(Colorimetry, DaylightWhiteMapsToUnitRgb) {
  const auto rgb = xyz_to_linear_srgb(integrate_to_xyz(SpectralCurve::constant(1.0), illuminant_d65()));
  for (double v : rgb) EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(Colorimetry, IlluminantLookupIgnoresCase) {
  EXPECT_EQ(&illuminant_by_name("d65"), &illuminant_d65());
  EXPECT_EQ(&illuminant_by_name("FL2"), &illuminant_f2());
  EXPECT_EQ(&illuminant_by_name("e"), &illuminant_e());
  EXPECT_THROW(illuminant_by_name("A"), Error);
}

TEST(Colorimetry, IntegrationIsLinear) {
  auto a = SpectralCurve::constant(0.0);
  auto b = SpectralCurve::constant(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a.values[i] = 0.5 + 0.5 * std::sin(0.03 * static_cast<double>(i));
    b.values[i] = static_cast<double>(i % 7) / 7.0;
  }
  auto sum = a;
  for (std::size_t i = 0; i < a.size(); ++i) sum.values[i] = 0.3 * a[i] + 0.7 * b[i];
  const auto& ill = illuminant_f2();
  const ColorXYZ lhs = integrate_to_xyz(sum, ill);
  const ColorXYZ rhs = 0.3 * integrate_to_xyz(a, ill) + 0.7 * integrate_to_xyz(b, ill);
  EXPECT_NEAR(lhs.X, rhs.X, 1e-14);
  EXPECT_NEAR(lhs.Y, rhs.Y, 1e-14);
  EXPECT_NEAR(lhs.Z, rhs.Z, 1e-14);
}

}  // namespace
