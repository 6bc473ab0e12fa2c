// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "puspec/basis_design.hpp"
#include "puspec/class_sampler.hpp"
#include "puspec/effects.hpp"
#include "puspec/pu_basis.hpp"

namespace puspec {

using Json = nlohmann::ordered_json;

/// Shortest text that parses back to the same double.
std::string format_double(double v);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

Json basis_spec_to_json(const BasisSpec& spec);
BasisSpec basis_spec_from_json(const Json& j);

/// Basis file: spec, illuminant, knots, per-basis colors and design metrics.
Json basis_to_json(const PUBasis& basis);
/// Rebuilds the basis and checks the stored knots and colors against it.
PUBasis basis_from_json(const Json& j);

Json chromaticity_to_json(const Chromaticity& c);
Json xyz_to_json(const ColorXYZ& c);
Json polygon_to_json(const GamutPolygon& p);

Json sample_to_json(const ClassSample& s);
Json samples_to_json(const PUBasis& basis, const ColorTarget& target,
                     const std::vector<ClassSample>& samples);

/// Samples of `values` every `stride` grid steps.
Json spectrum_to_json(const SpectralCurve& curve, std::size_t stride = 1);

std::string spectrum_csv(const SpectralCurve& curve);
std::string spectra_csv(const PUBasis& basis, const std::vector<ClassSample>& samples);
std::string gamut_csv(const GamutPolygon& polygon);
std::string metrics_csv(const WarpSearchResult& result);
std::string trajectory_csv(const DepthTrajectory& t);

Json trajectory_to_json(const DepthTrajectory& t);
Json representatives_to_json(const RepresentativeSet& set);

Json palette_to_json(const std::vector<MetamerPaletteEntry>& palette, const std::string& i1,
                     const std::string& i2, const ColorTarget& target);
std::vector<MetamerPaletteEntry> palette_from_json(const Json& j);

}  // namespace puspec
