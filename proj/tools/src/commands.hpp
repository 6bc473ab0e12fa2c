// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace puspec::cli {

struct BasisFlags {
  int count = 7;
  double strength = 0.0;
  double position = 0.5;
  double offset_nm = 100.0;
  std::string illuminant = "E";
  std::string file;  // basis.json; overrides the shape flags
};

struct TargetFlags {
  std::optional<double> cx;
  std::optional<double> cy;
  double luminance = 0.5;
};

struct Context {
  std::vector<std::string> argv;
  std::ostream& out;
  std::string out_dir = ".";
};

struct BasisCommand {
  BasisFlags basis;
};

struct OptimizeCommand {
  int count = 7;
  std::string rgb = "srgb";
  double threshold_nm = 20.0;
  int grid = 64;
  std::string direction = "at-least";
  double offset_nm = 100.0;
  unsigned threads = 0;
};

struct SampleCommand {
  BasisFlags basis;
  TargetFlags target;
  std::size_t count = 16;
  std::uint64_t seed = 0;
  std::string policy = "first";
  int triangle_index = 0;
  unsigned threads = 0;
};

struct TrajectoryCommand {
  BasisFlags basis;
  TargetFlags target;
  std::vector<double> weights;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  std::vector<double> depths;
};

struct RepresentativesCommand {
  BasisFlags basis;
  TargetFlags target;
  double d_ref = 10.0;
};

struct PaletteCommand {
  BasisFlags basis;
  TargetFlags target;
  std::string i1 = "D65";
  std::string i2 = "F2";
  std::size_t count = 32;
  std::uint64_t seed = 0;
};

struct HideCommand {
  BasisFlags basis;
  std::string palette;
  std::string mask;
  std::string image;
  int entry_a = -1;
  int entry_b = -1;
  std::size_t levels = 8;
};

int cmd_basis(const BasisCommand& c, Context& ctx);
int cmd_optimize(const OptimizeCommand& c, Context& ctx);
int cmd_sample(const SampleCommand& c, Context& ctx);
int cmd_trajectory(const TrajectoryCommand& c, Context& ctx);
int cmd_representatives(const RepresentativesCommand& c, Context& ctx);
int cmd_palette(const PaletteCommand& c, Context& ctx);
int cmd_hide(const HideCommand& c, Context& ctx);

}  // namespace puspec::cli
