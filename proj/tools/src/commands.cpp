// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>

#include "manifest.hpp"
#include "puspec/basis_design.hpp"
#include "puspec/effects.hpp"
#include "puspec/error.hpp"
#include "puspec/imaging.hpp"
#include "puspec/serialization.hpp"

namespace puspec::cli {

namespace fs = std::filesystem;

namespace {

fs::path prepare(const Context& ctx) {
  const fs::path dir(ctx.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorCode::io, "cannot create output directory '" + dir.string() + "': " + ec.message());
  return dir;
}

PUBasis load_basis(const BasisFlags& f, Manifest& m) {
  PUBasis basis = [&] {
    if (!f.file.empty()) {
      m.input(f.file);
      try {
        return basis_from_json(Json::parse(read_text(f.file)));
      } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::invalid_argument, "malformed basis file '" + f.file + "': " + e.what());
      }
    }
    return PUBasis({f.count, {f.strength, f.position}, f.offset_nm});
  }();
  const Illuminant& ill = illuminant_by_name(f.illuminant);
  if (ill.name != basis.illuminant_tag()) basis = compute_basis_colors(std::move(basis), ill);
  m.param("basis", basis_spec_to_json(basis.spec()));
  m.param("illuminant", basis.illuminant_tag());
  return basis;
}

ColorTarget target_of(const TargetFlags& t, Manifest& m) {
  if (!t.cx || !t.cy) fail(ErrorCode::invalid_argument, "--cx and --cy are required");
  const ColorTarget target{{*t.cx, *t.cy}, t.luminance};
  m.param("target", {{"c", chromaticity_to_json(target.c)}, {"Y", target.luminance}});
  return target;
}

TrianglePolicy policy_of(const std::string& p) {
  if (p == "first") return TrianglePolicy::first;
  if (p == "random") return TrianglePolicy::random_per_sample;
  if (p == "fixed") return TrianglePolicy::fixed_index;
  fail(ErrorCode::invalid_argument, "unknown triangle policy '" + p + "'");
}

void emit(const fs::path& file, const std::string& text, Manifest& m) {
  write_text(file, text);
  m.output(file);
}

}  // namespace

int cmd_basis(const BasisCommand& c, Context& ctx) {
  Manifest m("basis", ctx.argv);
  const fs::path dir = prepare(ctx);
  const PUBasis basis = m.time("build", [&] { return load_basis(c.basis, m); });
  const DesignMetrics metrics = m.time("metrics", [&] { return evaluate_design(basis, RgbSpace::srgb); });
  emit(dir / "basis.json", basis_to_json(basis).dump(2) + "\n", m);
  emit(dir / "gamut.csv", gamut_csv(basis_gamut(basis)), m);
  m.write(dir);
  ctx.out << "K=" << basis.size() << " excess_area=" << format_double(metrics.excess_area)
          << " smoothness_nm=" << format_double(metrics.smoothness_nm) << "\n";
  return 0;
}

int cmd_optimize(const OptimizeCommand& c, Context& ctx) {
  Manifest m("optimize", ctx.argv);
  const fs::path dir = prepare(ctx);
  WarpSearchOptions o;
  o.count = c.count;
  o.space = rgb_space_from_name(c.rgb);
  o.threshold_nm = c.threshold_nm;
  o.grid = c.grid;
  o.direction = smoothness_constraint_from_name(c.direction);
  o.boundary_offset_nm = c.offset_nm;
  o.threads = c.threads;
  m.param("K", o.count);
  m.param("rgb", std::string(to_string(o.space)));
  m.param("threshold_nm", o.threshold_nm);
  m.param("grid", o.grid);
  m.param("direction", std::string(to_string(o.direction)));
  m.param("offset_nm", o.boundary_offset_nm);

  const WarpSearchResult r = m.time("search", [&] { return optimize_warp(o); });
  emit(dir / "metrics.csv", metrics_csv(r), m);
  const Json best = {{"s", r.best.strength},
                     {"p", r.best.position},
                     {"excess_area", r.best_metrics.excess_area},
                     {"smoothness_nm", r.best_metrics.smoothness_nm}};
  emit(dir / "optimum.json", best.dump(2) + "\n", m);
  m.param("optimum", best);
  m.write(dir);
  ctx.out << "s=" << format_double(r.best.strength) << " p=" << format_double(r.best.position)
          << " excess_area=" << format_double(r.best_metrics.excess_area)
          << " smoothness_nm=" << format_double(r.best_metrics.smoothness_nm) << "\n";
  return 0;
}

int cmd_sample(const SampleCommand& c, Context& ctx) {
  Manifest m("sample", ctx.argv);
  const fs::path dir = prepare(ctx);
  const PUBasis basis = load_basis(c.basis, m);
  const ColorTarget target = target_of(c.target, m);
  SamplingOptions o;
  o.policy = policy_of(c.policy);
  o.fixed_index = c.triangle_index;
  o.threads = c.threads;
  m.param("count", c.count);
  m.param("seed", c.seed);
  m.param("policy", c.policy);
  m.param("triangle_index", c.triangle_index);

  const auto samples = m.time("sample", [&] { return sample_class(basis, target, c.count, c.seed, o); });
  emit(dir / "samples.json", samples_to_json(basis, target, samples).dump(2) + "\n", m);
  emit(dir / "spectra.csv", spectra_csv(basis, samples), m);
  m.write(dir);

  std::size_t met = 0;
  for (const auto& s : samples) met += s.luminance_met;
  const double ms = m.timing_ms("sample");
  const double fraction = samples.empty() ? 0.0 : static_cast<double>(met) / samples.size();
  ctx.out << "samples=" << samples.size() << " luminance_met=" << met
          << " fraction=" << format_double(fraction) << "\n";
  ctx.out << "timing: " << samples.size() << " samples in " << format_double(ms) << " ms ("
          << format_double(samples.empty() ? 0.0 : ms / samples.size()) << " ms/sample)\n";
  return 0;
}

int cmd_trajectory(const TrajectoryCommand& c, Context& ctx) {
  Manifest m("trajectory", ctx.argv);
  const fs::path dir = prepare(ctx);
  const PUBasis basis = load_basis(c.basis, m);
  std::vector<double> w = c.weights;
  if (w.empty()) {
    const ColorTarget target = target_of(c.target, m);
    const auto samples = sample_class(basis, target, c.index + 1, c.seed);
    w = samples.back().w;
    m.param("seed", c.seed);
    m.param("index", c.index);
  }
  m.param("w", w);
  const std::vector<double> depths = c.depths.empty() ? default_depth_grid() : c.depths;
  const DepthTrajectory t = m.time("trajectory", [&] {
    return depth_trajectory(basis.reconstruct(w), depths, illuminant_by_name(basis.illuminant_tag()));
  });
  emit(dir / "trajectory.csv", trajectory_csv(t), m);
  m.write(dir);
  for (std::size_t i = 0; i < t.depths.size(); ++i)
    if (t.depths[i] == 1.0)
      ctx.out << "d=1 x=" << format_double(t.points[i].x) << " y=" << format_double(t.points[i].y)
              << " Y=" << format_double(t.luminances[i]) << "\n";
  return 0;
}

int cmd_representatives(const RepresentativesCommand& c, Context& ctx) {
  Manifest m("representatives", ctx.argv);
  const fs::path dir = prepare(ctx);
  const PUBasis basis = load_basis(c.basis, m);
  const ColorTarget target = target_of(c.target, m);
  m.param("d_ref", c.d_ref);
  const RepresentativeSet set = m.time("representatives", [&] { return representative_set(basis, target, c.d_ref); });
  emit(dir / "representatives.json", representatives_to_json(set).dump(2) + "\n", m);
  m.write(dir);
  ctx.out << "entries=" << set.entries.size() << "\n";
  return 0;
}

int cmd_palette(const PaletteCommand& c, Context& ctx) {
  Manifest m("palette", ctx.argv);
  const fs::path dir = prepare(ctx);
  const PUBasis basis = load_basis(c.basis, m);
  const Illuminant& i1 = illuminant_by_name(c.i1);
  const Illuminant& i2 = illuminant_by_name(c.i2);
  TargetFlags tf = c.target;
  if (!tf.cx && !tf.cy) {
    const Chromaticity white = xyz_to_chromaticity(integrate_to_xyz(SpectralCurve::constant(1.0), i1));
    tf.cx = white.x;
    tf.cy = white.y;
  }
  const ColorTarget target = target_of(tf, m);
  PaletteOptions o;
  o.count = c.count;
  o.seed = c.seed;
  m.param("i1", i1.name);
  m.param("i2", i2.name);
  m.param("count", c.count);
  m.param("seed", c.seed);

  const auto palette = m.time("palette", [&] { return metameric_palette(basis, i1, i2, target, o); });
  Json pj = palette_to_json(palette, i1.name, i2.name, target);
  pj["basis"] = basis_spec_to_json(basis.spec());
  emit(dir / "palette.json", pj.dump(2) + "\n", m);
  m.write(dir);

  double spread = 0.0;
  for (const auto& a : palette)
    for (const auto& b : palette) {
      const Chromaticity p = xyz_to_chromaticity(a.color_under_i2);
      const Chromaticity q = xyz_to_chromaticity(b.color_under_i2);
      spread = std::max(spread, std::hypot(p.x - q.x, p.y - q.y));
    }
  ctx.out << "entries=" << palette.size() << " i2_spread=" << format_double(spread) << "\n";
  return 0;
}

int cmd_hide(const HideCommand& c, Context& ctx) {
  Manifest m("hide", ctx.argv);
  const fs::path dir = prepare(ctx);
  if (c.mask.empty() == c.image.empty()) fail(ErrorCode::invalid_argument, "give exactly one of --mask or --image");
  m.input(c.palette);
  Json pj;
  try {
    pj = Json::parse(read_text(c.palette));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::invalid_argument, "malformed palette file '" + c.palette + "': " + e.what());
  }
  BasisFlags flags = c.basis;
  if (flags.file.empty() && pj.contains("basis")) {
    const BasisSpec spec = basis_spec_from_json(pj.at("basis"));
    flags.count = spec.count;
    flags.strength = spec.warp.strength;
    flags.position = spec.warp.position;
    flags.offset_nm = spec.boundary_offset_nm;
  }
  const PUBasis basis = load_basis(flags, m);
  const auto palette = palette_from_json(pj);
  const Illuminant& i1 = illuminant_by_name(pj.value("i1", std::string("D65")));
  const Illuminant& i2 = illuminant_by_name(pj.value("i2", std::string("F2")));
  for (const auto& e : palette)
    if (e.w.size() != static_cast<std::size_t>(basis.size()))
      fail(ErrorCode::invalid_argument, "palette weights do not match the basis size");

  ImagePair images;
  if (!c.mask.empty()) {
    m.input(c.mask);
    if (palette.size() < 2) fail(ErrorCode::invalid_argument, "pattern needs two palette entries");
    std::size_t a = 0, b = 1;
    if (c.entry_a >= 0 || c.entry_b >= 0) {
      if (c.entry_a < 0 || c.entry_b < 0 || static_cast<std::size_t>(c.entry_a) >= palette.size() ||
          static_cast<std::size_t>(c.entry_b) >= palette.size())
        fail(ErrorCode::index_out_of_range, "--a/--b must both index the palette");
      a = static_cast<std::size_t>(c.entry_a);
      b = static_cast<std::size_t>(c.entry_b);
    } else {
      double best = -1.0;
      for (std::size_t i = 0; i < palette.size(); ++i)
        for (std::size_t j = i + 1; j < palette.size(); ++j) {
          const Chromaticity p = xyz_to_chromaticity(palette[i].color_under_i2);
          const Chromaticity q = xyz_to_chromaticity(palette[j].color_under_i2);
          const double d = std::hypot(p.x - q.x, p.y - q.y);
          if (d > best) best = d, a = i, b = j;
        }
    }
    m.param("entries", {a, b});
    const GrayImage mask = read_gray_png(c.mask);
    images = m.time("render", [&] { return hidden_pattern(mask, palette[a].w, palette[b].w, basis, i1, i2); });
  } else {
    m.input(c.image);
    m.param("levels", c.levels);
    const GrayImage gray = read_gray_png(c.image);
    const auto chosen = select_by_luminance(palette, c.levels);
    images = m.time("render", [&] { return hidden_image(gray, chosen, basis, i1, i2); });
  }
  const fs::path p1 = dir / ("hidden_" + i1.name + ".png");
  const fs::path p2 = dir / ("hidden_" + i2.name + ".png");
  write_png(p1, images.under_i1);
  write_png(p2, images.under_i2);
  m.output(p1);
  m.output(p2);
  m.write(dir);
  ctx.out << "wrote " << p1.string() << " " << p2.string() << "\n";
  return 0;
}

}  // namespace puspec::cli
