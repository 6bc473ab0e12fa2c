// SPDX-License-Identifier: Apache-2.0

#include "puspec_cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "puspec/error.hpp"
#include "puspec/serialization.hpp"
#include "puspec/version.hpp"

namespace puspec::cli {

namespace {

void add_basis_flags(CLI::App* cmd, BasisFlags& f) {
  cmd->add_option("-K", f.count, "number of basis functions")->check(CLI::Range(3, 64));
  cmd->add_option("-s,--strength", f.strength, "warp strength in [0, 1)");
  cmd->add_option("-p,--position", f.position, "warp position in (0, 1)");
  cmd->add_option("--offset", f.offset_nm, "boundary knot offset (nm)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--illuminant", f.illuminant, "illuminant premultiplied into basis colors (E, D65, F2)");
  cmd->add_option("--basis", f.file, "basis.json from the basis command (overrides -K/-s/-p/--offset)");
}

void add_target_flags(CLI::App* cmd, TargetFlags& t, bool required) {
  auto* x = cmd->add_option("--cx", t.cx, "target chromaticity x");
  auto* y = cmd->add_option("--cy", t.cy, "target chromaticity y");
  if (required) {
    x->required();
    y->required();
  }
  cmd->add_option("--Y,--luminance", t.luminance, "target luminance F_Y")->check(CLI::Range(0.0, 1.0));
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::out_of_gamut:
    case ErrorCode::boundary_singular:
    case ErrorCode::infeasible:
    case ErrorCode::constraint_infeasible:
    case ErrorCode::undefined_chromaticity:
      return kInfeasible;
    case ErrorCode::io:
      return kIo;
    default:
      return kUsage;
  }
}

void report(std::ostream& err, const std::string& code, const std::string& message) {
  err << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int replay(const std::string& manifest_path, const std::string& out_dir, std::ostream& out,
           std::ostream& err) {
  const Json m = Json::parse(read_text(manifest_path));
  auto argv = m.at("argv").get<std::vector<std::string>>();
  if (argv.size() < 2) fail(ErrorCode::invalid_argument, "manifest has no command line");
  if (!out_dir.empty()) {
    bool replaced = false;
    for (std::size_t i = 0; i + 1 < argv.size(); ++i)
      if (argv[i] == "--out" || argv[i] == "-o") {
        argv[i + 1] = out_dir;
        replaced = true;
      }
    if (!replaced) {
      argv.push_back("--out");
      argv.push_back(out_dir);
    }
  }
  return run_parsed(argv, out, err);
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral partition-of-unity upsampling toolkit", "puspec"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string out_dir = ".";
  auto with_out = [&](CLI::App* cmd) { cmd->add_option("-o,--out", out_dir, "output directory"); };

  BasisCommand basis_cmd;
  auto* basis = app.add_subcommand("basis", "build a basis and report its excess area and smoothness");
  add_basis_flags(basis, basis_cmd.basis);
  with_out(basis);

  OptimizeCommand opt_cmd;
  auto* optimize = app.add_subcommand("optimize", "grid-search warp parameters");
  optimize->add_option("-K", opt_cmd.count, "number of basis functions")->check(CLI::Range(4, 64));
  optimize->add_option("--rgb", opt_cmd.rgb, "srgb or wide");
  optimize->add_option("--threshold", opt_cmd.threshold_nm, "smoothness threshold (nm)");
  optimize->add_option("--grid", opt_cmd.grid, "grid resolution per axis")->check(CLI::Range(1, 1024));
  optimize->add_option("--direction", opt_cmd.direction, "at-least or below");
  optimize->add_option("--offset", opt_cmd.offset_nm)->check(CLI::NonNegativeNumber);
  optimize->add_option("--threads", opt_cmd.threads, "worker threads (0 = hardware)");
  with_out(optimize);

  SampleCommand sample_cmd;
  auto* sample = app.add_subcommand("sample", "sample the equivalence class of a target color");
  add_basis_flags(sample, sample_cmd.basis);
  add_target_flags(sample, sample_cmd.target, true);
  sample->add_option("-n,--count", sample_cmd.count, "number of class members");
  sample->add_option("--seed", sample_cmd.seed, "random seed");
  sample->add_option("--policy", sample_cmd.policy, "first, random or fixed");
  sample->add_option("--triangle-index", sample_cmd.triangle_index, "enclosing triangle for the fixed policy");
  sample->add_option("--threads", sample_cmd.threads, "worker threads (0 = hardware)");
  with_out(sample);

  TrajectoryCommand traj_cmd;
  auto* trajectory = app.add_subcommand("trajectory", "chromaticity of a transmittance versus optical depth");
  add_basis_flags(trajectory, traj_cmd.basis);
  add_target_flags(trajectory, traj_cmd.target, false);
  trajectory->add_option("--w", traj_cmd.weights, "basis weights (comma separated)")->delimiter(',');
  trajectory->add_option("--seed", traj_cmd.seed, "random seed");
  trajectory->add_option("--index", traj_cmd.index, "class sample index");
  trajectory->add_option("--depths", traj_cmd.depths, "optical depths (comma separated)")->delimiter(',');
  with_out(trajectory);

  RepresentativesCommand rep_cmd;
  auto* reps = app.add_subcommand("representatives", "one spectrum per enclosing triangle, ordered by hue");
  add_basis_flags(reps, rep_cmd.basis);
  add_target_flags(reps, rep_cmd.target, true);
  reps->add_option("--d-ref", rep_cmd.d_ref, "reference optical depth")->check(CLI::PositiveNumber);
  with_out(reps);

  PaletteCommand pal_cmd;
  auto* palette = app.add_subcommand("palette", "metamers under one illuminant, seen under another");
  add_basis_flags(palette, pal_cmd.basis);
  add_target_flags(palette, pal_cmd.target, false);
  pal_cmd.target.luminance = 0.8;
  palette->add_option("--i1", pal_cmd.i1, "matching illuminant");
  palette->add_option("--i2", pal_cmd.i2, "viewing illuminant");
  palette->add_option("-n,--count", pal_cmd.count, "number of palette entries");
  palette->add_option("--seed", pal_cmd.seed, "random seed");
  with_out(palette);

  HideCommand hide_cmd;
  auto* hide = app.add_subcommand("hide", "render a hidden pattern or image from a palette");
  add_basis_flags(hide, hide_cmd.basis);
  hide->add_option("--palette", hide_cmd.palette, "palette.json from the palette command")->required();
  hide->add_option("--mask", hide_cmd.mask, "binary mask PNG");
  hide->add_option("--image", hide_cmd.image, "grayscale PNG");
  hide->add_option("--a", hide_cmd.entry_a, "palette entry for mask < 0.5");
  hide->add_option("--b", hide_cmd.entry_b, "palette entry for mask >= 0.5");
  hide->add_option("--levels", hide_cmd.levels, "palette entries blended by gray level")->check(CLI::Range(3, 64));
  with_out(hide);

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve_cmd = app.add_subcommand("serve", "serve the HTTP API");
  serve_cmd->add_option("--host", host, "bind address");
  serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));

  std::string manifest_path, replay_out;
  auto* replay_cmd = app.add_subcommand("replay", "re-run the command recorded in a manifest");
  replay_cmd->add_option("manifest", manifest_path)->required();
  replay_cmd->add_option("-o,--out", replay_out, "output directory override");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    if (code == 0) {
      out << o.str();
      return kSuccess;
    }
    report(err, "usage", e.what());
    return kUsage;
  }

  Context ctx{args, out, out_dir};
  if (*basis) return cmd_basis(basis_cmd, ctx);
  if (*optimize) return cmd_optimize(opt_cmd, ctx);
  if (*sample) return cmd_sample(sample_cmd, ctx);
  if (*trajectory) return cmd_trajectory(traj_cmd, ctx);
  if (*reps) return cmd_representatives(rep_cmd, ctx);
  if (*palette) return cmd_palette(pal_cmd, ctx);
  if (*hide) return cmd_hide(hide_cmd, ctx);
  if (*serve_cmd) return serve(host, port, out);
  if (*replay_cmd) return replay(manifest_path, replay_out, out, err);
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_parsed(args, out, err);
  } catch (const Error& e) {
    report(err, std::string(to_string(e.code())), e.what());
    return exit_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    report(err, "invalid_argument", e.what());
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    report(err, "io", e.what());
    return kIo;
  } catch (const std::exception& e) {
    report(err, "internal", e.what());
    return 1;
  }
}

}  // namespace puspec::cli
