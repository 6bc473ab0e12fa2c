// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "puspec/serialization.hpp"
#include "puspec_cli/cli.hpp"

namespace {

using namespace puspec;
namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "puspec");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("puspec_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, HelpAndUsage) {
  EXPECT_EQ(run({"--help"}).code, cli::kSuccess);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  const Outcome bad = run({"basis", "-K", "2"});
  EXPECT_EQ(bad.code, cli::kUsage);
  EXPECT_EQ(Json::parse(bad.err).at("error"), "usage");
}

TEST_F(CliTest, BasisWritesArtifactsAndManifest) {
  const Outcome r = run({"basis", "-K", "7", "-s", "0.66", "-p", "0.39", "-o", path("b")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("excess_area="), std::string::npos);
  EXPECT_TRUE(fs::exists(path("b/gamut.csv")));
  const Json basis = Json::parse(read_text(path("b/basis.json")));
  EXPECT_EQ(basis.at("spec").at("K"), 7);
  const Json m = Json::parse(read_text(path("b/manifest.json")));
  EXPECT_EQ(m.at("command"), "basis");
  EXPECT_EQ(m.at("parameters").at("basis").at("s"), 0.66);
  EXPECT_TRUE(m.contains("timings_ms"));
}

TEST_F(CliTest, ErrorsMapToExitCodes) {
  const Outcome gamut = run({"sample", "-K", "5", "--cx", "0.9", "--cy", "0.05", "-o", path("s")});
  EXPECT_EQ(gamut.code, cli::kInfeasible);
  EXPECT_EQ(Json::parse(gamut.err).at("error"), "out_of_gamut");
  EXPECT_EQ(run({"hide", "--palette", path("none.json"), "--mask", path("m.png"), "-o", path("h")}).code, cli::kIo);
  EXPECT_EQ(run({"sample", "--cx", "0.3"}).code, cli::kUsage);
  EXPECT_EQ(run({"sample", "--cx", "0.3", "--cy", "0.3", "--policy", "sideways", "-o", path("p")}).code, cli::kUsage);
}

TEST_F(CliTest, SampleRerunsAreByteIdentical) {
  const std::vector<std::string> args{"sample", "-K", "5", "--cx", "0.41", "--cy", "0.42", "--Y", "0.57",
                                      "-n", "200", "--seed", "42"};
  auto a = args, b = args;
  a.insert(a.end(), {"-o", path("a")});
  b.insert(b.end(), {"-o", path("b"), "--threads", "3"});
  ASSERT_EQ(run(a).code, 0);
  ASSERT_EQ(run(b).code, 0);
  EXPECT_EQ(read_text(path("a/samples.json")), read_text(path("b/samples.json")));
  EXPECT_EQ(read_text(path("a/spectra.csv")), read_text(path("b/spectra.csv")));
  const Json s = Json::parse(read_text(path("a/samples.json")));
  EXPECT_EQ(s.at("samples").size(), 200u);
}

TEST_F(CliTest, ReplayReproducesOutputs) {
  ASSERT_EQ(run({"sample", "-K", "7", "--cx", "0.33", "--cy", "0.35", "-n", "20", "--seed", "9", "-o", path("first")}).code, 0);
  const Outcome r = run({"replay", path("first/manifest.json"), "-o", path("second")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_text(path("first/samples.json")), read_text(path("second/samples.json")));
  EXPECT_EQ(run({"replay", path("missing.json")}).code, cli::kIo);
}

TEST_F(CliTest, TrajectoryFromWeights) {
  const Outcome r = run({"trajectory", "-K", "5", "--w", "0.1,0.5,0.9,0.4,0.2", "--depths", "1,2,4", "-o", path("t")});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = read_text(path("t/trajectory.csv"));
  EXPECT_EQ(csv.substr(0, 8), "d,x,y,Y\n");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

TEST_F(CliTest, OptimizeWritesMetricsMap) {
  const Outcome r = run({"optimize", "-K", "7", "--grid", "4", "-o", path("o")});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = read_text(path("o/metrics.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 17);
  EXPECT_TRUE(Json::parse(read_text(path("o/optimum.json"))).contains("s"));
  EXPECT_EQ(run({"optimize", "--threshold", "1000", "--grid", "2", "-o", path("o2")}).code, cli::kInfeasible);
}

TEST_F(CliTest, RepresentativesOrderedByHue) {
  const Outcome r = run({"representatives", "-K", "11", "-s", "0.66", "-p", "0.39", "--cx", "0.38", "--cy", "0.45",
                     "--Y", "0.46", "-o", path("r")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(read_text(path("r/representatives.json")));
  const auto& e = j.at("entries");
  ASSERT_GT(e.size(), 1u);
  for (std::size_t i = 1; i < e.size(); ++i) EXPECT_GE(e[i - 1].at("hue_rad").get<double>(), e[i].at("hue_rad").get<double>());
}

TEST_F(CliTest, PaletteThenHide) {
  ASSERT_EQ(run({"palette", "-K", "7", "-n", "12", "--Y", "0.5", "-o", path("pal")}).code, 0);
  const Json pal = Json::parse(read_text(path("pal/palette.json")));
  EXPECT_EQ(pal.at("entries").size(), 12u);
  const Outcome hide = run({"hide", "--palette", path("pal/palette.json"), "-o", path("h")});
  EXPECT_EQ(hide.code, cli::kUsage);
}

}  // namespace
