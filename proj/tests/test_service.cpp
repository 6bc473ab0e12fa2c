// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "puspec/service.hpp"
#include "support.hpp"

namespace {

using namespace puspec;
using service::dispatch;

TEST(Service, BasisQuery) {
  const auto r = dispatch("GET", "/basis", {{"K", "5"}, {"s", "0.66"}, {"p", "0.39"}}, "");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body.at("spec").at("K"), 5);
  EXPECT_EQ(r.body.at("functions_5nm").size(), 5u);
  EXPECT_EQ(r.body.at("functions_5nm")[0].size(), 64u);
  EXPECT_EQ(r.body.at("gamut").size(), 5u);
  EXPECT_EQ(r.body.at("srgb").size(), 3u);
}

TEST(Service, BadQueryIs400) {
  EXPECT_EQ(dispatch("GET", "/basis", {{"K", "seven"}}, "").status, 400);
  EXPECT_EQ(dispatch("GET", "/basis", {{"K", "2"}}, "").status, 400);
}

TEST(Service, SampleRoundTrip) {
  const auto r = dispatch("POST", "/sample", {},
                          R"({"basis":{"K":7},"target":{"c":[0.33,0.35],"Y":0.3},"count":4,"seed":5})");
  ASSERT_EQ(r.status, 200) << r.body.dump();
  ASSERT_EQ(r.body.at("samples").size(), 4u);
  const PUBasis basis(BasisSpec{7});
  for (const auto& s : r.body.at("samples")) {
    const auto w = s.at("w").get<std::vector<double>>();
    EXPECT_LT(testkit::dist(xyz_to_chromaticity(basis.color_of(w)), {0.33, 0.35}), 1e-9);
    EXPECT_EQ(s.at("spectrum").at("value").size(), 64u);
  }
  EXPECT_TRUE(r.body.at("feasibility").at("feasible").get<bool>());
  const auto again = dispatch("POST", "/sample", {},
                              R"({"basis":{"K":7},"target":{"c":[0.33,0.35],"Y":0.3},"count":4,"seed":5})");
  EXPECT_EQ(again.body.dump(), r.body.dump());
}

TEST(Service, DomainErrorsAre422) {
  const auto r = dispatch("POST", "/sample", {}, R"({"target":{"c":[0.9,0.05],"Y":0.3}})");
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(r.body.at("code"), "out_of_gamut");
}

TEST(Service, MalformedRequestsAre400) {
  EXPECT_EQ(dispatch("POST", "/sample", {}, "{oops").status, 400);
  EXPECT_EQ(dispatch("POST", "/sample", {}, "[1,2]").status, 400);
  EXPECT_EQ(dispatch("POST", "/sample", {}, R"({"target":{"c":[0.3],"Y":0.3}})").status, 400);
  EXPECT_EQ(dispatch("POST", "/sample", {}, R"({"target":{"c":[0.3,0.3],"Y":0.3},"count":1000000})").status, 400);
  EXPECT_EQ(dispatch("POST", "/sample", {}, R"({"target":{"c":[0.3,0.3],"Y":"x"}})").status, 400);
}

TEST(Service, UnknownRoutesAre404) {
  EXPECT_EQ(dispatch("POST", "/nope", {}, "{}").status, 404);
  EXPECT_EQ(dispatch("GET", "/sample", {}, "").status, 404);
}

TEST(Service, TrajectoryAndHue) {
  const auto t = dispatch("POST", "/trajectory", {}, R"({"w":[0.1,0.5,0.9,0.9,0.5,0.2,0.1],"depths":[1,2,4]})");
  ASSERT_EQ(t.status, 200) << t.body.dump();
  EXPECT_EQ(t.body.at("points").size(), 3u);
  const std::string req = R"({"basis":{"K":11,"s":0.66,"p":0.39},"target":{"c":[0.38,0.45],"Y":0.46}})";
  const auto reps = dispatch("POST", "/representatives", {}, req);
  ASSERT_EQ(reps.status, 200) << reps.body.dump();
  EXPECT_GT(reps.body.at("entries").size(), 1u);
  Json pick = Json::parse(req);
  pick["hue_rad"] = 1.0;
  const auto h = dispatch("POST", "/pick_hue", {}, pick.dump());
  ASSERT_EQ(h.status, 200) << h.body.dump();
  EXPECT_NEAR(h.body.at("xy_d1")[0].get<double>(), 0.38, 1e-9);
  EXPECT_EQ(dispatch("POST", "/pick_hue", {}, req).status, 400);
}

TEST(Service, PaletteDefaults) {
  const auto r = dispatch("POST", "/palette", {}, R"({"count":4,"target":{"c":[0.3127,0.329],"Y":0.5}})");
  ASSERT_EQ(r.status, 200) << r.body.dump();
  EXPECT_EQ(r.body.at("entries").size(), 4u);
  EXPECT_EQ(dispatch("POST", "/palette", {}, R"({"count":5000})").status, 400);
}

TEST(Service, StatusMapping) {
  EXPECT_EQ(service::http_status(ErrorCode::io), 500);
  EXPECT_EQ(service::http_status(ErrorCode::constraint_infeasible), 422);
  EXPECT_EQ(service::http_status(ErrorCode::length_mismatch), 400);
}

}  // namespace
