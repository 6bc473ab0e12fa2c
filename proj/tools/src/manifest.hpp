// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "puspec/serialization.hpp"

namespace puspec::cli {

/// Run record written next to every command's outputs.
class Manifest {
 public:
  Manifest(std::string command, std::vector<std::string> argv);

  void param(const std::string& key, Json value) { params_[key] = std::move(value); }
  void input(const std::filesystem::path& p) { inputs_.push_back(p.string()); }
  void output(const std::filesystem::path& p) { outputs_.push_back(p.string()); }

  template <class F>
  decltype(auto) time(const std::string& phase, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    struct Stop {
      Manifest* m;
      std::string phase;
      std::chrono::steady_clock::time_point t0;
      ~Stop() {
        m->timings_[phase] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      }
    } stop{this, phase, t0};
    return f();
  }

  double timing_ms(const std::string& phase) const { return timings_.value(phase, 0.0); }

  Json to_json() const;
  /// Writes manifest.json into `dir`.
  void write(const std::filesystem::path& dir) const;

 private:
  std::string command_;
  std::vector<std::string> argv_;
  Json params_ = Json::object();
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
  Json timings_ = Json::object();
};

}  // namespace puspec::cli
