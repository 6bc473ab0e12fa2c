// SPDX-License-Identifier: Apache-2.0

#include "manifest.hpp"

#include "puspec/version.hpp"

namespace puspec::cli {

Manifest::Manifest(std::string command, std::vector<std::string> argv)
    : command_(std::move(command)), argv_(std::move(argv)) {}

Json Manifest::to_json() const {
  return {{"tool", "puspec"},
          {"version", kVersion},
          {"command", command_},
          {"argv", argv_},
          {"parameters", params_},
          {"inputs", inputs_},
          {"outputs", outputs_},
          {"timings_ms", timings_}};
}

void Manifest::write(const std::filesystem::path& dir) const {
  write_text(dir / "manifest.json", to_json().dump(2) + "\n");
}

}  // namespace puspec::cli
