// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace puspec {

enum class ErrorCode {
  invalid_argument,
  grid_mismatch,
  undefined_chromaticity,
  out_of_gamut,
  boundary_singular,
  degenerate_triangle,
  infeasible,
  index_out_of_range,
  length_mismatch,
  constraint_infeasible,
  io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this type; `code()` is stable
/// and used by the CLI and the service to pick exit codes / HTTP statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace puspec
