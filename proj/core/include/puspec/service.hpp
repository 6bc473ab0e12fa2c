// SPDX-License-Identifier: Apache-2.0

// Stateless request handlers behind the local HTTP API. Transport-free so
// they can be exercised directly.

#pragma once

#include <map>
#include <string>

#include "puspec/error.hpp"
#include "puspec/serialization.hpp"

namespace puspec::service {

inline constexpr std::size_t kMaxSamplesPerRequest = 100000;
inline constexpr std::size_t kSpectrumStride = 5;  // 1 nm grid -> 5 nm payloads

struct Response {
  int status = 200;
  Json body;
};

using Query = std::map<std::string, std::string>;

int http_status(ErrorCode code);
Response error_response(ErrorCode code, const std::string& message);

Response get_basis(const Query& query);
Response post_sample(const Json& request);
Response post_trajectory(const Json& request);
Response post_representatives(const Json& request);
Response post_pick_hue(const Json& request);
Response post_palette(const Json& request);

/// Routes a request; parse and domain errors become {code, message} bodies.
Response dispatch(const std::string& method, const std::string& path, const Query& query,
                  const std::string& body);

}  // namespace puspec::service
