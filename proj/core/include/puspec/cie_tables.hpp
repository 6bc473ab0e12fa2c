// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>

namespace puspec::cie {

inline constexpr double kTableStart = 380.0;
inline constexpr double kTableStep = 5.0;
inline constexpr std::size_t kTableSize = 81;  // 380..780 nm

extern const std::array<std::array<double, 3>, kTableSize> kCmf1931;
extern const std::array<double, kTableSize> kD65;
extern const std::array<double, kTableSize> kF2;

}  // namespace puspec::cie
