#pragma once

#include <cstdint>

namespace seasons {

// Index of a sampling opportunity. Tick i occurs at i * tick_period seconds.
using Tick = std::int64_t;

inline constexpr double kMicro = 1e-6;
inline constexpr double kMilli = 1e-3;

}  // namespace seasons
